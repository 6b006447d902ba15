#include "mdlab/discrepancy.hpp"

#include <algorithm>
#include <complex>

#include "mdlab/errors.hpp"
#include "mdlab/expsum.hpp"

namespace mdlab::discrepancy {

SamplePoints SamplePoints::from_values(std::vector<double> v) {
    for (double x : v)
        if (!(x >= 0.0 && x < 1.0))
            throw parameter_error("sample point outside [0,1)");
    std::sort(v.begin(), v.end());
    return SamplePoints{std::move(v)};
}

SamplePoints fractional_parts(const std::vector<Int>& terms, const AlphaValue& alpha) {
    std::vector<double> vals;
    vals.reserve(terms.size());
    for (const Int& a : terms)
        vals.push_back(ratio_as_double(alpha.residue(a), alpha.den()));
    std::sort(vals.begin(), vals.end());
    return SamplePoints{std::move(vals)};
}

double star_discrepancy(const SamplePoints& pts) {
    const std::size_t n = pts.n();
    if (n == 0) throw parameter_error("star_discrepancy: empty point set");
    const double inv_n = 1.0 / double(n);
    double best = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        double x = pts.values[i - 1];
        best = std::max(best, double(i) * inv_n - x);
        best = std::max(best, x - double(i - 1) * inv_n);
    }
    return best;
}

double extreme_discrepancy(const SamplePoints& pts) {
    const std::size_t n = pts.n();
    if (n == 0) throw parameter_error("extreme_discrepancy: empty point set");
    const double inv_n = 1.0 / double(n);

    // surplus: (j-i+1)/N - x_(j) + x_(i) = [j/N - x_(j)] + [x_(i) - (i-1)/N]
    double plus = 0.0, pmax = -1.0;
    for (std::size_t j = 1; j <= n; ++j) {
        double x = pts.values[j - 1];
        pmax = std::max(pmax, x - double(j - 1) * inv_n);
        plus = std::max(plus, double(j) * inv_n - x + pmax);
    }

    // deficit: (x_(j)-x_(i)) - (j-i-1)/N = [x_(j) - (j-1)/N] + [i/N - x_(i)],
    // with x_(0) = 0 and x_(N+1) = 1 as admissible endpoints
    double minus = 0.0, qmax = 0.0;  // i = 0 contributes 0
    for (std::size_t j = 1; j <= n + 1; ++j) {
        double x = (j <= n) ? pts.values[j - 1] : 1.0;
        minus = std::max(minus, x - double(j - 1) * inv_n + qmax);
        qmax = std::max(qmax, double(j) * inv_n - x);
    }

    return std::max(plus, minus);
}

std::vector<ProfilePoint> discrepancy_profile(const sequences::SequenceSpec& spec,
                                              const AlphaValue& alpha,
                                              const std::vector<std::size_t>& checkpoints) {
    if (checkpoints.empty()) throw parameter_error("discrepancy_profile: no checkpoints");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] == 0) throw parameter_error("discrepancy_profile: checkpoint 0");
        if (i && checkpoints[i] <= checkpoints[i - 1])
            throw parameter_error("discrepancy_profile: checkpoints must increase");
    }

    const std::size_t n_max = checkpoints.back();
    std::vector<Int> terms = sequences::generate(spec, n_max);
    std::vector<double> vals;
    vals.reserve(n_max);
    for (const Int& a : terms)
        vals.push_back(ratio_as_double(alpha.residue(a), alpha.den()));

    std::vector<ProfilePoint> out;
    out.reserve(checkpoints.size());
    for (std::size_t n : checkpoints) {
        std::vector<double> prefix(vals.begin(), vals.begin() + n);
        std::sort(prefix.begin(), prefix.end());
        double d = extreme_discrepancy(SamplePoints{std::move(prefix)});
        out.push_back({n, d, double(n) * d});
    }
    return out;
}

double koksma_lower_bound(const std::vector<Int>& terms, const AlphaValue& alpha,
                          long h_max) {
    if (h_max < 1) throw parameter_error("koksma_lower_bound: h_max must be >= 1");
    double best = 0.0;
    Int r = 0;  // H*p mod q, kept incrementally
    for (long h = 1; h <= h_max; ++h) {
        r += alpha.num();
        if (r >= alpha.den()) r -= alpha.den();
        Rat x(r, alpha.den());
        std::complex<double> s = expsum::eval_point(terms, x);
        best = std::max(best, std::abs(s) / (4.0 * double(h)));
    }
    return best;
}

}  // namespace mdlab::discrepancy
