#include "mdlab/cfrac.hpp"

#include <algorithm>
#include <cmath>

#include "mdlab/discrepancy.hpp"
#include "mdlab/errors.hpp"

namespace mdlab::cfrac {

namespace {

void push_convergent(CFracExpansion& e, const Int& coeff) {
    if (e.p.empty()) {
        e.p.push_back(coeff);
        e.q.push_back(1);
        return;
    }
    std::size_t i = e.p.size();
    Int pp = (i >= 2) ? e.p[i - 2] : Int(1);
    Int qq = (i >= 2) ? e.q[i - 2] : Int(0);
    e.p.push_back(coeff * e.p[i - 1] + pp);
    e.q.push_back(coeff * e.q[i - 1] + qq);
}

}  // namespace

Int CFracExpansion::coeff(std::size_t m) const {
    if (m == 0) return b0;
    if (m <= b.size()) return b[m - 1];
    if (terminated) return 0;
    throw certification_error("continued fraction coefficient b_" + std::to_string(m) +
                              " not certified");
}

Rat CFracExpansion::fold() const {
    Rat x(b.empty() ? Int(0) : b.back());
    for (std::size_t i = b.size(); i-- > 1;) x = Rat(b[i - 1]) + 1 / x;
    Rat out = b.empty() ? Rat(b0) : Rat(b0) + 1 / x;
    out.canonicalize();
    return out;
}

CFracExpansion cf_expand(const Rat& x, std::size_t max_terms) {
    if (!(x > 0)) throw parameter_error("cf_expand: x must be positive");
    CFracExpansion e;
    e.b0 = floor_rat(x);
    push_convergent(e, e.b0);
    Rat rem = x - Rat(e.b0);
    rem.canonicalize();
    while (rem != 0 && e.b.size() < max_terms) {
        Rat inv = 1 / rem;
        inv.canonicalize();
        Int coeff = floor_rat(inv);
        e.b.push_back(coeff);
        push_convergent(e, coeff);
        rem = inv - Rat(coeff);
        rem.canonicalize();
    }
    e.terminated = (rem == 0);
    e.certified_count = e.b.size();
    return e;
}

CFracExpansion cf_expand_interval(const Rat& lo, const Rat& hi, std::size_t max_terms) {
    if (!(lo > 0)) throw parameter_error("cf_expand_interval: interval must be positive");
    if (lo > hi) throw parameter_error("cf_expand_interval: lo > hi");
    if (lo == hi) return cf_expand(lo, max_terms);

    CFracExpansion e;
    e.terminated = false;
    Rat a = lo, b = hi;  // endpoints of the current tail
    Int fa = floor_rat(a), fb = floor_rat(b);
    if (fa != fb)
        throw certification_error("cf_expand_interval: interval too wide to certify b_1");
    e.b0 = fa;
    push_convergent(e, e.b0);

    while (e.b.size() < max_terms) {
        Rat ra = a - Rat(fa), rb = b - Rat(fb);
        ra.canonicalize();
        rb.canonicalize();
        // a rational endpoint hitting an exact integer ends certification
        if (ra == 0 || rb == 0) break;
        // invert and swap: tail intervals reverse orientation
        Rat na = 1 / rb, nb = 1 / ra;
        a = na;
        b = nb;
        fa = floor_rat(a);
        fb = floor_rat(b);
        if (fa != fb) break;
        e.b.push_back(fa);
        push_convergent(e, fa);
    }
    if (e.b.empty())
        throw certification_error("cf_expand_interval: interval too wide to certify b_1");
    e.certified_count = e.b.size();
    return e;
}

Int s_l_statistic(const Rat& alpha, long long beta, long scale) {
    if (beta < 2) throw parameter_error("s_l_statistic: beta must be >= 2");
    if (scale < 0) throw parameter_error("s_l_statistic: L must be >= 0");
    if (scale == 0) return 0;
    if (!(alpha > 0)) throw parameter_error("s_l_statistic: alpha must be positive");

    Int total = 0;
    Rat x = alpha;
    for (long k = 1; k <= scale; ++k) {
        x = x * (long)beta;
        x.canonicalize();
        CFracExpansion e = cf_expand(x, std::size_t(scale));
        for (std::size_t m = 1; m <= std::size_t(scale); ++m) total += e.coeff(m);
    }
    return total;
}

Int s_l_statistic(const Enclosure& enclosure, long long beta, long scale,
                  unsigned start_bits, unsigned max_bits) {
    if (beta < 2) throw parameter_error("s_l_statistic: beta must be >= 2");
    if (scale < 0) throw parameter_error("s_l_statistic: L must be >= 0");
    if (scale == 0) return 0;

    // Default start: 192 bits plus the bits the dilation beta^L consumes.
    unsigned log2_beta = 0;  // ceil(log2 beta)
    while ((1ll << log2_beta) < beta) ++log2_beta;
    unsigned bits = start_bits ? start_bits : 192u + unsigned(scale) * log2_beta;

    for (; bits <= max_bits; bits *= 2) {
        auto [lo, hi] = enclosure(bits);
        if (lo > hi) throw parameter_error("s_l_statistic: enclosure returned lo > hi");
        Int total = 0;
        bool certified = true;
        Rat a = lo, b = hi;
        for (long k = 1; k <= scale && certified; ++k) {
            a = a * (long)beta;
            b = b * (long)beta;
            a.canonicalize();
            b.canonicalize();
            CFracExpansion e;
            try {
                e = cf_expand_interval(a, b, std::size_t(scale));
            } catch (const certification_error&) {
                certified = false;
                break;
            }
            if (e.certified_count < std::size_t(scale) && !e.terminated) {
                certified = false;
                break;
            }
            for (std::size_t m = 1; m <= std::size_t(scale); ++m) total += e.coeff(m);
        }
        if (certified) return total;
    }
    throw certification_error("s_l_statistic: precision cap reached before all " +
                              std::to_string(scale) + "^2 coefficients certified");
}

KroneckerRecord kronecker_nd(const AlphaValue& alpha, std::size_t n) {
    if (n == 0) throw parameter_error("kronecker_nd: n must be >= 1");

    std::vector<double> vals;
    vals.reserve(n);
    Int res = 0;
    vals.push_back(0.0);  // j = 0
    for (std::size_t j = 1; j < n; ++j) {
        res += alpha.num();
        if (res >= alpha.den()) res -= alpha.den();
        vals.push_back(ratio_as_double(res, alpha.den()));
    }
    std::sort(vals.begin(), vals.end());
    double d = discrepancy::extreme_discrepancy(discrepancy::SamplePoints{std::move(vals)});

    KroneckerRecord rec;
    rec.n = n;
    rec.nd_n = double(n) * d;
    rec.quotient_sum = 0;
    rec.m_used = 0;
    if (alpha.num() != 0 && n > 1) {  // q_0 = 1 already covers n = 1: M = 0
        // expand until q_M >= n or the rational expansion ends
        CFracExpansion e = cf_expand(alpha.value(), n + 64);
        for (std::size_t i = 1; i < e.q.size(); ++i) {
            rec.quotient_sum += e.b[i - 1] + 1;
            rec.m_used = i;
            if (e.q[i] >= Int((unsigned long)n)) break;
        }
    }
    return rec;
}

}  // namespace mdlab::cfrac
