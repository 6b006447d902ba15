// Independent brute-force oracles. Everything here recomputes results from
// first principles and must stay clear of the implementation paths it checks.
#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "mdlab/rational.hpp"

namespace oracle {

using mdlab::Int;
using mdlab::Rat;

// extreme discrepancy by the O(N^2) endpoint-pair scan
inline double extreme_brute(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();
    const double inv_n = 1.0 / double(n);
    double best = 0.0;
    // surplus candidates: closed intervals [x_(i), x_(j)]
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            best = std::max(best, double(j - i + 1) * inv_n - (x[j - 1] - x[i - 1]));
    // deficit candidates: open intervals with sentinels 0 and 1
    auto pt = [&](std::size_t k) { return k == 0 ? 0.0 : (k == n + 1 ? 1.0 : x[k - 1]); };
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n + 1; ++j)
            best = std::max(best, (pt(j) - pt(i)) - double(j - i - 1) * inv_n);
    return best;
}

// star discrepancy by scanning counts at every candidate anchor [0,b)
inline double star_brute(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();
    const double inv_n = 1.0 / double(n);
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double b = x[j];
        std::size_t count_lt = 0;
        for (double v : x)
            if (v < b) ++count_lt;
        // b -> x_(j) from above: count includes the point itself
        best = std::max(best, b - double(count_lt) * inv_n);
        best = std::max(best, double(count_lt + 1) * inv_n - b);
    }
    return best;
}

// plain O(K^2) DFT with kernel e^{sign 2 pi i jk/K}
inline std::vector<std::complex<double>> dft_naive(const std::vector<std::complex<double>>& a,
                                                   int sign) {
    const std::size_t n = a.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double ang = double(sign) * 6.283185307179586 * double(j * k % n) / double(n);
            s += a[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = s;
    }
    return out;
}

// additive energy by the quadruple loop
inline Int energy_brute(const std::vector<Int>& a) {
    const std::size_t n = a.size();
    Int count = 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t p = 0; p < n; ++p)
                    if (a[k] + a[l] == a[m] + a[p]) count += 1;
    return count;
}

// collision pairs by the double loop
inline Int collisions_brute(const std::vector<Int>& a) {
    Int count = 0;
    for (const Int& x : a)
        for (const Int& y : a)
            if (x == y) count += 1;
    return count;
}

// #{(h1,h2) in [1,H]^2 : j1 h1 = j2 h2} by enumeration
inline long long dilation_collisions_brute(long long j1, long long j2, long long h) {
    long long count = 0;
    for (long long h1 = 1; h1 <= h; ++h1)
        for (long long h2 = 1; h2 <= h; ++h2)
            if (j1 * h1 == j2 * h2) ++count;
    return count;
}

// ordered representation count by the double loop
inline long long repr_brute(const std::vector<Int>& f, const Int& target, bool diff) {
    long long count = 0;
    for (const Int& x : f)
        for (const Int& y : f)
            if ((diff ? Int(x - y) : Int(x + y)) == target) ++count;
    return count;
}

}  // namespace oracle
