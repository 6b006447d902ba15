#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "mdlab/rational.hpp"

namespace mdlab::cfrac {

// x = [b0; b1, b2, ...] with convergents p_i/q_i. For rational input the
// expansion is the exact Euclidean one (canonical: the last coefficient is
// never 1 unless the expansion is just [b0]); certified_count then equals
// b.size(). For interval input only coefficients both endpoints agree on are
// emitted.
struct CFracExpansion {
    Int b0;
    std::vector<Int> b;            // b_1..b_m
    std::size_t certified_count;   // certified entries of b
    bool terminated;               // rational fully expanded within max_terms
    std::vector<Int> p, q;         // convergents, index 0 = b0/1

    // b_m with the convention b_m = 0 past a terminating expansion
    Int coeff(std::size_t m) const;

    // folds the expansion back into the exact rational it came from
    Rat fold() const;
};

CFracExpansion cf_expand(const Rat& x, std::size_t max_terms);

// lo <= x <= hi: emits coefficients while the endpoints' expansions agree.
// Throws certification_error when not even b_1 can be pinned down.
CFracExpansion cf_expand_interval(const Rat& lo, const Rat& hi, std::size_t max_terms);

// S_L = sum_{k=1..L} sum_{m=1..L} b_m(beta^k alpha), exact for rational alpha
// (b_m = 0 beyond a terminating expansion).
Int s_l_statistic(const Rat& alpha, long long beta, long scale);

// Irrational-mode S_L: enclosure(bits) must return lo <= alpha <= hi with
// hi - lo <= 2^(1-bits). Precision doubles until every one of the L^2
// coefficients certifies; past max_bits a certification_error is thrown.
using Enclosure = std::function<std::pair<Rat, Rat>(unsigned bits)>;
Int s_l_statistic(const Enclosure& enclosure, long long beta, long scale,
                  unsigned start_bits = 0, unsigned max_bits = 1u << 20);

struct KroneckerRecord {
    std::size_t n;
    double nd_n;        // n * D_n of ({j alpha})_{j=0..n-1}
    Int quotient_sum;   // sum_{i<=M} (b_i + 1), M minimal with q_M >= n
    std::size_t m_used; // M
};

// Exact Kronecker-orbit discrepancy with the partial-quotient diagnostic; the
// diagnostic is reported, not asserted (the comparison constant is unspecified).
KroneckerRecord kronecker_nd(const AlphaValue& alpha, std::size_t n);

}  // namespace mdlab::cfrac
