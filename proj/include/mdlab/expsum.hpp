#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mdlab/rational.hpp"

namespace mdlab::expsum {

// S(x) = sum_n e^{2 pi i a_n x}, each phase reduced exactly mod 1 before the
// trig call, compensated summation.
std::complex<double> eval_point(const std::vector<Int>& terms, const Rat& x);

struct ExpSumGrid {
    std::size_t grid = 0;                       // K
    std::vector<std::complex<double>> values;   // S(k/K), k = 0..K-1; values[0] = N exactly
};

// c[m] = #{n : a_n == m (mod K)}
std::vector<long long> fold_counts(const std::vector<Int>& terms, std::size_t grid);

// S(k/K) as the DFT of the folded count vector; exact identity since
// e^{2 pi i a k/K} depends only on a mod K.
ExpSumGrid grid_modulus_fft(const std::vector<Int>& terms, std::size_t grid);

struct L1Estimate {
    double estimate;     // (1/K) sum_k |S(k/K)|
    double error_bound;  // pi * (sum |a_n|) / K, from |S'| <= 2 pi sum |a_n|
};

L1Estimate l1_estimate(const std::vector<Int>& terms, std::size_t grid);

// #{(m,n) : a_m = a_n}; equals the integral of |S|^2.
Int collision_l2(const std::vector<Int>& terms);

// sum_s r(s)^2 with r(s) = #{(k,l) : a_k + a_l = s}; equals the integral of
// |S|^4. Streaming merge over sorted rows: O(N^2 log N) time, O(N) memory.
Int additive_energy(const std::vector<Int>& terms);

// l2^{3/2} / l4^{1/2} <= integral of |S| (Hoelder with p=3/2, q=3)
double holder_lower_bound(const std::vector<Int>& terms);

struct NormBundle {
    double l1_estimate;
    double l1_error_bound;
    Int l2_exact;
    Int l4_exact;
    double holder_lower;
};

NormBundle norm_bundle(const std::vector<Int>& terms, std::size_t grid);

// Budget for quadratic-pair operations (additive_energy, repr histograms),
// counted in pairs. Default 2^28 (~2 GiB of materialized 64-bit sums).
void set_pair_budget(std::size_t pairs);
std::size_t pair_budget();

}  // namespace mdlab::expsum
