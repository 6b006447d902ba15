#pragma once

#include <functional>
#include <optional>

#include "mdlab/interval.hpp"
#include "mdlab/rational.hpp"

namespace mdlab::dilation {

// #{h <= H : {h alpha} in R}, membership decided in exact integer arithmetic
// on the residues h p mod q.
long long dilated_hits(const IntervalUnion& r, const AlphaValue& alpha, long long h_budget);

// smallest h <= h_max with {h alpha} in R
std::optional<long long> first_hit(const IntervalUnion& r, const AlphaValue& alpha,
                                   long long h_max);

// g[j] = |S(j/J)| on cells [j/J, (j+1)/J); sup distance to |S| within a cell
// is bounded by 2 pi (sum |a_n|) / J.
std::vector<double> quantize_expsum(const std::vector<Int>& terms, std::size_t cells);

// Parameters of the level-set construction: tau in (0,1), eps in (0, tau/2),
// growth exponent t, 1 < B' < B, and the block lengths B_L with
// (B')^L <= B_L <= B^L, all range constraints checked on construction.
struct Theorem3Params {
    Rat tau;
    Rat eps;
    int t;
    Rat b_prime;
    Rat b;
    std::vector<long long> block_lengths;  // B_1, B_2, ...

    Theorem3Params(Rat tau, Rat eps, int t, Rat b_prime, Rat b,
                   std::vector<long long> block_lengths);

    long q_levels() const;                  // floor((1-tau+2eps)/(3eps)) + 1
    Rat delta_exponent(long i) const;       // tau - 2eps + 3eps*i
    long long block_length(int scale) const;
    std::size_t grid_cells(int scale) const;  // ceil((B^{1+t})^L)
};

struct LevelSetLadder {
    long q = 0;
    std::vector<double> thresholds;     // Delta_0..Delta_Q
    std::vector<IntervalUnion> levels;  // M^(0)..M^(Q-1): Delta_i < g <= Delta_{i+1}
    std::optional<long> selected;       // i_L maximizing Delta_{i+1} * measure
    bool selection_meets_budget = false;  // Delta_{i_L+1}*measure >= B_L^{tau-eps}/(4Q)
};

LevelSetLadder level_ladder(const std::vector<double>& g, const Theorem3Params& params,
                            int scale);

// H_L = floor((1+eta)^L / measure), G_L = (A B (1+eta))^{2L}, exact.
struct DilationBudget {
    Rat eta;
    int scale;
    Int h_budget;        // H_L
    Int fourier_budget;  // G_L

    static DilationBudget make(const Rat& eta, int scale, const Rat& measure,
                               const Rat& component_base, const Rat& measure_base);
};

struct SearchRecord {
    int scale;
    Int h_budget;                  // ceil((1+eta)^L / measure(R_L))
    Int h_max;                     // h_budget * safety_factor
    std::optional<long long> hit;  // h_L
    double hit_ratio;              // h_L / h_budget, NaN on miss
    double measure;
};

// Runs first_hit for each L = 1..l_max over the family's R_L. Misses within
// budget are recorded, not errors.
std::vector<SearchRecord> theorem4_search(const std::function<IntervalUnion(int)>& family,
                                          const AlphaValue& alpha, const Rat& eta,
                                          int l_max, int safety_factor = 64);

// R_L = [0, base^-L)
std::function<IntervalUnion(int)> shrink_family(int base);

}  // namespace mdlab::dilation
