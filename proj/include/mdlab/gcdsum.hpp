#pragma once

#include <vector>

namespace mdlab::gcdsum {

// sum_{j1,j2=1}^{G} u_{j1} u_{j2} gcd(j1,j2)/sqrt(j1 j2); weights nonnegative,
// 1-based indices, O(G^2) with compensated summation. G capped at 2^14.
double gcd_sum(const std::vector<double>& weights);

// floor(H gcd(j1,j2) / max(j1,j2)) = #{(h1,h2) in [1,H]^2 : j1 h1 = j2 h2}
long long collision_count(long long j1, long long j2, long long h);

struct HilberdinkReport {
    double gcd_sum;
    double weight_l2;      // sum u_j^2
    double ratio;          // gcd_sum / weight_l2
    double bound;          // exp(c sqrt(log G / log log G)) * weight_l2
    bool within_bound;
};

// c is a diagnostic knob; the absolute constant in the bound is unspecified.
HilberdinkReport hilberdink_report(const std::vector<double>& weights, double c = 10.0);

}  // namespace mdlab::gcdsum
