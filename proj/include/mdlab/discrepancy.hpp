#pragma once

#include <cstddef>
#include <vector>

#include "mdlab/rational.hpp"
#include "mdlab/sequences.hpp"

namespace mdlab::discrepancy {

// Sorted fractional parts in [0,1).
struct SamplePoints {
    std::vector<double> values;

    std::size_t n() const { return values.size(); }

    // sorts and validates the range
    static SamplePoints from_values(std::vector<double> v);
};

// {a_n * alpha} computed exactly as (a_n p mod q)/q, one final rounding per point.
SamplePoints fractional_parts(const std::vector<Int>& terms, const AlphaValue& alpha);

// sup over anchored intervals [0,b):  max_i max(i/N - x_(i), x_(i) - (i-1)/N)
double star_discrepancy(const SamplePoints& pts);

// sup over intervals [a,b), both surplus and deficit sides, O(N) after sort:
//   D+ = max_{i<=j} (j-i+1)/N - (x_(j)-x_(i))
//   D- = max_{i<j}  (x_(j)-x_(i)) - (j-i-1)/N   with sentinels x_(0)=0, x_(N+1)=1
double extreme_discrepancy(const SamplePoints& pts);

struct ProfilePoint {
    std::size_t n;
    double d_n;   // extreme discrepancy of the first n terms
    double nd_n;  // n * d_n
};

std::vector<ProfilePoint> discrepancy_profile(const sequences::SequenceSpec& spec,
                                              const AlphaValue& alpha,
                                              const std::vector<std::size_t>& checkpoints);

// max_{1<=H<=h_max} |sum_n e(H a_n alpha)| / (4H), each sum taken at the exact
// rational {H alpha}. A lower bound for N*D_N by the Koksma-Hlawka inequality.
double koksma_lower_bound(const std::vector<Int>& terms, const AlphaValue& alpha,
                          long h_max);

}  // namespace mdlab::discrepancy
