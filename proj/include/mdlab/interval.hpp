#pragma once

#include <cstddef>
#include <vector>

#include "mdlab/rational.hpp"

namespace mdlab::dilation {

// [a,b) with exact rational endpoints inside [0,1)
struct Interval {
    Rat a, b;
};

// Disjoint sorted union of half-open intervals; measure kept exact.
class IntervalUnion {
  public:
    IntervalUnion() = default;

    // sorts, merges overlapping/adjacent intervals, validates 0 <= a < b <= 1
    static IntervalUnion make(std::vector<Interval> raw);

    const std::vector<Interval>& components() const { return comps_; }
    std::size_t component_count() const { return comps_.size(); }
    const Rat& measure_exact() const { return measure_; }
    double measure() const;

    // total variation of the centered indicator
    double variation() const { return 2.0 * double(comps_.size()); }

    bool contains(const Rat& x) const;

  private:
    std::vector<Interval> comps_;
    Rat measure_ = 0;
};

struct FourierPair {
    long j;
    double u;  // cosine coefficient
    double v;  // sine coefficient
};

// Coefficients of the centered indicator:
//   u_j = sum_i [sin(2 pi j b_i) - sin(2 pi j a_i)] / (pi j)
//   v_j = sum_i [cos(2 pi j a_i) - cos(2 pi j b_i)] / (pi j)
// Arguments are reduced exactly mod 1 before the trig calls.
FourierPair indicator_fourier(const IntervalUnion& r, long j);

// G-th partial sum of the centered indicator's Fourier series at x
double fourier_partial_sum(const IntervalUnion& r, long g, const Rat& x);

// measure * (1 - measure): the squared L2 norm of the centered indicator
double centered_l2(const IntervalUnion& r);

}  // namespace mdlab::dilation
