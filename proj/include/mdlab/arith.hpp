#pragma once

#include <cstddef>
#include <vector>

#include "mdlab/rational.hpp"
#include "mdlab/sequences.hpp"

namespace mdlab::arith {

enum class ReprMode { Sum, Diff };

struct ReprCount {
    Int n;
    std::size_t count;  // ordered pairs (x,y) in [1,X]^2 with f(x) +- f(y) = n
    ReprMode mode;
};

// f_values holds f(1)..f(X); counting via a sorted index, O(X log X).
ReprCount count_repr(const std::vector<Int>& f_values, const Int& n, ReprMode mode);

struct ReprHistogram {
    std::vector<std::pair<Int, std::size_t>> counts;  // ascending by attained value
    std::size_t max_count = 0;  // diff mode: max over n != 0 (n = 0 stays in the map)
    Int argmax = 0;
};

ReprHistogram repr_histogram(const std::vector<Int>& f_values, ReprMode mode);

// q(x,y) with P(x) - P(y) = (x-y) q(x,y). Synthetic division collapses to
// q_{r,s} = c_{r+s+1}, so every antidiagonal r+s = k carries the single
// coefficient c_{k+1}.
struct BivariatePoly {
    std::vector<Int> antidiag;  // antidiag[k] = q_{r,s} for all r+s = k; size d

    int total_degree() const { return int(antidiag.size()) - 1; }
    Int coeff(std::size_t r, std::size_t s) const;
    Int eval(const Int& x, const Int& y) const;
};

BivariatePoly divide_difference(const sequences::IntPolynomial& p);

// positive divisors of |n| by trial division
long long divisor_count(long long n);

}  // namespace mdlab::arith
