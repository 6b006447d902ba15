#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mdlab {

using Int = mpz_class;
using Rat = mpq_class;

// {x}: fractional part in [0,1), exact.
Rat frac(const Rat& x);

// floor(x)
Int floor_rat(const Rat& x);

// ceil(n/d) for d > 0
Int ceil_div(const Int& n, const Int& d);

// num/den as a correctly truncated double; den > 0, no canonicalization needed
double ratio_as_double(const Int& num, const Int& den);

// Parses "p/q", a plain integer, or a decimal like "0.625" into an exact
// rational. Decimals convert exactly (no binary rounding).
Rat parse_rational(const std::string& text);

// Dyadic enclosure of sqrt(k):  lo <= sqrt(k) < hi,  hi - lo = 2^-bits.
// lo = floor(sqrt(k * 4^bits)) / 2^bits.
void sqrt_enclosure(const Int& k, unsigned bits, Rat& lo, Rat& hi);

// Exact dilation parameter p/q with 0 <= p < q, reduced. Arbitrary rationals
// are accepted and reduced mod 1 on construction.
class AlphaValue {
  public:
    AlphaValue();                        // 0/1
    explicit AlphaValue(const Rat& x);   // {x}
    AlphaValue(const Int& p, const Int& q);

    // p drawn uniformly from [0, 2^bits), q = 2^bits
    static AlphaValue random_dyadic(uint64_t seed, unsigned bits = 192);

    // {(1+sqrt 5)/2} truncated to a bits-bit dyadic
    static AlphaValue golden(unsigned bits = 192);

    const Int& num() const { return p_; }
    const Int& den() const { return q_; }
    Rat value() const;
    double to_double() const;

    // a*p mod q in [0,q): the exact residue determining {a*alpha}
    Int residue(const Int& a) const;

    std::string str() const;

  private:
    Int p_, q_;
};

}  // namespace mdlab
