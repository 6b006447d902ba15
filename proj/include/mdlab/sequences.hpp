#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdlab/rational.hpp"

namespace mdlab::sequences {

// P(x) = c_0 + c_1 x + ... + c_d x^d, arbitrary-precision coefficients.
struct IntPolynomial {
    std::vector<Int> coeffs;  // c_0..c_d; c_d != 0 unless P == 0

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> c);

    int degree() const;  // 0 for the zero polynomial
    Int eval(const Int& x) const;

    static IntPolynomial parse(const std::string& csv);  // "0,0,1" -> x^2
    std::string str() const;
};

// The index sequence m_n fed into a polynomial: n itself, the n-th prime,
// floor(n*beta), or an explicit list. t declares the growth bound
// |m_n| <= n^t, verified on generation: a violation at the final generated
// index is an error, earlier violations are treated as the finite prefix the
// bound is allowed to exclude.
struct IndexMap {
    enum class Kind { Identity, Primes, FloorBeta, Explicit };

    Kind kind = Kind::Identity;
    Rat beta;                  // FloorBeta only, > 1
    std::vector<Int> indices;  // Explicit only
    int t = 1;

    static IndexMap identity();
    static IndexMap primes();
    static IndexMap floor_beta(const Rat& beta);
    static IndexMap explicit_list(std::vector<Int> values, int t);

    // m_1..m_count, pairwise distinct, growth-checked
    std::vector<Int> generate(std::size_t count) const;

    std::string str() const;
};

struct SequenceSpec {
    enum class Kind { Poly, DigitParityEven, Geometric, Theorem5, Explicit };

    Kind kind = Kind::Poly;
    IntPolynomial poly;  // Poly
    IndexMap map;        // Poly
    int base = 2;        // DigitParityEven, >= 2
    long long ratio = 2; // Geometric, >= 2
    int d = 1;           // Theorem5, >= 1
    std::vector<Int> explicit_terms;

    static SequenceSpec poly_spec(IntPolynomial p, IndexMap m);
    static SequenceSpec digit_parity_even(int base);
    static SequenceSpec geometric(long long q);
    static SequenceSpec theorem5(int d);
    static SequenceSpec explicit_spec(std::vector<Int> terms);

    std::string str() const;  // canonical mini-language form
};

// a_1..a_count per spec. Theorem5 enumerates 2^{dk} + j*2^{dk+d-k} over
// j = 0..2^k-1, k = 1,2,..., globally sorted with duplicates removed.
std::vector<Int> generate(const SequenceSpec& spec, std::size_t count);

struct GrowthCheck {
    bool pass = true;
    std::size_t first_violation = 0;  // 1-based n of first failing pair (a_n, a_{n+1})
};

// a_{n+1}/a_n >= 1 + c/a_n^(1/d), decided exactly as
// (v*(a_{n+1}-a_n))^d >= u^d * a_n^(d-1)  with c = u/v.
GrowthCheck check_growth(const std::vector<Int>& terms, int d, const Rat& c);

// Largest c for which check_growth passes on this prefix:
// min_n delta_n / a_n^((d-1)/d), the rational minimum taken exactly.
double max_growth_constant(const std::vector<Int>& terms, int d);

// Mini-language:
//   poly:c0,c1,...,cd[;map=identity|primes|floorbeta:<p>/<q>]
//   digit-even:<base>   geom:<q>   thm5:d=<d>   explicit:@<file>
SequenceSpec parse_spec(const std::string& text);

}  // namespace mdlab::sequences
