#include "mdlab/rational.hpp"

#include <cctype>

#include "mdlab/errors.hpp"
#include "mdlab/rng.hpp"

namespace mdlab {

Rat frac(const Rat& x) {
    Rat r = x - Rat(floor_rat(x));
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int ceil_div(const Int& n, const Int& d) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

double ratio_as_double(const Int& num, const Int& den) {
    // mpq_get_d truncates toward zero: |error| < 1 ulp, fine for values in [0,1)
    mpq_t q;
    mpq_init(q);
    mpz_set(mpq_numref(q), num.get_mpz_t());
    mpz_set(mpq_denref(q), den.get_mpz_t());
    double d = mpq_get_d(q);
    mpq_clear(q);
    return d;
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw parameter_error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rat r;
        if (r.set_str(text, 10) != 0)
            throw parameter_error("bad rational literal: " + text);
        if (r.get_den() == 0) throw parameter_error("zero denominator: " + text);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t scale = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw parameter_error("bad decimal literal: " + text);
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i])) &&
                !(i == 0 && (digits[i] == '-' || digits[i] == '+')))
                throw parameter_error("bad decimal literal: " + text);
        Int num(digits, 10), den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Int n;
    if (n.set_str(text, 10) != 0)
        throw parameter_error("bad integer literal: " + text);
    return Rat(n);
}

void sqrt_enclosure(const Int& k, unsigned bits, Rat& lo, Rat& hi) {
    if (k < 0) throw parameter_error("sqrt_enclosure: negative argument");
    Int scaled = k << (2 * bits);
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Int den = Int(1) << bits;
    lo = Rat(root, den);
    lo.canonicalize();
    hi = Rat(root + 1, den);
    hi.canonicalize();
}

AlphaValue::AlphaValue() : p_(0), q_(1) {}

AlphaValue::AlphaValue(const Rat& x) {
    Rat f = frac(x);
    p_ = f.get_num();
    q_ = f.get_den();
}

AlphaValue::AlphaValue(const Int& p, const Int& q) {
    if (q == 0) throw parameter_error("AlphaValue: zero denominator");
    Rat r(p, q);
    r.canonicalize();
    Rat f = frac(r);
    p_ = f.get_num();
    q_ = f.get_den();
}

AlphaValue AlphaValue::random_dyadic(uint64_t seed, unsigned bits) {
    if (bits == 0) throw parameter_error("AlphaValue: bits must be positive");
    SplitMix64 rng(seed);
    Int p = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
        p <<= 64;
        p += Int(rng.next());
    }
    mpz_fdiv_r_2exp(p.get_mpz_t(), p.get_mpz_t(), bits);
    return AlphaValue(p, Int(1) << bits);
}

AlphaValue AlphaValue::golden(unsigned bits) {
    if (bits < 2) throw parameter_error("AlphaValue::golden: bits must be >= 2");
    // {phi} = (sqrt 5 - 1)/2 truncated to denominator 2^bits
    Rat lo, hi;
    sqrt_enclosure(5, bits - 1, lo, hi);
    return AlphaValue((lo - 1) / 2);
}

Rat AlphaValue::value() const {
    Rat r(p_, q_);
    r.canonicalize();
    return r;
}

double AlphaValue::to_double() const { return ratio_as_double(p_, q_); }

Int AlphaValue::residue(const Int& a) const {
    Int r = a * p_;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), q_.get_mpz_t());
    return r;
}

std::string AlphaValue::str() const {
    return p_.get_str() + "/" + q_.get_str();
}

}  // namespace mdlab
