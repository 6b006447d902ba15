#include <doctest.h>

#include "mdlab/cfrac.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/rng.hpp"
#include "oracles.hpp"

using namespace mdlab;
using namespace mdlab::cfrac;

namespace {

std::vector<long> quotients(const CFracExpansion& e) {
    std::vector<long> out;
    for (const Int& b : e.b) out.push_back(b.get_si());
    return out;
}

// dyadic enclosure of the golden ratio (1+sqrt 5)/2 at the given precision
std::pair<Rat, Rat> golden_enclosure(unsigned bits) {
    Rat lo, hi;
    sqrt_enclosure(5, bits, lo, hi);
    return {(1 + lo) / 2, (1 + hi) / 2};
}

}  // namespace

TEST_SUITE("cfrac") {

TEST_CASE("euclidean expansions of rationals") {
    auto e = cf_expand(Rat(355, 113), 32);
    CHECK(e.b0 == 3);
    CHECK(quotients(e) == std::vector<long>{7, 16});
    CHECK(e.terminated);
    CHECK(e.certified_count == 2);

    auto half = cf_expand(Rat(1, 2), 32);
    CHECK(half.b0 == 0);
    CHECK(quotients(half) == std::vector<long>{2});

    auto whole = cf_expand(Rat(4), 32);
    CHECK(whole.b0 == 4);
    CHECK(whole.b.empty());
    CHECK(whole.terminated);

    CHECK_THROWS_AS(cf_expand(Rat(0), 8), parameter_error);
    CHECK_THROWS_AS(cf_expand(Rat(-3, 2), 8), parameter_error);
}

TEST_CASE("canonical termination: the last coefficient is never 1") {
    SplitMix64 rng(6);
    for (int rep = 0; rep < 200; ++rep) {
        long den = 1 + (long)rng.next_below(5000);
        long num = 1 + (long)rng.next_below(5000);
        auto e = cf_expand(Rat(num, den), 64);
        REQUIRE(e.terminated);
        if (!e.b.empty()) CHECK(e.b.back() >= 2);
    }
}

TEST_CASE("folding reconstructs the input exactly") {
    SplitMix64 rng(8);
    for (int rep = 0; rep < 100; ++rep) {
        Rat x(1 + (long)rng.next_below(100000), 1 + (long)rng.next_below(100000));
        x.canonicalize();
        if (x == 0) continue;
        auto e = cf_expand(x, 128);
        REQUIRE(e.terminated);
        CHECK(e.fold() == x);
    }
}

TEST_CASE("convergent recurrence q_i = b_i q_{i-1} + q_{i-2}") {
    auto e = cf_expand(Rat(103993, 33102), 64);
    REQUIRE(e.p.size() == e.q.size());
    REQUIRE(e.p.size() >= 3);
    for (std::size_t i = 2; i < e.q.size(); ++i) {
        CHECK(e.q[i] == e.b[i - 1] * e.q[i - 1] + e.q[i - 2]);
        CHECK(e.p[i] == e.b[i - 1] * e.p[i - 1] + e.p[i - 2]);
    }
    // the last convergent is the number itself
    CHECK(Rat(e.p.back(), e.q.back()) == Rat(103993, 33102));
}

TEST_CASE("interval certification: golden ratio gives all ones") {
    auto [lo, hi] = golden_enclosure(256);
    auto e = cf_expand_interval(lo, hi, 100);
    CHECK(e.b0 == 1);
    REQUIRE(e.certified_count >= 100);
    for (std::size_t i = 0; i < 100; ++i) CHECK(e.b[i] == 1);
}

TEST_CASE("interval certification stops when endpoints disagree") {
    // [1/3, 1/2] pins b0 = 0 but not b1 (1/x spans [2,3])
    CHECK_THROWS_AS(cf_expand_interval(Rat(1, 3), Rat(1, 2), 8), certification_error);
    // [3/10, 8/25]: 1/x in [3.125, 3.333] certifies b1 = 3, then [3,8] stops
    auto e = cf_expand_interval(Rat(3, 10), Rat(8, 25), 8);
    CHECK(e.b0 == 0);
    REQUIRE(e.certified_count >= 1);
    CHECK(e.b[0] == 3);
    CHECK_THROWS_AS(cf_expand_interval(Rat(1, 2), Rat(1, 3), 8), parameter_error);
}

TEST_CASE("s_l statistic: exact rational cases") {
    CHECK(s_l_statistic(Rat(1, 3), 2, 0) == 0);
    // b(2/3) = [0;1,2] -> 3; b(4/3) = [1;3] -> 3 + 0
    CHECK(s_l_statistic(Rat(1, 3), 2, 2) == 6);
    CHECK_THROWS_AS(s_l_statistic(Rat(1, 3), 1, 2), parameter_error);
}

TEST_CASE("s_l statistic: rational fast path equals the interval path") {
    Rat alpha(314159, 1 << 20);
    alpha.canonicalize();
    Int exact = s_l_statistic(alpha, 2, 12);
    Int certified = s_l_statistic([&](unsigned) { return std::make_pair(alpha, alpha); },
                                  2, 12);
    CHECK(exact == certified);
}

TEST_CASE("s_l statistic: golden ratio certifies against a high-precision oracle") {
    Int s = s_l_statistic(golden_enclosure, 2, 3);
    // oracle: one fixed very high precision run, floors checked by certification
    auto [lo, hi] = golden_enclosure(1024);
    Int expect = 0;
    Rat a = lo, b = hi;
    for (int k = 1; k <= 3; ++k) {
        a = a * 2;
        b = b * 2;
        auto e = cf_expand_interval(a, b, 3);
        REQUIRE(e.certified_count >= 3);
        for (std::size_t m = 1; m <= 3; ++m) expect += e.coeff(m);
    }
    CHECK(s == expect);
}

TEST_CASE("coefficients of beta^k alpha depend only on the fractional part") {
    SplitMix64 rng(21);
    for (int rep = 0; rep < 40; ++rep) {
        Rat alpha(1 + (long)rng.next_below(1000), 1 + (long)rng.next_below(1000));
        alpha.canonicalize();
        if (alpha == 0) continue;
        for (long k = 1; k <= 3; ++k) {
            Rat x = alpha * (1l << k);
            x.canonicalize();
            Rat fx = frac(x);
            if (fx == 0) continue;  // integer: no partial quotients at all
            auto full = cf_expand(x, 16);
            auto fractional = cf_expand(fx, 16);
            for (std::size_t m = 1; m <= 16; ++m) CHECK(full.coeff(m) == fractional.coeff(m));
        }
    }
}

TEST_CASE("precision escalation certifies or reports the cap") {
    // a very loose enclosure forces at least one doubling
    auto loose = [](unsigned bits) {
        unsigned effective = bits < 512 ? 8 : bits;
        return golden_enclosure(effective);
    };
    CHECK(s_l_statistic(loose, 2, 4, 256, 4096) == s_l_statistic(golden_enclosure, 2, 4));
    // cap below the needed precision
    auto hopeless = [](unsigned) { return golden_enclosure(4); };
    CHECK_THROWS_AS(s_l_statistic(hopeless, 2, 8, 8, 16), certification_error);
}

TEST_CASE("kronecker records") {
    auto one = kronecker_nd(AlphaValue(Int(1), Int(2)), 1);
    CHECK(one.nd_n == 1.0);

    auto two = kronecker_nd(AlphaValue(Int(1), Int(2)), 2);
    CHECK(two.nd_n == 1.0);  // points {0, 1/2}

    // golden alpha at n = 100 against the brute force
    auto alpha = AlphaValue::golden(192);
    auto rec = kronecker_nd(alpha, 100);
    std::vector<double> pts;
    Int r = 0;
    pts.push_back(0.0);
    for (int j = 1; j < 100; ++j) {
        r += alpha.num();
        if (r >= alpha.den()) r -= alpha.den();
        pts.push_back(ratio_as_double(r, alpha.den()));
    }
    CHECK(rec.nd_n == doctest::Approx(100.0 * oracle::extreme_brute(pts)).epsilon(1e-12));
    CHECK(rec.quotient_sum >= 2);  // diagnostic present
    CHECK(rec.m_used >= 1);
}

}  // TEST_SUITE
