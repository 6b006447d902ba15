#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "mdlab/errors.hpp"
#include "mdlab/discrepancy.hpp"
#include "mdlab/sequences.hpp"

using namespace mdlab;
using namespace mdlab::sequences;

namespace {

std::vector<long> as_longs(const std::vector<Int>& v) {
    std::vector<long> out;
    for (const Int& x : v) out.push_back(x.get_si());
    return out;
}

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("polynomial evaluation over the identity map") {
    auto spec = SequenceSpec::poly_spec(IntPolynomial::parse("0,0,1"), IndexMap::identity());
    CHECK(as_longs(generate(spec, 5)) == std::vector<long>{1, 4, 9, 16, 25});
}

TEST_CASE("theorem-5 family: blocks merge sorted with duplicates removed") {
    auto spec = SequenceSpec::theorem5(2);
    CHECK(as_longs(generate(spec, 8)) == std::vector<long>{4, 12, 16, 32, 48, 64, 96, 128});
    // 64 arises for (k=2, j=3) and (k=3, j=0); the output must stay strictly increasing
    auto terms = generate(spec, 4096);
    for (std::size_t i = 1; i < terms.size(); ++i) CHECK(terms[i] > terms[i - 1]);
}

TEST_CASE("digit-parity family in base 2") {
    auto spec = SequenceSpec::digit_parity_even(2);
    CHECK(as_longs(generate(spec, 6)) == std::vector<long>{3, 5, 6, 9, 10, 12});
}

TEST_CASE("geometric family starts at the ratio") {
    auto spec = SequenceSpec::geometric(3);
    CHECK(as_longs(generate(spec, 4)) == std::vector<long>{3, 9, 27, 81});
}

TEST_CASE("generate is deterministic") {
    auto spec = SequenceSpec::theorem5(3);
    CHECK(generate(spec, 600) == generate(spec, 600));
}

TEST_CASE("prime index map feeds the polynomial") {
    auto spec = SequenceSpec::poly_spec(IntPolynomial::parse("0,1"), IndexMap::primes());
    CHECK(as_longs(generate(spec, 6)) == std::vector<long>{2, 3, 5, 7, 11, 13});
}

TEST_CASE("floor-beta index map uses the exact rational floor") {
    auto map = IndexMap::floor_beta(Rat(3, 2));
    auto m = map.generate(6);  // floor(3n/2)
    CHECK(as_longs(m) == std::vector<long>{1, 3, 4, 6, 7, 9});
    CHECK_THROWS_AS(IndexMap::floor_beta(Rat(1, 2)), parameter_error);
}

TEST_CASE("explicit index map rejects repeats") {
    auto map = IndexMap::explicit_list({Int(1), Int(2), Int(2)}, 1);
    CHECK_THROWS_AS(map.generate(3), parameter_error);
}

TEST_CASE("growth check: exact comparisons") {
    // 16/12 = 1.333 >= 1 + 1/sqrt(12) = 1.289 etc.
    std::vector<Int> thm5 = {4, 12, 16, 32, 48, 64, 96, 128};
    CHECK(check_growth(thm5, 2, Rat(1)).pass);

    // the first failing pair of [1,2,3,4] at d=2, c=1 is (2,3): 3/2 < 1 + 1/sqrt(2)
    auto bad = check_growth({Int(1), Int(2), Int(3), Int(4)}, 2, Rat(1));
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_violation == 2);

    auto geo = generate(SequenceSpec::geometric(2), 10);
    CHECK(check_growth(geo, 1, Rat(1)).pass);  // ratio 2 >= 1 + 1/a_n always

    CHECK_THROWS_AS(check_growth({Int(2), Int(2)}, 1, Rat(1)), parameter_error);
    CHECK_THROWS_AS(check_growth({Int(3), Int(1)}, 1, Rat(1)), parameter_error);
}

TEST_CASE("theorem-5 growth holds with c = 1 after the global merge") {
    // the within-block inequality is proved; the merged sequence is checked
    // empirically, and the largest valid c is reported
    for (int d : {1, 2, 3}) {
        auto terms = generate(SequenceSpec::theorem5(d), 4096);
        CHECK(check_growth(terms, d, Rat(1)).pass);
        double cmax = max_growth_constant(terms, d);
        CHECK(cmax >= 1.0);
        MESSAGE("thm5 d=", d, ": largest valid c on 4096 terms = ", cmax);
    }
}

TEST_CASE("footnote bracket for a_n = n^d") {
    // 1 + d/n < (n+1)^d/n^d < 1 + (d+1)/n, strict, for n >= n0; scan for n0
    for (int d : {2, 3, 4}) {
        long n0 = 0;
        for (long n = 1; n <= 10000; ++n) {
            Int np1_d, n_dm1, n_d;
            mpz_ui_pow_ui(np1_d.get_mpz_t(), (unsigned long)(n + 1), (unsigned long)d);
            mpz_ui_pow_ui(n_dm1.get_mpz_t(), (unsigned long)n, (unsigned long)(d - 1));
            mpz_ui_pow_ui(n_d.get_mpz_t(), (unsigned long)n, (unsigned long)d);
            bool lower = n_d + Int(d) * n_dm1 < np1_d;
            bool upper = np1_d < n_d + Int(d + 1) * n_dm1;
            if (!(lower && upper)) n0 = n + 1;
        }
        // the upper bound needs sum_{k>=2} C(d,k)/n^{k-1} < 1: n0 = 2, 4, 7 for d = 2, 3, 4
        CHECK(n0 <= 7);
        MESSAGE("footnote bracket for d=", d, " holds from n0=", std::max(n0, 1L));
    }
}

TEST_CASE("index growth bound rejects a final violation") {
    // m_N = N^2+1 breaks |m_n| <= n^2 at the last index
    std::vector<Int> v;
    for (long n = 1; n <= 9; ++n) v.push_back(Int(n));
    v.push_back(Int(101));
    auto map = IndexMap::explicit_list(v, 2);
    CHECK_THROWS_AS(map.generate(10), parameter_error);
    // an early violation is the allowed finite prefix
    std::vector<Int> w = {Int(100)};
    for (long n = 2; n <= 10; ++n) w.push_back(Int(n));
    CHECK(IndexMap::explicit_list(w, 2).generate(10).size() == 10);
}

TEST_CASE("blockwise discrepancy chain bounds the merged multiset") {
    // the union of blocks k = 1..k0 (kept as a multiset) satisfies
    // N * D_N <= sum_k 2^k * D^(k) exactly, by the triangle inequality
    for (int d : {1, 2}) {
        for (uint64_t seed : {1u, 2u}) {
            auto alpha = AlphaValue::random_dyadic(seed, 192);
            const unsigned k0 = 6;
            std::vector<Int> all;
            double chain = 0.0;
            for (unsigned k = 1; k <= k0; ++k) {
                std::vector<Int> block;
                Int base = Int(1) << (unsigned(d) * k);
                Int step = Int(1) << (unsigned(d) * k + unsigned(d) - k);
                Int v = base;
                for (unsigned long j = 0; j < (1ul << k); ++j, v += step) {
                    block.push_back(v);
                    all.push_back(v);
                }
                chain += double(1ul << k) *
                         discrepancy::extreme_discrepancy(
                             discrepancy::fractional_parts(block, alpha));
            }
            double nd = double(all.size()) *
                        discrepancy::extreme_discrepancy(
                            discrepancy::fractional_parts(all, alpha));
            CHECK(nd <= chain + 1e-9);
        }
    }
}

TEST_CASE("explicit sequences load from files") {
    namespace fs = std::filesystem;
    fs::path f = fs::temp_directory_path() / "mdlab_seq.txt";
    {
        std::ofstream out(f);
        out << "10\n20\n\n30\n";
    }
    auto spec = parse_spec("explicit:@" + f.string());
    CHECK(as_longs(generate(spec, 3)) == std::vector<long>{10, 20, 30});
    CHECK_THROWS_AS(generate(spec, 4), parameter_error);
    fs::remove(f);
    CHECK_THROWS_AS(parse_spec("explicit:@/nonexistent/path"), parameter_error);
}

TEST_CASE("mini-language round trips") {
    CHECK(parse_spec("poly:0,0,1").str() == "poly:0,0,1;map=identity");
    CHECK(parse_spec("poly:1,2;map=primes").str() == "poly:1,2;map=primes");
    CHECK(parse_spec("poly:0,1;map=floorbeta:7/2").str() == "poly:0,1;map=floorbeta:7/2");
    CHECK(parse_spec("digit-even:2").str() == "digit-even:2");
    CHECK(parse_spec("geom:2").str() == "geom:2");
    CHECK(parse_spec("thm5:d=2").str() == "thm5:d=2");
    CHECK_THROWS_AS(parse_spec("nope:1"), parameter_error);
    CHECK_THROWS_AS(parse_spec("thm5:2"), parameter_error);
}

}  // TEST_SUITE
