#include "mdlab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "mdlab/errors.hpp"

namespace mdlab::sequences {

namespace {

// deterministic Eratosthenes sieve for the first `count` primes
std::vector<long long> first_primes(std::size_t count) {
    if (count == 0) return {};
    double n = double(count);
    // p_n < n (ln n + ln ln n) for n >= 6
    std::size_t bound = 16;
    if (count >= 6)
        bound = std::size_t(n * (std::log(n) + std::log(std::log(n))) * 1.2) + 16;
    std::vector<long long> primes;
    primes.reserve(count);
    while (primes.size() < count) {
        primes.clear();
        std::vector<bool> composite(bound + 1, false);
        for (std::size_t p = 2; p <= bound && primes.size() < count; ++p) {
            if (composite[p]) continue;
            primes.push_back((long long)p);
            for (std::size_t q = p * p; q <= bound; q += p) composite[q] = true;
        }
        bound *= 2;
    }
    return primes;
}

long long digit_sum(long long v, int base) {
    long long s = 0;
    while (v > 0) {
        s += v % base;
        v /= base;
    }
    return s;
}

// |m_n| <= n^t for all n past a finite prefix; at desk scale that means the
// final generated index must satisfy the bound.
void check_index_growth(const std::vector<Int>& m, int t) {
    if (t < 1) throw parameter_error("index map: growth exponent t must be >= 1");
    std::size_t last_violation = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), (unsigned long)(i + 1), (unsigned long)t);
        if (abs(m[i]) > bound) last_violation = i + 1;
    }
    if (last_violation == m.size() && !m.empty())
        throw parameter_error("index map: |m_n| <= n^t fails at the last generated index n=" +
                              std::to_string(last_violation));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(Int(0));
}

int IntPolynomial::degree() const { return int(coeffs.size()) - 1; }

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

IntPolynomial IntPolynomial::parse(const std::string& csv) {
    std::vector<Int> c;
    for (const auto& tok : split(csv, ',')) {
        Int v;
        if (tok.empty() || v.set_str(tok, 10) != 0)
            throw parameter_error("bad polynomial coefficient: '" + tok + "'");
        c.push_back(v);
    }
    if (c.empty()) throw parameter_error("empty polynomial");
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += coeffs[i].get_str();
    }
    return s;
}

IndexMap IndexMap::identity() {
    IndexMap m;
    m.kind = Kind::Identity;
    m.t = 1;
    return m;
}

IndexMap IndexMap::primes() {
    IndexMap m;
    m.kind = Kind::Primes;
    m.t = 2;  // p_n < n^2 for n >= 2
    return m;
}

IndexMap IndexMap::floor_beta(const Rat& beta) {
    if (beta <= 1) throw parameter_error("floorbeta: beta must be > 1");
    IndexMap m;
    m.kind = Kind::FloorBeta;
    m.beta = beta;
    m.t = 2;  // floor(n*beta) <= n^2 once n >= beta
    return m;
}

IndexMap IndexMap::explicit_list(std::vector<Int> values, int t) {
    IndexMap m;
    m.kind = Kind::Explicit;
    m.indices = std::move(values);
    m.t = t;
    return m;
}

std::vector<Int> IndexMap::generate(std::size_t count) const {
    std::vector<Int> m;
    m.reserve(count);
    switch (kind) {
        case Kind::Identity:
            for (std::size_t n = 1; n <= count; ++n) m.emplace_back((unsigned long)n);
            break;
        case Kind::Primes:
            for (long long p : first_primes(count)) m.emplace_back((long)p);
            break;
        case Kind::FloorBeta:
            for (std::size_t n = 1; n <= count; ++n)
                m.push_back(floor_rat(Rat((unsigned long)n) * beta));
            break;
        case Kind::Explicit: {
            if (indices.size() < count)
                throw parameter_error("explicit index map shorter than requested length");
            m.assign(indices.begin(), indices.begin() + count);
            std::set<Int> distinct(m.begin(), m.end());
            if (distinct.size() != m.size())
                throw parameter_error("explicit index map has repeated entries");
            break;
        }
    }
    check_index_growth(m, t);
    return m;
}

std::string IndexMap::str() const {
    switch (kind) {
        case Kind::Identity: return "identity";
        case Kind::Primes: return "primes";
        case Kind::FloorBeta:
            return "floorbeta:" + beta.get_num().get_str() + "/" + beta.get_den().get_str();
        case Kind::Explicit: return "explicit[" + std::to_string(indices.size()) + "]";
    }
    return "?";
}

SequenceSpec SequenceSpec::poly_spec(IntPolynomial p, IndexMap m) {
    SequenceSpec s;
    s.kind = Kind::Poly;
    s.poly = std::move(p);
    s.map = std::move(m);
    return s;
}

SequenceSpec SequenceSpec::digit_parity_even(int base) {
    if (base < 2) throw parameter_error("digit-even: base must be >= 2");
    SequenceSpec s;
    s.kind = Kind::DigitParityEven;
    s.base = base;
    return s;
}

SequenceSpec SequenceSpec::geometric(long long q) {
    if (q < 2) throw parameter_error("geom: ratio must be >= 2");
    SequenceSpec s;
    s.kind = Kind::Geometric;
    s.ratio = q;
    return s;
}

SequenceSpec SequenceSpec::theorem5(int d) {
    if (d < 1) throw parameter_error("thm5: d must be >= 1");
    SequenceSpec s;
    s.kind = Kind::Theorem5;
    s.d = d;
    return s;
}

SequenceSpec SequenceSpec::explicit_spec(std::vector<Int> terms) {
    SequenceSpec s;
    s.kind = Kind::Explicit;
    s.explicit_terms = std::move(terms);
    return s;
}

std::string SequenceSpec::str() const {
    switch (kind) {
        case Kind::Poly: return "poly:" + poly.str() + ";map=" + map.str();
        case Kind::DigitParityEven: return "digit-even:" + std::to_string(base);
        case Kind::Geometric: return "geom:" + std::to_string(ratio);
        case Kind::Theorem5: return "thm5:d=" + std::to_string(d);
        case Kind::Explicit: return "explicit[" + std::to_string(explicit_terms.size()) + "]";
    }
    return "?";
}

std::vector<Int> generate(const SequenceSpec& spec, std::size_t count) {
    if (count == 0) throw parameter_error("generate: count must be >= 1");
    std::vector<Int> out;
    out.reserve(count);

    switch (spec.kind) {
        case SequenceSpec::Kind::Poly: {
            for (const Int& mn : spec.map.generate(count)) out.push_back(spec.poly.eval(mn));
            break;
        }
        case SequenceSpec::Kind::DigitParityEven: {
            for (long long v = 1; out.size() < count; ++v)
                if (digit_sum(v, spec.base) % 2 == 0) out.emplace_back((long)v);
            break;
        }
        case SequenceSpec::Kind::Geometric: {
            Int v((long)spec.ratio);
            for (std::size_t n = 0; n < count; ++n, v *= (long)spec.ratio) out.push_back(v);
            break;
        }
        case SequenceSpec::Kind::Theorem5: {
            // Blocks for k >= 3 overlap (64 arises twice for d = 2), so collect,
            // sort, deduplicate, and stop once no later block can reach below the
            // current count-th smallest value.
            const unsigned d = (unsigned)spec.d;
            std::vector<Int> pool;
            for (unsigned k = 1;; ++k) {
                Int base = Int(1) << (d * k);
                Int step = Int(1) << (d * k + d - k);  // dk+d-k >= 1 for d,k >= 1
                Int v = base;
                unsigned long block = 1ul << k;
                for (unsigned long j = 0; j < block; ++j, v += step) pool.push_back(v);
                std::sort(pool.begin(), pool.end());
                pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
                if (pool.size() >= count) {
                    Int next_block_start = Int(1) << (d * (k + 1));
                    if (next_block_start > pool[count - 1]) break;
                }
            }
            out.assign(pool.begin(), pool.begin() + count);
            break;
        }
        case SequenceSpec::Kind::Explicit: {
            if (spec.explicit_terms.size() < count)
                throw parameter_error("explicit sequence shorter than requested length");
            out.assign(spec.explicit_terms.begin(), spec.explicit_terms.begin() + count);
            break;
        }
    }
    return out;
}

GrowthCheck check_growth(const std::vector<Int>& terms, int d, const Rat& c) {
    if (d < 1) throw parameter_error("check_growth: d must be >= 1");
    if (c <= 0) throw parameter_error("check_growth: c must be positive");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i] <= 0) throw parameter_error("check_growth: terms must be positive");
        if (i && terms[i] <= terms[i - 1])
            throw parameter_error("check_growth: terms must be strictly increasing");
    }

    const Int u = c.get_num(), v = c.get_den();
    Int ud;
    mpz_pow_ui(ud.get_mpz_t(), u.get_mpz_t(), (unsigned long)d);

    for (std::size_t n = 0; n + 1 < terms.size(); ++n) {
        Int lhs = (terms[n + 1] - terms[n]) * v;
        mpz_pow_ui(lhs.get_mpz_t(), lhs.get_mpz_t(), (unsigned long)d);
        Int rhs;
        mpz_pow_ui(rhs.get_mpz_t(), terms[n].get_mpz_t(), (unsigned long)(d - 1));
        rhs *= ud;
        if (lhs < rhs) return {false, n + 1};
    }
    return {true, 0};
}

double max_growth_constant(const std::vector<Int>& terms, int d) {
    if (terms.size() < 2) throw parameter_error("max_growth_constant: need >= 2 terms");
    // c_max^d = min_n delta_n^d / a_n^(d-1), minimized exactly as a rational
    bool first = true;
    Rat best;
    for (std::size_t n = 0; n + 1 < terms.size(); ++n) {
        Int num;
        mpz_pow_ui(num.get_mpz_t(), Int(terms[n + 1] - terms[n]).get_mpz_t(), (unsigned long)d);
        Int den;
        mpz_pow_ui(den.get_mpz_t(), terms[n].get_mpz_t(), (unsigned long)(d - 1));
        Rat r(num, den);
        r.canonicalize();
        if (first || r < best) {
            best = r;
            first = false;
        }
    }
    return std::pow(best.get_d(), 1.0 / d);
}

SequenceSpec parse_spec(const std::string& text) {
    auto fail = [&]() -> SequenceSpec {
        throw parameter_error("bad sequence spec: '" + text + "'");
    };
    auto colon = text.find(':');
    if (colon == std::string::npos) return fail();
    std::string head = text.substr(0, colon), rest = text.substr(colon + 1);

    if (head == "poly") {
        auto semi = rest.find(';');
        std::string coeffs = semi == std::string::npos ? rest : rest.substr(0, semi);
        IndexMap map = IndexMap::identity();
        if (semi != std::string::npos) {
            std::string opt = rest.substr(semi + 1);
            if (opt.rfind("map=", 0) != 0) return fail();
            std::string mv = opt.substr(4);
            if (mv == "identity")
                map = IndexMap::identity();
            else if (mv == "primes")
                map = IndexMap::primes();
            else if (mv.rfind("floorbeta:", 0) == 0)
                map = IndexMap::floor_beta(parse_rational(mv.substr(10)));
            else
                return fail();
        }
        return SequenceSpec::poly_spec(IntPolynomial::parse(coeffs), map);
    }
    if (head == "digit-even") return SequenceSpec::digit_parity_even(std::stoi(rest));
    if (head == "geom") return SequenceSpec::geometric(std::stoll(rest));
    if (head == "thm5") {
        if (rest.rfind("d=", 0) != 0) return fail();
        return SequenceSpec::theorem5(std::stoi(rest.substr(2)));
    }
    if (head == "explicit") {
        if (rest.empty() || rest[0] != '@') return fail();
        std::ifstream in(rest.substr(1));
        if (!in) throw parameter_error("cannot open sequence file: " + rest.substr(1));
        std::vector<Int> terms;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Int v;
            if (v.set_str(line, 10) != 0)
                throw parameter_error("bad integer in sequence file: '" + line + "'");
            terms.push_back(v);
        }
        return SequenceSpec::explicit_spec(std::move(terms));
    }
    return fail();
}

}  // namespace mdlab::sequences
