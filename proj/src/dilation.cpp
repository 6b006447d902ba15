#include "mdlab/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mdlab/errors.hpp"
#include "mdlab/expsum.hpp"

namespace mdlab::dilation {

namespace {

// membership of the orbit residue r (so x = r/q) in a fixed union, as integer
// bounds: x in [a,b) iff ceil(a q) <= r <= ceil(b q) - 1
struct ResidueBounds {
    std::vector<Int> lo, hi;

    ResidueBounds(const IntervalUnion& r, const Int& q) {
        lo.reserve(r.component_count());
        hi.reserve(r.component_count());
        for (const Interval& iv : r.components()) {
            lo.push_back(ceil_div(iv.a.get_num() * q, iv.a.get_den()));
            hi.push_back(ceil_div(iv.b.get_num() * q, iv.b.get_den()) - 1);
        }
    }

    bool contains(const Int& r) const {
        auto it = std::upper_bound(lo.begin(), lo.end(), r);
        if (it == lo.begin()) return false;
        std::size_t idx = std::size_t(it - lo.begin()) - 1;
        return r <= hi[idx];
    }
};

Rat pow_rat(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    out.canonicalize();
    return out;
}

}  // namespace

long long dilated_hits(const IntervalUnion& r, const AlphaValue& alpha, long long h_budget) {
    if (h_budget < 1) throw parameter_error("dilated_hits: H must be >= 1");
    ResidueBounds bounds(r, alpha.den());
    long long hits = 0;
    Int res = 0;
    for (long long h = 1; h <= h_budget; ++h) {
        res += alpha.num();
        if (res >= alpha.den()) res -= alpha.den();
        if (bounds.contains(res)) ++hits;
    }
    return hits;
}

std::optional<long long> first_hit(const IntervalUnion& r, const AlphaValue& alpha,
                                   long long h_max) {
    if (h_max < 1) throw parameter_error("first_hit: h_max must be >= 1");
    if (r.component_count() == 0) return std::nullopt;
    ResidueBounds bounds(r, alpha.den());
    Int res = 0;
    for (long long h = 1; h <= h_max; ++h) {
        res += alpha.num();
        if (res >= alpha.den()) res -= alpha.den();
        if (bounds.contains(res)) return h;
    }
    return std::nullopt;
}

std::vector<double> quantize_expsum(const std::vector<Int>& terms, std::size_t cells) {
    expsum::ExpSumGrid grid = expsum::grid_modulus_fft(terms, cells);
    std::vector<double> g;
    g.reserve(cells);
    for (const auto& s : grid.values) g.push_back(std::abs(s));
    return g;
}

Theorem3Params::Theorem3Params(Rat tau_, Rat eps_, int t_, Rat b_prime_, Rat b_,
                               std::vector<long long> block_lengths_)
    : tau(std::move(tau_)),
      eps(std::move(eps_)),
      t(t_),
      b_prime(std::move(b_prime_)),
      b(std::move(b_)),
      block_lengths(std::move(block_lengths_)) {
    if (!(tau > 0 && tau < 1)) throw parameter_error("theorem3: tau must be in (0,1)");
    if (!(eps > 0 && eps < tau / 2))
        throw parameter_error("theorem3: eps must be in (0, tau/2)");
    if (t < 1) throw parameter_error("theorem3: t must be >= 1");
    if (!(b_prime > 1)) throw parameter_error("theorem3: B' must be > 1");
    if (!(b > b_prime)) throw parameter_error("theorem3: B must be > B'");
    for (std::size_t i = 0; i < block_lengths.size(); ++i) {
        long long bl = block_lengths[i];
        if (bl < 1) throw parameter_error("theorem3: B_L must be positive");
        if (i && block_lengths[i] <= block_lengths[i - 1])
            throw parameter_error("theorem3: B_L must be strictly increasing");
        unsigned long scale = (unsigned long)(i + 1);
        if (Rat((long)bl) < pow_rat(b_prime, scale) || Rat((long)bl) > pow_rat(b, scale))
            throw parameter_error("theorem3: B_L outside [(B')^L, B^L] at L=" +
                                  std::to_string(scale));
    }
}

long Theorem3Params::q_levels() const {
    Rat x = (1 - tau + 2 * eps) / (3 * eps);
    x.canonicalize();
    return (long)floor_rat(x).get_si() + 1;
}

Rat Theorem3Params::delta_exponent(long i) const {
    Rat e = tau - 2 * eps + 3 * eps * Rat(i);
    e.canonicalize();
    return e;
}

long long Theorem3Params::block_length(int scale) const {
    if (scale < 1 || std::size_t(scale) > block_lengths.size())
        throw parameter_error("theorem3: no B_L recorded for this scale");
    return block_lengths[scale - 1];
}

std::size_t Theorem3Params::grid_cells(int scale) const {
    if (scale < 1) throw parameter_error("theorem3: scale must be >= 1");
    Rat p = pow_rat(b, (unsigned long)((1 + t) * scale));
    Int cells = ceil_div(p.get_num(), p.get_den());
    if (cells > (std::size_t(1) << 26))
        throw resource_error("theorem3: quantization grid larger than 2^26 cells");
    return (std::size_t)cells.get_ui();
}

LevelSetLadder level_ladder(const std::vector<double>& g, const Theorem3Params& params,
                            int scale) {
    if (g.empty()) throw parameter_error("level_ladder: empty step function");
    const std::size_t cells = g.size();
    const double block = double(params.block_length(scale));

    LevelSetLadder ladder;
    ladder.q = params.q_levels();
    ladder.thresholds.reserve(ladder.q + 1);
    for (long i = 0; i <= ladder.q; ++i)
        ladder.thresholds.push_back(std::pow(block, params.delta_exponent(i).get_d()));

    ladder.levels.reserve(ladder.q);
    for (long i = 0; i < ladder.q; ++i) {
        std::vector<Interval> run;
        std::size_t j = 0;
        while (j < cells) {
            if (g[j] > ladder.thresholds[i] && g[j] <= ladder.thresholds[i + 1]) {
                std::size_t start = j;
                while (j < cells && g[j] > ladder.thresholds[i] &&
                       g[j] <= ladder.thresholds[i + 1])
                    ++j;
                Rat a((unsigned long)start, (unsigned long)cells);
                Rat b((unsigned long)j, (unsigned long)cells);
                a.canonicalize();
                b.canonicalize();
                run.push_back({a, b});
            } else {
                ++j;
            }
        }
        ladder.levels.push_back(IntervalUnion::make(std::move(run)));
    }

    double best = 0.0;
    for (long i = 0; i < ladder.q; ++i) {
        double score = ladder.thresholds[i + 1] * ladder.levels[i].measure();
        if (ladder.levels[i].component_count() > 0 && score > best) {
            best = score;
            ladder.selected = i;
        }
    }
    if (ladder.selected) {
        double target = std::pow(block, Rat(params.tau - params.eps).get_d()) / (4.0 * double(ladder.q));
        ladder.selection_meets_budget = best >= target;
    }
    return ladder;
}

DilationBudget DilationBudget::make(const Rat& eta, int scale, const Rat& measure,
                                    const Rat& component_base, const Rat& measure_base) {
    if (!(eta > 0)) throw parameter_error("dilation budget: eta must be positive");
    if (scale < 0) throw parameter_error("dilation budget: scale must be >= 0");
    if (!(measure > 0)) throw parameter_error("dilation budget: measure must be positive");
    Rat growth = pow_rat(1 + eta, (unsigned long)scale) / measure;
    growth.canonicalize();
    DilationBudget b;
    b.eta = eta;
    b.scale = scale;
    b.h_budget = floor_rat(growth);
    Rat gl = pow_rat(component_base * measure_base * (1 + eta), (unsigned long)(2 * scale));
    b.fourier_budget = floor_rat(gl);
    return b;
}

std::vector<SearchRecord> theorem4_search(const std::function<IntervalUnion(int)>& family,
                                          const AlphaValue& alpha, const Rat& eta,
                                          int l_max, int safety_factor) {
    if (l_max < 1) throw parameter_error("theorem4_search: l_max must be >= 1");
    if (safety_factor < 1) throw parameter_error("theorem4_search: safety factor must be >= 1");
    if (!(eta > 0)) throw parameter_error("theorem4_search: eta must be positive");

    std::vector<SearchRecord> records;
    records.reserve(l_max);
    for (int scale = 1; scale <= l_max; ++scale) {
        IntervalUnion r = family(scale);
        if (!(r.measure_exact() > 0))
            throw parameter_error("theorem4_search: R_L must have positive measure");
        Rat budget = pow_rat(1 + eta, (unsigned long)scale) / r.measure_exact();
        budget.canonicalize();
        Int h_budget = ceil_div(budget.get_num(), budget.get_den());
        Int h_max = h_budget * safety_factor;
        if (h_max > Int((long)1) << 60)
            throw resource_error("theorem4_search: search budget exceeds 2^60 steps");

        SearchRecord rec;
        rec.scale = scale;
        rec.h_budget = h_budget;
        rec.h_max = h_max;
        rec.measure = r.measure();
        rec.hit = first_hit(r, alpha, (long long)h_max.get_si());
        rec.hit_ratio = rec.hit ? double(*rec.hit) / h_budget.get_d()
                                : std::numeric_limits<double>::quiet_NaN();
        records.push_back(std::move(rec));
    }
    return records;
}

std::function<IntervalUnion(int)> shrink_family(int base) {
    if (base < 2) throw parameter_error("shrink family: base must be >= 2");
    return [base](int scale) {
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), (unsigned long)base, (unsigned long)scale);
        Rat width(1, den);
        width.canonicalize();
        return IntervalUnion::make({{Rat(0), width}});
    };
}

}  // namespace mdlab::dilation
