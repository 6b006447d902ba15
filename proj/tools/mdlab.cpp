// mdlab — metric discrepancy laboratory.
//
// Subcommands mirror the library modules:
//   disc profile    discrepancy profiles over checkpoint prefixes (CSV)
//   expsum norms    L1/L2/L4 norm bundle of the exponential sum (JSON)
//   arith repr      representation-count histograms (CSV)
//   gcdsum eval     GCD sums with the Hilberdink-bound diagnostic
//   dilation t4     dilation first-hit search over a shrinking family (CSV)
//   cfrac expand    continued-fraction expansion of a rational
//   cfrac sl        the S_L partial-quotient statistic
//   experiment      seeded multi-run sweeps with CSV/JSON artifacts
//
// Exit codes: 0 ok, 2 parameter error, 3 resource/certification error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdlab/arith.hpp"
#include "mdlab/cfrac.hpp"
#include "mdlab/dilation.hpp"
#include "mdlab/discrepancy.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/expsum.hpp"
#include "mdlab/gcdsum.hpp"
#include "mdlab/harness.hpp"
#include "mdlab/sequences.hpp"

namespace {

using namespace mdlab;

std::string fmt(double x) { return harness::format_double(x); }

// "seed:<k>", "golden", or an explicit rational/decimal
AlphaValue parse_alpha(const std::string& text, unsigned bits) {
    if (text.rfind("seed:", 0) == 0)
        return AlphaValue::random_dyadic(std::stoull(text.substr(5)), bits);
    if (text == "golden") return AlphaValue::golden(bits);
    return AlphaValue(parse_rational(text));
}

// "2^7..2^15" or a comma list of integers
std::vector<std::size_t> parse_checkpoints(const std::string& text) {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        auto lo = text.substr(0, dots), hi = text.substr(dots + 2);
        if (lo.rfind("2^", 0) == 0 && hi.rfind("2^", 0) == 0)
            return harness::pow2_checkpoints(std::stoi(lo.substr(2)), std::stoi(hi.substr(2)));
        throw parameter_error("checkpoint ranges use the form 2^a..2^b");
    }
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
    return out;
}

std::vector<uint64_t> parse_seed_list(const std::string& text) {
    std::vector<uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
    return out;
}

std::vector<double> load_weights(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw parameter_error("cannot open weight file: " + spec.substr(1));
        std::vector<double> w;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) w.push_back(std::stod(line));
        return w;
    }
    if (spec.rfind("interval:", 0) == 0) {
        // interval:<a>,<b>,<G> -> |u_j| of the centered indicator of [a,b)
        std::stringstream ss(spec.substr(9));
        std::string a, b, g;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, g))
            throw parameter_error("interval weights use the form interval:<a>,<b>,<G>");
        auto r = dilation::IntervalUnion::make({{parse_rational(a), parse_rational(b)}});
        long count = std::stol(g);
        std::vector<double> w;
        w.reserve(count);
        for (long j = 1; j <= count; ++j)
            w.push_back(std::fabs(dilation::indicator_fourier(r, j).u));
        return w;
    }
    throw parameter_error("weights come from @<file> or interval:<a>,<b>,<G>");
}

int run(int argc, char** argv) {
    CLI::App app{"mdlab — exact discrepancy, exponential-sum, and GCD-sum experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned alpha_bits = 192;
    int threads = 1;
    uint64_t base_seed = 1;
    std::string out_dir = ".";
    app.add_option("--alpha-bits", alpha_bits, "mantissa bits for seeded dyadic alpha");
    app.add_option("--threads", threads, "worker threads for seed/checkpoint sweeps");
    app.add_option("--seed", base_seed,
                   "default seed: used for --alpha when omitted, and as the first seed "
                   "of experiment sweeps");
    app.add_option("--out-dir", out_dir, "output directory for experiment artifacts");

    // disc profile
    auto* disc = app.add_subcommand("disc", "discrepancy computations");
    disc->fallthrough();
    auto* profile = disc->add_subcommand("profile", "N*D_N over checkpoint prefixes");
    profile->fallthrough();
    std::string p_seq = "poly:0,0,1", p_alpha, p_checkpoints = "2^7..2^15";
    std::string p_out = "csv";
    profile->add_option("--seq", p_seq, "sequence spec");
    profile->add_option("--alpha", p_alpha, "dilation parameter: p/q, decimal, seed:<k>, golden (defaults to the global seed)");
    profile->add_option("--checkpoints", p_checkpoints, "2^a..2^b or comma list");
    profile->add_option("--out", p_out, "output format (csv)");

    // expsum norms
    auto* expsum_cmd = app.add_subcommand("expsum", "exponential-sum norms");
    expsum_cmd->fallthrough();
    auto* norms = expsum_cmd->add_subcommand("norms", "L1 estimate, exact L2/L4, Hoelder bound");
    norms->fallthrough();
    std::string n_seq = "poly:0,0,1";
    std::size_t n_count = 256, n_grid = std::size_t(1) << 20;
    norms->add_option("--seq", n_seq, "sequence spec");
    norms->add_option("--n", n_count, "number of terms");
    norms->add_option("--grid", n_grid, "quadrature grid size K");

    // arith repr
    auto* arith_cmd = app.add_subcommand("arith", "representation counting");
    arith_cmd->fallthrough();
    auto* repr = arith_cmd->add_subcommand("repr", "histogram of f(x) +- f(y)");
    repr->fallthrough();
    std::string r_poly = "0,0,1", r_mode = "diff", r_out = "csv";
    std::size_t r_range = 100;
    repr->add_option("--poly", r_poly, "polynomial coefficients c0,c1,...,cd");
    repr->add_option("--range", r_range, "argument range X");
    repr->add_option("--mode", r_mode, "sum | diff");
    repr->add_option("--out", r_out, "output format (csv)");

    // gcdsum eval
    auto* gcd_cmd = app.add_subcommand("gcdsum", "GCD sums");
    gcd_cmd->fallthrough();
    auto* eval = gcd_cmd->add_subcommand("eval", "gcd_sum with Hilberdink diagnostic");
    eval->fallthrough();
    std::string w_spec = "interval:0,1/2,64";
    double w_c = 10.0;
    eval->add_option("--weights", w_spec, "@<file> or interval:<a>,<b>,<G>");
    eval->add_option("--c", w_c, "diagnostic constant in the Hilberdink bound");

    // dilation t4
    auto* dil_cmd = app.add_subcommand("dilation", "dilated orbit searches");
    dil_cmd->fallthrough();
    auto* t4 = dil_cmd->add_subcommand("t4", "first-hit search over R_L = [0, b^-L)");
    t4->fallthrough();
    std::string t_family = "shrink:2", t_alpha, t_eta = "0.5";
    int t_lmax = 18, t_safety = 64;
    t4->add_option("--family", t_family, "shrink:<b>");
    t4->add_option("--alpha", t_alpha, "dilation parameter (defaults to the global seed)");
    t4->add_option("--eta", t_eta, "budget slack (exact rational or decimal)");
    t4->add_option("--lmax", t_lmax, "largest scale L");
    t4->add_option("--safety", t_safety, "search cap as a multiple of H_L");

    // cfrac expand / sl
    auto* cf_cmd = app.add_subcommand("cfrac", "continued fractions");
    cf_cmd->fallthrough();
    auto* expand = cf_cmd->add_subcommand("expand", "exact expansion of a rational");
    expand->fallthrough();
    std::string e_rat = "355/113";
    std::size_t e_terms = 64;
    expand->add_option("--rat", e_rat, "positive rational p/q");
    expand->add_option("--max-terms", e_terms, "coefficient cap");
    auto* sl = cf_cmd->add_subcommand("sl", "S_L = sum b_m(beta^k alpha)");
    sl->fallthrough();
    std::string s_alpha;
    long long s_beta = 2;
    long s_scale = 64;
    sl->add_option("--alpha", s_alpha, "dilation parameter (defaults to the global seed)");
    sl->add_option("--beta", s_beta, "dilation base >= 2");
    sl->add_option("--L", s_scale, "scale L");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "named multi-seed experiment");
    exp_cmd->fallthrough();
    std::string x_name = "profile", x_seq = "poly:0,0,1", x_seeds, x_checkpoints, x_eta = "0.5";
    std::size_t x_n = 256, x_grid = std::size_t(1) << 20;
    int x_lmax = 18, x_safety = 64, x_base = 2;
    long long x_beta = 2;
    exp_cmd->add_option("--name", x_name, "profile | norms | t4-search | sl-growth");
    exp_cmd->add_option("--seq", x_seq, "sequence spec");
    exp_cmd->add_option("--seeds", x_seeds, "comma list; defaults to the shipped seeds");
    exp_cmd->add_option("--checkpoints", x_checkpoints, "2^a..2^b or comma list");
    exp_cmd->add_option("--n", x_n, "norms: number of terms");
    exp_cmd->add_option("--grid", x_grid, "norms: grid size");
    exp_cmd->add_option("--eta", x_eta, "t4-search: budget slack");
    exp_cmd->add_option("--lmax", x_lmax, "t4-search: largest scale");
    exp_cmd->add_option("--safety", x_safety, "t4-search: budget multiple");
    exp_cmd->add_option("--shrink-base", x_base, "t4-search: family base");
    exp_cmd->add_option("--beta", x_beta, "sl-growth: dilation base");

    CLI11_PARSE(app, argc, argv);

    auto alpha_or_seeded = [&](const std::string& text) {
        return parse_alpha(text.empty() ? "seed:" + std::to_string(base_seed) : text,
                           alpha_bits);
    };
    auto seed_block = [&](std::size_t count) {
        std::vector<uint64_t> seeds(count);
        for (std::size_t i = 0; i < count; ++i) seeds[i] = base_seed + i;
        return seeds;
    };

    if (profile->parsed()) {
        auto spec = sequences::parse_spec(p_seq);
        auto alpha = alpha_or_seeded(p_alpha);
        auto pts = discrepancy::discrepancy_profile(spec, alpha, parse_checkpoints(p_checkpoints));
        std::printf("N,D_N,ND_N,log2N\n");
        for (const auto& pt : pts)
            std::printf("%zu,%s,%s,%s\n", pt.n, fmt(pt.d_n).c_str(), fmt(pt.nd_n).c_str(),
                        fmt(std::log2(double(pt.n))).c_str());
        return 0;
    }

    if (norms->parsed()) {
        harness::ExperimentConfig cfg;
        cfg.name = "norms";
        cfg.seq = n_seq;
        cfg.n = n_count;
        cfg.grid = n_grid;
        cfg.out_dir = out_dir;
        auto result = harness::run_experiment(cfg);
        std::fputs(result.summary_json.c_str(), stdout);
        return 0;
    }

    if (repr->parsed()) {
        auto poly = sequences::IntPolynomial::parse(r_poly);
        std::vector<Int> values;
        values.reserve(r_range);
        for (std::size_t x = 1; x <= r_range; ++x) values.push_back(poly.eval(Int((unsigned long)x)));
        auto mode = r_mode == "sum" ? arith::ReprMode::Sum
                    : r_mode == "diff" ? arith::ReprMode::Diff
                                       : throw parameter_error("mode must be sum or diff");
        auto hist = arith::repr_histogram(values, mode);
        std::printf("n,count\n");
        for (const auto& [value, count] : hist.counts)
            std::printf("%s,%zu\n", value.get_str().c_str(), count);
        std::fprintf(stderr, "max count %zu at n=%s%s\n", hist.max_count,
                     hist.argmax.get_str().c_str(),
                     mode == arith::ReprMode::Diff ? " (n=0 excluded)" : "");
        return 0;
    }

    if (eval->parsed()) {
        auto weights = load_weights(w_spec);
        auto report = gcdsum::hilberdink_report(weights, w_c);
        std::printf("G,%zu\ngcd_sum,%s\nweight_l2,%s\nratio,%s\nbound,%s\nwithin_bound,%s\n",
                    weights.size(), fmt(report.gcd_sum).c_str(), fmt(report.weight_l2).c_str(),
                    fmt(report.ratio).c_str(), fmt(report.bound).c_str(),
                    report.within_bound ? "true" : "false");
        return 0;
    }

    if (t4->parsed()) {
        if (t_family.rfind("shrink:", 0) != 0)
            throw parameter_error("only shrink:<b> families are supported");
        auto family = dilation::shrink_family(std::stoi(t_family.substr(7)));
        auto alpha = alpha_or_seeded(t_alpha);
        auto recs = dilation::theorem4_search(family, alpha, parse_rational(t_eta), t_lmax,
                                              t_safety);
        std::printf("L,H_L,h_max,h_L,ratio,measure\n");
        for (const auto& rec : recs) {
            std::printf("%d,%s,%s,", rec.scale, rec.h_budget.get_str().c_str(),
                        rec.h_max.get_str().c_str());
            if (rec.hit)
                std::printf("%lld,%s", *rec.hit, fmt(rec.hit_ratio).c_str());
            else
                std::printf("miss,nan");
            std::printf(",%s\n", fmt(rec.measure).c_str());
        }
        return 0;
    }

    if (expand->parsed()) {
        auto e = cfrac::cf_expand(parse_rational(e_rat), e_terms);
        std::printf("[%s", e.b0.get_str().c_str());
        for (std::size_t i = 0; i < e.b.size(); ++i)
            std::printf("%s%s", i ? ", " : "; ", e.b[i].get_str().c_str());
        std::printf("]%s\n", e.terminated ? "" : " ...");
        for (std::size_t i = 0; i < e.p.size(); ++i)
            std::printf("p_%zu/q_%zu = %s/%s\n", i, i, e.p[i].get_str().c_str(),
                        e.q[i].get_str().c_str());
        return 0;
    }

    if (sl->parsed()) {
        auto alpha = alpha_or_seeded(s_alpha);
        Int s = cfrac::s_l_statistic(alpha.value(), s_beta, s_scale);
        std::printf("S_%ld = %s\n", s_scale, s.get_str().c_str());
        return 0;
    }

    if (exp_cmd->parsed()) {
        harness::ExperimentConfig cfg;
        cfg.name = x_name;
        cfg.seq = x_seq;
        if (!x_seeds.empty())
            cfg.seeds = parse_seed_list(x_seeds);
        else
            cfg.seeds = seed_block(x_name == "sl-growth" ? 5 : 10);
        if (!x_checkpoints.empty()) cfg.checkpoints = parse_checkpoints(x_checkpoints);
        cfg.alpha_bits = alpha_bits;
        cfg.n = x_n;
        cfg.grid = x_grid;
        cfg.eta = x_eta;
        cfg.l_max = x_lmax;
        cfg.safety = x_safety;
        cfg.shrink_base = x_base;
        cfg.beta = x_beta;
        cfg.out_dir = out_dir;
        cfg.threads = threads;
        auto result = harness::run_experiment(cfg);
        std::printf("config_hash %s\n", cfg.hash_hex().c_str());
        for (const auto& f : result.files_written) std::printf("wrote %s\n", f.c_str());
        return 0;
    }

    std::fprintf(stderr, "no subcommand action matched\n");
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mdlab::parameter_error& e) {
        std::fprintf(stderr, "parameter error: %s\n", e.what());
        return 2;
    } catch (const mdlab::resource_error& e) {
        std::fprintf(stderr, "resource error: %s\n", e.what());
        return 3;
    } catch (const mdlab::certification_error& e) {
        std::fprintf(stderr, "certification error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
