#include "mdlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mdlab/cfrac.hpp"
#include "mdlab/dilation.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/expsum.hpp"
#include "mdlab/sequences.hpp"

namespace mdlab::harness {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::vector<ProfileRecord> with_running_max(
    const std::vector<discrepancy::ProfilePoint>& pts) {
    std::vector<ProfileRecord> out;
    out.reserve(pts.size());
    double running = 0.0;
    for (const auto& p : pts) {
        running = std::max(running, p.nd_n);
        out.push_back({p.n, p.d_n, p.nd_n, running});
    }
    return out;
}

FitResult fit_exponent(const std::vector<ProfileRecord>& records, XTransform xt) {
    if (records.size() < 3) throw parameter_error("fit_exponent: need >= 3 records");
    std::vector<double> xs, ys;
    xs.reserve(records.size());
    ys.reserve(records.size());
    for (const auto& r : records) {
        double ln = std::log(double(r.n));
        xs.push_back(xt == XTransform::LogN ? ln : std::log(ln));
        if (!(r.running_max_nd > 0.0))
            throw parameter_error("fit_exponent: nonpositive running max");
        ys.push_back(std::log(r.running_max_nd));
    }
    const double n = double(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx < 1e-30) throw parameter_error("fit_exponent: degenerate x variance");
    double slope = sxy / sxx;
    double intercept = my - slope * mx;
    double r2 = 1.0;
    if (syy > 0.0) r2 = std::clamp(1.0 - (syy - slope * sxy) / syy, 0.0, 1.0);
    return {slope, intercept, r2};
}

std::vector<std::size_t> pow2_checkpoints(int lo_exp, int hi_exp) {
    if (lo_exp < 0 || hi_exp < lo_exp) throw parameter_error("bad checkpoint exponents");
    std::vector<std::size_t> out;
    for (int e = lo_exp; e <= hi_exp; ++e) out.push_back(std::size_t(1) << e);
    return out;
}

std::vector<std::size_t> default_checkpoints() { return pow2_checkpoints(7, 15); }

const std::vector<uint64_t>& shipped_seeds10() {
    static const std::vector<uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    return seeds;
}

const std::vector<uint64_t>& shipped_seeds5() {
    static const std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
    return seeds;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string ExperimentConfig::canonical() const {
    std::ostringstream os;
    os << "name=" << name << ";seq=" << seq << ";seeds=";
    for (std::size_t i = 0; i < seeds.size(); ++i) os << (i ? "," : "") << seeds[i];
    os << ";alpha_bits=" << alpha_bits << ";checkpoints=";
    for (std::size_t i = 0; i < checkpoints.size(); ++i)
        os << (i ? "," : "") << checkpoints[i];
    os << ";n=" << n << ";grid=" << grid << ";eta=" << eta << ";l_max=" << l_max
       << ";safety=" << safety << ";shrink_base=" << shrink_base << ";sl_scales=";
    for (std::size_t i = 0; i < sl_scales.size(); ++i) os << (i ? "," : "") << sl_scales[i];
    os << ";beta=" << beta;
    return os.str();
}

std::string ExperimentConfig::hash_hex() const {
    // FNV-1a, 64-bit
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

namespace {

// ordered parallel map: slot i always receives fn(items[i]), so the worker
// count never changes any output
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F&& fn, int threads)
    -> std::vector<decltype(fn(items[0]))> {
    using R = decltype(fn(items[0]));
    std::vector<R> results(items.size());
    if (threads <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> next{0};
    int workers = std::min<int>(threads, int(items.size()));
    for (int w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                results[i] = fn(items[i]);
        }));
    for (auto& f : futures) f.get();
    return results;
}

void write_file(const fs::path& path, const std::string& content,
                std::vector<std::string>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot write output file: " + path.string());
    out << content;
    written.push_back(path.string());
}

ExperimentResult run_profile(const ExperimentConfig& cfg) {
    auto spec = sequences::parse_spec(cfg.seq);
    auto checkpoints = cfg.checkpoints.empty() ? default_checkpoints() : cfg.checkpoints;
    auto seeds = cfg.seeds.empty() ? shipped_seeds10() : cfg.seeds;

    struct SeedOut {
        uint64_t seed;
        std::string csv;
        FitResult fit;
    };
    auto run_one = [&](uint64_t seed) {
        auto alpha = AlphaValue::random_dyadic(seed, cfg.alpha_bits);
        auto recs = with_running_max(discrepancy::discrepancy_profile(spec, alpha, checkpoints));
        std::ostringstream csv;
        csv << "N,D_N,ND_N,log2N,running_max_ND\n";
        for (const auto& r : recs)
            csv << r.n << "," << format_double(r.d_n) << "," << format_double(r.nd_n) << ","
                << format_double(std::log2(double(r.n))) << ","
                << format_double(r.running_max_nd) << "\n";
        return SeedOut{seed, csv.str(), fit_exponent(recs, XTransform::LogN)};
    };
    auto outs = parallel_map(seeds, run_one, cfg.threads);

    ExperimentResult result;
    fs::create_directories(cfg.out_dir);
    json summary;
    summary["experiment"] = "profile";
    summary["config"] = cfg.canonical();
    summary["config_hash"] = cfg.hash_hex();
    summary["records"] = json::array();
    for (const auto& o : outs) {
        fs::path p = fs::path(cfg.out_dir) / ("profile_seed" + std::to_string(o.seed) + ".csv");
        write_file(p, o.csv, result.files_written);
        summary["records"].push_back({{"seed", o.seed},
                                      {"slope", o.fit.slope},
                                      {"r2", o.fit.r2}});
    }
    result.summary_json = summary.dump(2) + "\n";
    write_file(fs::path(cfg.out_dir) / "profile_summary.json", result.summary_json,
               result.files_written);
    return result;
}

ExperimentResult run_norms(const ExperimentConfig& cfg) {
    auto spec = sequences::parse_spec(cfg.seq);
    auto terms = sequences::generate(spec, cfg.n);
    auto bundle = expsum::norm_bundle(terms, cfg.grid);

    json out;
    out["experiment"] = "norms";
    out["config"] = cfg.canonical();
    out["config_hash"] = cfg.hash_hex();
    out["l1"] = bundle.l1_estimate;
    out["l1_err"] = bundle.l1_error_bound;
    if (bundle.l2_exact.fits_slong_p())
        out["l2"] = (long)bundle.l2_exact.get_si();
    else
        out["l2"] = bundle.l2_exact.get_str();
    if (bundle.l4_exact.fits_slong_p())
        out["l4"] = (long)bundle.l4_exact.get_si();
    else
        out["l4"] = bundle.l4_exact.get_str();
    out["holder"] = bundle.holder_lower;

    ExperimentResult result;
    fs::create_directories(cfg.out_dir);
    result.summary_json = out.dump(2) + "\n";
    write_file(fs::path(cfg.out_dir) / "norms_summary.json", result.summary_json,
               result.files_written);
    return result;
}

ExperimentResult run_t4_search(const ExperimentConfig& cfg) {
    Rat eta = parse_rational(cfg.eta);
    auto family = dilation::shrink_family(cfg.shrink_base);
    auto seeds = cfg.seeds.empty() ? shipped_seeds10() : cfg.seeds;

    struct SeedOut {
        uint64_t seed;
        std::string csv;
        int hits;
    };
    auto run_one = [&](uint64_t seed) {
        auto alpha = AlphaValue::random_dyadic(seed, cfg.alpha_bits);
        auto recs = dilation::theorem4_search(family, alpha, eta, cfg.l_max, cfg.safety);
        std::ostringstream csv;
        csv << "L,H_L,h_max,h_L,ratio,measure\n";
        int hits = 0;
        for (const auto& r : recs) {
            csv << r.scale << "," << r.h_budget.get_str() << "," << r.h_max.get_str() << ",";
            if (r.hit) {
                ++hits;
                csv << *r.hit << "," << format_double(r.hit_ratio);
            } else {
                csv << "miss,nan";
            }
            csv << "," << format_double(r.measure) << "\n";
        }
        return SeedOut{seed, csv.str(), hits};
    };
    auto outs = parallel_map(seeds, run_one, cfg.threads);

    ExperimentResult result;
    fs::create_directories(cfg.out_dir);
    json summary;
    summary["experiment"] = "t4-search";
    summary["config"] = cfg.canonical();
    summary["config_hash"] = cfg.hash_hex();
    summary["records"] = json::array();
    for (const auto& o : outs) {
        fs::path p = fs::path(cfg.out_dir) / ("t4_seed" + std::to_string(o.seed) + ".csv");
        write_file(p, o.csv, result.files_written);
        summary["records"].push_back(
            {{"seed", o.seed}, {"hits", o.hits}, {"scales", cfg.l_max}});
    }
    result.summary_json = summary.dump(2) + "\n";
    write_file(fs::path(cfg.out_dir) / "t4_summary.json", result.summary_json,
               result.files_written);
    return result;
}

ExperimentResult run_sl_growth(const ExperimentConfig& cfg) {
    auto seeds = cfg.seeds.empty() ? shipped_seeds5() : cfg.seeds;

    struct SeedOut {
        uint64_t seed;
        std::string csv;
        double slope;
    };
    auto run_one = [&](uint64_t seed) {
        auto alpha = AlphaValue::random_dyadic(seed, cfg.alpha_bits);
        std::ostringstream csv;
        csv << "L,S_L\n";
        std::vector<double> xs, ys;
        for (long scale : cfg.sl_scales) {
            Int s = cfrac::s_l_statistic(alpha.value(), cfg.beta, scale);
            csv << scale << "," << s.get_str() << "\n";
            xs.push_back(std::log(double(scale)));
            ys.push_back(std::log(s.get_d()));
        }
        // OLS of log S_L on log L
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= double(xs.size());
        my /= double(xs.size());
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        return SeedOut{seed, csv.str(), sxy / sxx};
    };
    auto outs = parallel_map(seeds, run_one, cfg.threads);

    ExperimentResult result;
    fs::create_directories(cfg.out_dir);
    json summary;
    summary["experiment"] = "sl-growth";
    summary["config"] = cfg.canonical();
    summary["config_hash"] = cfg.hash_hex();
    summary["records"] = json::array();
    for (const auto& o : outs) {
        fs::path p = fs::path(cfg.out_dir) / ("sl_seed" + std::to_string(o.seed) + ".csv");
        write_file(p, o.csv, result.files_written);
        summary["records"].push_back({{"seed", o.seed}, {"slope", o.slope}});
    }
    result.summary_json = summary.dump(2) + "\n";
    write_file(fs::path(cfg.out_dir) / "sl_summary.json", result.summary_json,
               result.files_written);
    return result;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.name == "profile") return run_profile(cfg);
    if (cfg.name == "norms") return run_norms(cfg);
    if (cfg.name == "t4-search") return run_t4_search(cfg);
    if (cfg.name == "sl-growth") return run_sl_growth(cfg);
    throw parameter_error("unknown experiment: '" + cfg.name + "'");
}

}  // namespace mdlab::harness
