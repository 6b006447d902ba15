#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdlab/discrepancy.hpp"
#include "mdlab/rational.hpp"

namespace mdlab::harness {

struct ProfileRecord {
    std::size_t n;
    double d_n;
    double nd_n;
    double running_max_nd;  // max over checkpoints <= n
};

// attaches the running maximum (the "infinitely many N" reading: records, not
// raw values, carry the exponent)
std::vector<ProfileRecord> with_running_max(const std::vector<discrepancy::ProfilePoint>& pts);

enum class XTransform { LogN, LogLogN };

struct FitResult {
    double slope;
    double intercept;
    double r2;
};

// OLS of log(running_max_nd) against log N or log log N
FitResult fit_exponent(const std::vector<ProfileRecord>& records, XTransform xt);

std::vector<std::size_t> pow2_checkpoints(int lo_exp, int hi_exp);
std::vector<std::size_t> default_checkpoints();  // 2^7..2^15

// The seed sets shipped with the experiments; acceptance runs use exactly these.
const std::vector<uint64_t>& shipped_seeds10();
const std::vector<uint64_t>& shipped_seeds5();

struct ExperimentConfig {
    std::string name;  // profile | norms | t4-search | sl-growth
    std::string seq = "poly:0,0,1";
    std::vector<uint64_t> seeds;
    unsigned alpha_bits = 192;
    std::vector<std::size_t> checkpoints;  // profile
    std::size_t n = 256;                   // norms
    std::size_t grid = std::size_t(1) << 20;  // norms
    std::string eta = "0.5";               // t4-search, parsed as exact rational
    int l_max = 18;                        // t4-search
    int safety = 64;                       // t4-search
    int shrink_base = 2;                   // t4-search family [0, base^-L)
    std::vector<long> sl_scales = {8, 16, 32, 64};  // sl-growth
    long long beta = 2;                    // sl-growth
    std::string out_dir = ".";
    int threads = 1;

    std::string canonical() const;  // one-line form fed to the config hash
    std::string hash_hex() const;   // FNV-1a of canonical()
};

struct ExperimentResult {
    std::vector<std::string> files_written;
    std::string summary_json;
};

// Executes a named experiment, writes CSV artifacts plus a JSON summary under
// out_dir, echoes the config hash and seeds. Byte-identical on rerun.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// fixed-format helpers shared by the CLI (17 significant digits, round-trip safe)
std::string format_double(double x);

}  // namespace mdlab::harness
