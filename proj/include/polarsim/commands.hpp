#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace polarsim {

// Exit codes shared by all subcommands:
//   0  success
//   2  configuration problem (bad flag value, config parse or domain error)
//   3  I/O or runtime failure; partially written outputs are removed
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

struct RunOptions {
    int k = 10;
    double p_b = 0.7;
    int n = 20;
    double m = 2.0;
    std::string policy = "ignore_linear";
    std::uint64_t seed = 0;
    std::uint64_t max_rounds = 1'000'000;
    std::string trace_path;  // empty: no trace file
};

struct SweepOptions {
    std::string config_path;
    std::string out_path = "trials.csv";
    std::string agg_path = "agg.csv";
    int jobs = 1;
};

struct FigureOptions {
    std::string which;
    std::string out_path;  // empty: "<which>.csv"
    int trials = 0;        // 0: figure default
    std::uint64_t base_seed = 0;
    int jobs = 1;
};

// Single trial; prints `outcome,rounds,false_fraction` (with header) to `out`,
// optionally streaming a per-round trace CSV.
int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

// Full grid sweep from a config file to trials.csv / agg.csv plus manifests.
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

// One of the prebaked figure datasets.
int cmd_figure(const FigureOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace polarsim
