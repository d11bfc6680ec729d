#include "polarsim/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "polarsim/config.hpp"
#include "polarsim/figures.hpp"
#include "polarsim/manifest.hpp"
#include "polarsim/writers.hpp"

namespace polarsim {

namespace {

void remove_quietly(const std::string& path) {
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::remove(path, ec);
}

// Every output goes through this: on any failure the partial file (and its
// sidecar, if already written) is deleted before the error propagates.
class OutputSet {
public:
    ~OutputSet() {
        if (!committed_) {
            for (const auto& p : paths_) remove_quietly(p);
        }
    }
    void track(const std::string& path) { paths_.push_back(path); }
    void track_sidecar(const std::string& path) { paths_.push_back(path + ".manifest.json"); }
    void commit() { committed_ = true; }

private:
    std::vector<std::string> paths_;
    bool committed_ = false;
};

TrialConfig to_trial_config(const RunOptions& opts) {
    TrialConfig cfg;
    cfg.bandit = BanditConfig::make(opts.p_b, opts.n, opts.k);
    const auto kind = parse_trust_kind(opts.policy);
    if (!kind) {
        throw ConfigError(
            "policy must be one of none, ignore_linear, anti_linear, logistic, "
            "exponential, bounded_logistic, got \"" +
            opts.policy + "\"");
    }
    cfg.policy = TrustPolicy{*kind, opts.m};
    cfg.seed = opts.seed;
    cfg.max_rounds = opts.max_rounds;
    cfg.validate();
    return cfg;
}

std::string run_config_echo(const RunOptions& opts) {
    std::string s;
    s += "k=" + std::to_string(opts.k);
    s += " p_b=" + format_shortest(opts.p_b);
    s += " n=" + std::to_string(opts.n);
    s += " m=" + format_shortest(opts.m);
    s += " policy=" + opts.policy;
    s += " seed=" + std::to_string(opts.seed);
    s += " max_rounds=" + std::to_string(opts.max_rounds);
    return s;
}

int guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const TrialConfig cfg = to_trial_config(opts);

        OutputSet outputs;
        std::ofstream trace;
        std::size_t trace_rows = 0;
        RoundObserver observer;
        if (!opts.trace_path.empty()) {
            outputs.track(opts.trace_path);
            trace.open(opts.trace_path, std::ios::binary | std::ios::trunc);
            if (!trace) {
                throw IoError("cannot open " + opts.trace_path + " for writing");
            }
            trace << "round,agent,credence,action,successes\n";
            observer = [&](const RoundRecord& rec) {
                for (std::size_t i = 0; i < rec.credences_before.size(); ++i) {
                    trace << rec.round << ',' << i << ','
                          << format_shortest(rec.credences_before[i]) << ','
                          << to_string(rec.actions[i]) << ',' << rec.reports[i].successes
                          << '\n';
                    ++trace_rows;
                }
            };
        }

        const TrialResult result =
            run_trial(cfg, observer ? &observer : nullptr);

        if (trace.is_open()) {
            // Closing block: the credences the trial ended on.
            for (std::size_t i = 0; i < result.final_credences.size(); ++i) {
                trace << result.rounds << ',' << i << ','
                      << format_shortest(result.final_credences[i]) << ",-,0\n";
                ++trace_rows;
            }
            trace.flush();
            if (!trace) {
                throw IoError("failed while writing " + opts.trace_path);
            }
            trace.close();

            RunManifest manifest;
            manifest.command = "run";
            manifest.config_echo = run_config_echo(opts);
            manifest.base_seed = opts.seed;
            manifest.outputs.push_back(
                {opts.trace_path, fnv1a64_file(opts.trace_path), trace_rows});
            outputs.track_sidecar(opts.trace_path);
            write_manifest_sidecar(opts.trace_path, manifest);
            outputs.commit();
        }

        out << "outcome,rounds,false_fraction\n"
            << to_string(result.outcome) << ',' << result.rounds << ','
            << format_shortest(result.false_fraction) << "\n";
    });
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.jobs < 1) {
            throw ConfigError("jobs must be an integer >= 1, got " +
                              std::to_string(opts.jobs));
        }
        std::ifstream in(opts.config_path, std::ios::binary);
        if (!in) {
            throw IoError("cannot read config file " + opts.config_path);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        const ParsedConfig parsed = parse_config(buf.str());
        if (!parsed.defaulted_keys.empty()) {
            err << "note: using defaults for: ";
            for (std::size_t i = 0; i < parsed.defaulted_keys.size(); ++i) {
                err << (i ? ", " : "") << parsed.defaulted_keys[i];
            }
            err << "\n";
        }

        const SweepResult result = run_sweep(parsed.spec, opts.jobs);

        OutputSet outputs;
        outputs.track(opts.out_path);
        outputs.track(opts.agg_path);

        std::size_t trial_rows = 0;
        std::size_t agg_rows = 0;
        {
            std::ofstream trials_out(opts.out_path, std::ios::binary | std::ios::trunc);
            if (!trials_out) {
                throw IoError("cannot open " + opts.out_path + " for writing");
            }
            trial_rows = write_trials_csv(trials_out, result);
            trials_out.flush();
            if (!trials_out) {
                throw IoError("failed while writing " + opts.out_path);
            }
        }
        {
            std::ofstream agg_out(opts.agg_path, std::ios::binary | std::ios::trunc);
            if (!agg_out) {
                throw IoError("cannot open " + opts.agg_path + " for writing");
            }
            agg_rows = write_agg_csv(agg_out, result);
            agg_out.flush();
            if (!agg_out) {
                throw IoError("failed while writing " + opts.agg_path);
            }
        }

        RunManifest manifest;
        manifest.command = "sweep";
        manifest.config_echo = canonical_config_line(parsed.spec);
        manifest.base_seed = parsed.spec.base_seed;
        manifest.outputs.push_back({opts.out_path, fnv1a64_file(opts.out_path), trial_rows});
        manifest.outputs.push_back({opts.agg_path, fnv1a64_file(opts.agg_path), agg_rows});
        outputs.track_sidecar(opts.out_path);
        write_manifest_sidecar(opts.out_path, manifest);
        outputs.track_sidecar(opts.agg_path);
        write_manifest_sidecar(opts.agg_path, manifest);
        outputs.commit();

        std::uint64_t undecided = 0;
        for (const auto& s : result.stats) {
            undecided += static_cast<std::uint64_t>(s.n_undecided);
        }
        out << "cells=" << result.cells.size() << " trials=" << result.trials_executed
            << " undecided=" << undecided << " -> " << opts.out_path << ", "
            << opts.agg_path << "\n";
    });
}

int cmd_figure(const FigureOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.jobs < 1) {
            throw ConfigError("jobs must be an integer >= 1, got " +
                              std::to_string(opts.jobs));
        }
        if (opts.trials < 0) {
            throw ConfigError("trials must be an integer >= 1, got " +
                              std::to_string(opts.trials));
        }
        FigureRequest req;
        req.which = opts.which;
        req.trials_override = opts.trials;
        req.base_seed = opts.base_seed;
        req.jobs = opts.jobs;
        const FigureData fig = make_figure(req);

        const std::string path = opts.out_path.empty() ? fig.name + ".csv" : opts.out_path;
        OutputSet outputs;
        outputs.track(path);
        {
            std::ofstream fout(path, std::ios::binary | std::ios::trunc);
            if (!fout) {
                throw IoError("cannot open " + path + " for writing");
            }
            for (const auto& line : fig.comments) {
                fout << line << '\n';
            }
            fout << fig.header << '\n';
            for (const auto& row : fig.rows) {
                fout << row << '\n';
            }
            fout.flush();
            if (!fout) {
                throw IoError("failed while writing " + path);
            }
        }

        RunManifest manifest;
        manifest.command = "figure " + fig.name;
        manifest.config_echo =
            fig.simulated ? canonical_config_line(fig.spec) : "analytic";
        manifest.base_seed = opts.base_seed;
        manifest.outputs.push_back({path, fnv1a64_file(path), fig.rows.size()});
        outputs.track_sidecar(path);
        write_manifest_sidecar(path, manifest);
        outputs.commit();

        out << fig.name << ": " << fig.rows.size() << " rows -> " << path << "\n";
    });
}

}  // namespace polarsim
