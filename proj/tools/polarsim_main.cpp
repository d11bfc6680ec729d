#include <iostream>

#include "CLI11.hpp"
#include "polarsim/commands.hpp"
#include "polarsim/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Networked Bayesian agents on a two-armed bandit: run trials, sweep "
                 "parameter grids, and reproduce the bundled figure datasets."};
    app.set_version_flag("--version",
                         std::string(polarsim::kToolName) + " " + polarsim::kToolVersion);
    app.require_subcommand(1);

    polarsim::RunOptions run_opts;
    CLI::App* run = app.add_subcommand("run", "Run a single trial and print its outcome");
    run->add_option("--k", run_opts.k, "Number of agents (>= 2)");
    run->add_option("--p_b", run_opts.p_b, "True success rate of arm B, in (0.5, 1.0)");
    run->add_option("--n", run_opts.n, "Pulls per agent per round (>= 1)");
    run->add_option("--m", run_opts.m, "Mistrust multiplier (>= 0)");
    run->add_option("--policy", run_opts.policy,
                    "Trust policy: none, ignore_linear, anti_linear, logistic, "
                    "exponential, bounded_logistic");
    run->add_option("--seed", run_opts.seed, "Trial seed");
    run->add_option("--max-rounds", run_opts.max_rounds, "Round cap");
    run->add_option("--trace", run_opts.trace_path,
                    "Write a per-round credence/action/evidence trace CSV here");

    polarsim::SweepOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter grid from a config file");
    sweep->add_option("--config", sweep_opts.config_path, "Flat key = value config file")
        ->required();
    sweep->add_option("--out", sweep_opts.out_path, "Per-trial CSV path");
    sweep->add_option("--agg", sweep_opts.agg_path, "Per-cell aggregate CSV path");
    sweep->add_option("--jobs", sweep_opts.jobs, "Worker threads (output is identical "
                                                 "for any value)");

    polarsim::FigureOptions fig_opts;
    CLI::App* figure = app.add_subcommand("figure", "Emit one of the bundled figure datasets");
    figure->add_option("which", fig_opts.which, "fig1 .. fig6")->required();
    figure->add_option("--out", fig_opts.out_path, "Output CSV path (default <which>.csv)");
    figure->add_option("--trials", fig_opts.trials, "Trials per cell (0 = figure default)");
    figure->add_option("--seed", fig_opts.base_seed, "Base seed");
    figure->add_option("--jobs", fig_opts.jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? polarsim::kExitOk : polarsim::kExitConfig;
    }

    if (run->parsed()) return polarsim::cmd_run(run_opts, std::cout, std::cerr);
    if (sweep->parsed()) return polarsim::cmd_sweep(sweep_opts, std::cout, std::cerr);
    if (figure->parsed()) return polarsim::cmd_figure(fig_opts, std::cout, std::cerr);
    return polarsim::kExitConfig;
}
