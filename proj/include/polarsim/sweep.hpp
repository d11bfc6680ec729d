#pragma once

#include <cstdint>
#include <vector>

#include "polarsim/engine.hpp"

namespace polarsim {

// Cartesian parameter grid plus everything shared across its cells.
struct SweepSpec {
    std::vector<int> k_values{10};
    std::vector<double> p_b_values{0.7};
    std::vector<int> n_values{20};
    std::vector<double> m_values{2.0};
    std::vector<TrustKind> policies{TrustKind::IgnoreLinear};
    int trials_per_cell = 1000;
    std::uint64_t base_seed = 0;
    std::uint64_t max_rounds = 1'000'000;
    Thresholds thresholds;
    EvidenceOrder evidence_order = EvidenceOrder::Fixed;

    void validate() const;  // throws ConfigError
};

struct Cell {
    std::size_t index = 0;
    int k = 0;
    double p_b = 0.0;
    int n = 0;
    double m = 0.0;
    TrustKind policy = TrustKind::None;

    TrialConfig to_trial_config(const SweepSpec& spec, std::uint64_t seed) const;
};

// Cells in lexicographic order of (k, p_b, n, m, policy), each field iterated
// in the order given in the spec; cell_index is the position in that order.
std::vector<Cell> expand_grid(const SweepSpec& spec);

// Per-trial seed: a three-stage mix64 chain over (base_seed, cell_index,
// trial_index). Each stage is bijective, so trials within a cell and cells
// within a sweep can never collide by construction; the policy is not part of
// the seed, so sweeps differing only in policy run on identical randomness.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t cell_index,
                         std::uint64_t trial_index);

// One finished trial, as written to trials.csv.
struct TrialRecord {
    std::size_t cell_index = 0;
    int trial_index = 0;
    std::uint64_t seed = 0;
    Outcome outcome = Outcome::Undecided;
    std::uint64_t rounds = 0;
    double false_fraction = 0.0;
};

struct OutcomeStats {
    Cell cell;
    int trials = 0;
    int n_true = 0;
    int n_false = 0;
    int n_polarized = 0;
    int n_undecided = 0;
    double freq_true = 0.0;
    double freq_false = 0.0;
    double freq_polarized = 0.0;
    double freq_undecided = 0.0;
    // Binomial standard errors sqrt(f(1-f)/trials) for the three main shares.
    double se_true = 0.0;
    double se_false = 0.0;
    double se_polarized = 0.0;
    // Over consensus-reaching trials only; NaN when there are none.
    double mean_rounds_consensus = 0.0;
    double se_mean_rounds_consensus = 0.0;
    // Over all trials in the cell.
    double mean_false_fraction = 0.0;
    double se_mean_false_fraction = 0.0;
};

OutcomeStats aggregate_cell(const Cell& cell, const std::vector<TrialRecord>& records);

// Runs one cell sequentially: trials 0..trials_per_cell-1, each seeded via
// trial_seed.
OutcomeStats run_cell(const Cell& cell, const SweepSpec& spec,
                      std::vector<TrialRecord>* records = nullptr);

struct SweepResult {
    std::vector<Cell> cells;
    std::vector<TrialRecord> trials;  // cell-major, trial index ascending
    std::vector<OutcomeStats> stats;  // one per cell, cell order
    std::uint64_t trials_executed = 0;
};

// Runs the whole grid on `jobs` worker threads. Work items are individual
// trials handed out through an atomic counter; every record lands in a
// preassigned slot and aggregation folds them in index order afterwards, so
// the result is identical for any job count.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 1);

// Side-by-side comparison of two policies on an otherwise identical grid.
struct PairedCellStats {
    Cell cell_a;
    Cell cell_b;
    double mean_false_fraction_a = 0.0;
    double mean_false_fraction_b = 0.0;
    double diff = 0.0;     // a - b
    double se_diff = 0.0;  // combined standard error of the difference
};

// Pre: the two tables come from grids identical except for the policy field.
// Throws ConfigError on any mismatch. Because trial_seed ignores the policy,
// paired cells ran on identical seed sequences.
std::vector<PairedCellStats> compare_policies(const std::vector<OutcomeStats>& a,
                                              const std::vector<OutcomeStats>& b);

// Convenience: runs the spec's grid once per policy and pairs the results.
std::vector<PairedCellStats> compare_policies(const SweepSpec& spec, TrustKind policy_a,
                                              TrustKind policy_b, int jobs = 1);

}  // namespace polarsim
