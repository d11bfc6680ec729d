#include "polarsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace polarsim {

void SweepSpec::validate() const {
    if (k_values.empty() || p_b_values.empty() || n_values.empty() ||
        m_values.empty() || policies.empty()) {
        throw ConfigError("sweep grid must have at least one value per axis");
    }
    if (trials_per_cell < 1) {
        throw ConfigError("trials must be an integer >= 1, got " +
                          std::to_string(trials_per_cell));
    }
    for (int k : k_values) {
        for (double p_b : p_b_values) {
            for (int n : n_values) {
                BanditConfig::make(p_b, n, k);
            }
        }
    }
    for (double m : m_values) {
        if (!(m >= 0.0) || !std::isfinite(m)) {
            throw ConfigError("m must be a finite value >= 0, got " + std::to_string(m));
        }
    }
    TrialConfig probe;
    probe.max_rounds = max_rounds;
    probe.thresholds = thresholds;
    probe.validate();
}

TrialConfig Cell::to_trial_config(const SweepSpec& spec, std::uint64_t seed) const {
    TrialConfig cfg;
    cfg.bandit = BanditConfig::make(p_b, n, k);
    cfg.policy = TrustPolicy{policy, m};
    cfg.seed = seed;
    cfg.max_rounds = spec.max_rounds;
    cfg.thresholds = spec.thresholds;
    cfg.evidence_order = spec.evidence_order;
    return cfg;
}

std::vector<Cell> expand_grid(const SweepSpec& spec) {
    spec.validate();
    std::vector<Cell> cells;
    cells.reserve(spec.k_values.size() * spec.p_b_values.size() * spec.n_values.size() *
                  spec.m_values.size() * spec.policies.size());
    std::size_t index = 0;
    for (int k : spec.k_values) {
        for (double p_b : spec.p_b_values) {
            for (int n : spec.n_values) {
                for (double m : spec.m_values) {
                    for (TrustKind policy : spec.policies) {
                        cells.push_back(Cell{index++, k, p_b, n, m, policy});
                    }
                }
            }
        }
    }
    return cells;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t cell_index,
                         std::uint64_t trial_index) {
    std::uint64_t h = mix64(base_seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (cell_index + 0xbf58476d1ce4e5b9ULL));
    h = mix64(h ^ (trial_index + 0x94d049bb133111ebULL));
    return h;
}

OutcomeStats aggregate_cell(const Cell& cell, const std::vector<TrialRecord>& records) {
    OutcomeStats s;
    s.cell = cell;
    s.trials = static_cast<int>(records.size());

    double sum_rounds = 0.0;
    double sum_rounds_sq = 0.0;
    int n_consensus = 0;
    double sum_ff = 0.0;
    double sum_ff_sq = 0.0;

    for (const auto& r : records) {
        switch (r.outcome) {
            case Outcome::TrueConsensus: ++s.n_true; break;
            case Outcome::FalseConsensus: ++s.n_false; break;
            case Outcome::Polarized: ++s.n_polarized; break;
            default: ++s.n_undecided; break;
        }
        if (r.outcome == Outcome::TrueConsensus || r.outcome == Outcome::FalseConsensus) {
            const double rounds = static_cast<double>(r.rounds);
            sum_rounds += rounds;
            sum_rounds_sq += rounds * rounds;
            ++n_consensus;
        }
        sum_ff += r.false_fraction;
        sum_ff_sq += r.false_fraction * r.false_fraction;
    }

    const double t = static_cast<double>(s.trials);
    if (s.trials > 0) {
        s.freq_true = s.n_true / t;
        s.freq_false = s.n_false / t;
        s.freq_polarized = s.n_polarized / t;
        s.freq_undecided = s.n_undecided / t;
        s.se_true = std::sqrt(s.freq_true * (1.0 - s.freq_true) / t);
        s.se_false = std::sqrt(s.freq_false * (1.0 - s.freq_false) / t);
        s.se_polarized = std::sqrt(s.freq_polarized * (1.0 - s.freq_polarized) / t);
        s.mean_false_fraction = sum_ff / t;
        const double var_ff =
            std::max(0.0, (sum_ff_sq - sum_ff * sum_ff / t) / std::max(1.0, t - 1.0));
        s.se_mean_false_fraction = std::sqrt(var_ff / t);
    }
    if (n_consensus > 0) {
        const double nc = static_cast<double>(n_consensus);
        s.mean_rounds_consensus = sum_rounds / nc;
        const double var_rounds = std::max(
            0.0, (sum_rounds_sq - sum_rounds * sum_rounds / nc) / std::max(1.0, nc - 1.0));
        s.se_mean_rounds_consensus = std::sqrt(var_rounds / nc);
    } else {
        s.mean_rounds_consensus = std::numeric_limits<double>::quiet_NaN();
        s.se_mean_rounds_consensus = std::numeric_limits<double>::quiet_NaN();
    }
    return s;
}

namespace {

TrialRecord run_one(const Cell& cell, const SweepSpec& spec, int trial_index) {
    const std::uint64_t seed =
        trial_seed(spec.base_seed, cell.index, static_cast<std::uint64_t>(trial_index));
    const TrialResult res = run_trial(cell.to_trial_config(spec, seed));
    return TrialRecord{cell.index, trial_index, seed, res.outcome, res.rounds,
                       res.false_fraction};
}

}  // namespace

OutcomeStats run_cell(const Cell& cell, const SweepSpec& spec,
                      std::vector<TrialRecord>* records) {
    spec.validate();
    std::vector<TrialRecord> local;
    local.reserve(static_cast<std::size_t>(spec.trials_per_cell));
    for (int t = 0; t < spec.trials_per_cell; ++t) {
        local.push_back(run_one(cell, spec, t));
    }
    OutcomeStats stats = aggregate_cell(cell, local);
    if (records) {
        *records = std::move(local);
    }
    return stats;
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
    SweepResult result;
    result.cells = expand_grid(spec);

    const std::size_t per_cell = static_cast<std::size_t>(spec.trials_per_cell);
    const std::size_t total = result.cells.size() * per_cell;
    result.trials.resize(total);

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> executed{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t item = next.fetch_add(1);
            if (item >= total) break;
            const Cell& cell = result.cells[item / per_cell];
            const int trial_index = static_cast<int>(item % per_cell);
            result.trials[item] = run_one(cell, spec, trial_index);
            executed.fetch_add(1);
        }
    };

    const int n_threads = std::max(1, jobs);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    result.trials_executed = executed.load();

    result.stats.reserve(result.cells.size());
    for (const Cell& cell : result.cells) {
        const auto begin = result.trials.begin() +
                           static_cast<std::ptrdiff_t>(cell.index * per_cell);
        std::vector<TrialRecord> records(begin, begin + static_cast<std::ptrdiff_t>(per_cell));
        result.stats.push_back(aggregate_cell(cell, records));
    }
    return result;
}

std::vector<PairedCellStats> compare_policies(const std::vector<OutcomeStats>& a,
                                              const std::vector<OutcomeStats>& b) {
    if (a.size() != b.size()) {
        throw ConfigError("compare_policies: grids have different cell counts");
    }
    std::vector<PairedCellStats> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Cell& ca = a[i].cell;
        const Cell& cb = b[i].cell;
        if (ca.k != cb.k || ca.p_b != cb.p_b || ca.n != cb.n || ca.m != cb.m) {
            throw ConfigError("compare_policies: grids differ at cell " +
                              std::to_string(i) + " in a field other than policy");
        }
        PairedCellStats p;
        p.cell_a = ca;
        p.cell_b = cb;
        p.mean_false_fraction_a = a[i].mean_false_fraction;
        p.mean_false_fraction_b = b[i].mean_false_fraction;
        p.diff = p.mean_false_fraction_a - p.mean_false_fraction_b;
        p.se_diff = std::sqrt(a[i].se_mean_false_fraction * a[i].se_mean_false_fraction +
                              b[i].se_mean_false_fraction * b[i].se_mean_false_fraction);
        out.push_back(p);
    }
    return out;
}

std::vector<PairedCellStats> compare_policies(const SweepSpec& spec, TrustKind policy_a,
                                              TrustKind policy_b, int jobs) {
    SweepSpec spec_a = spec;
    spec_a.policies = {policy_a};
    SweepSpec spec_b = spec;
    spec_b.policies = {policy_b};
    const SweepResult ra = run_sweep(spec_a, jobs);
    const SweepResult rb = run_sweep(spec_b, jobs);
    return compare_policies(ra.stats, rb.stats);
}

}  // namespace polarsim
