#include "polarsim/writers.hpp"

#include <charconv>
#include <ostream>

namespace polarsim {

std::string format_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_fixed6(double v) {
    char buf[512];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

std::size_t write_trials_csv(std::ostream& os, const SweepResult& result) {
    os << kTrialsHeader << '\n';
    std::size_t rows = 0;
    for (const TrialRecord& t : result.trials) {
        const Cell& cell = result.cells[t.cell_index];
        os << t.cell_index << ',' << cell.k << ',' << format_shortest(cell.p_b) << ','
           << cell.n << ',' << format_shortest(cell.m) << ',' << to_string(cell.policy)
           << ',' << t.trial_index << ',' << t.seed << ',' << to_string(t.outcome)
           << ',' << t.rounds << ',' << format_shortest(t.false_fraction) << '\n';
        ++rows;
    }
    return rows;
}

std::size_t write_agg_csv(std::ostream& os, const SweepResult& result) {
    os << kAggHeader << '\n';
    std::size_t rows = 0;
    for (const OutcomeStats& s : result.stats) {
        const Cell& cell = s.cell;
        os << cell.index << ',' << cell.k << ',' << format_shortest(cell.p_b) << ','
           << cell.n << ',' << format_shortest(cell.m) << ',' << to_string(cell.policy)
           << ',' << s.trials << ',' << format_fixed6(s.freq_true) << ','
           << format_fixed6(s.freq_false) << ',' << format_fixed6(s.freq_polarized)
           << ',' << format_fixed6(s.freq_undecided) << ',' << format_fixed6(s.se_true)
           << ',' << format_fixed6(s.se_false) << ',' << format_fixed6(s.se_polarized)
           << ',' << format_fixed6(s.mean_rounds_consensus) << ','
           << format_fixed6(s.mean_false_fraction) << '\n';
        ++rows;
    }
    return rows;
}

}  // namespace polarsim
