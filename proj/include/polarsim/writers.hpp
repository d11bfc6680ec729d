#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "polarsim/sweep.hpp"

namespace polarsim {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shortest decimal string that parses back to exactly the same double.
// Used for raw values (credences, parameters, per-trial fractions) so files
// are byte-reproducible without losing precision.
std::string format_shortest(double v);

// Fixed six decimals, for aggregate statistics columns. NaN prints as "nan".
std::string format_fixed6(double v);

inline constexpr const char* kTrialsHeader =
    "cell_index,k,p_b,n,m,policy,trial_index,seed,outcome,rounds,false_fraction";
inline constexpr const char* kAggHeader =
    "cell_index,k,p_b,n,m,policy,trials,freq_true,freq_false,freq_polarized,"
    "freq_undecided,se_true,se_false,se_polarized,mean_rounds_consensus,"
    "mean_false_fraction";

// Header row first, then one row per trial in cell-major order.
// Returns the number of data rows written.
std::size_t write_trials_csv(std::ostream& os, const SweepResult& result);

// Header row first, then one row per cell.
std::size_t write_agg_csv(std::ostream& os, const SweepResult& result);

}  // namespace polarsim
