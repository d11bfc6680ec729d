#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarsim/sweep.hpp"

namespace polarsim {

std::optional<TrustKind> parse_trust_kind(std::string_view name);

// Sweep spec parsed from the flat `key = value` config format, plus the list
// of keys that fell back to defaults (so callers can warn about them).
struct ParsedConfig {
    SweepSpec spec;
    std::vector<std::string> defaulted_keys;
};

// Grammar: one `key = value` per line; blank lines and lines starting with '#'
// are skipped. Grid keys (k, p_b, n, m, policy) take comma-separated lists.
// Scalar keys: trials, base_seed, max_rounds, high_threshold, low_threshold,
// anti_low_threshold, evidence_order. Unknown or duplicate keys are errors;
// every domain violation reports the key, the offending value, and the
// allowed range. Throws ConfigError.
ParsedConfig parse_config(std::string_view text);

// The spec echoed back as a single canonical config line (lists comma-joined,
// reals in shortest round-trip form). Used in manifests and figure headers.
std::string canonical_config_line(const SweepSpec& spec);

}  // namespace polarsim
