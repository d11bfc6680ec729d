#include "polarsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "polarsim/writers.hpp"

namespace polarsim {

namespace {

constexpr const char* kPolicyNames =
    "none, ignore_linear, anti_linear, logistic, exponential, bounded_logistic";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(trim(s.substr(pos)));
            break;
        }
        parts.push_back(trim(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return parts;
}

[[noreturn]] void fail(const std::string& key, std::string_view value,
                       const std::string& requirement) {
    throw ConfigError(key + " must be " + requirement + ", got \"" +
                      std::string(value) + "\"");
}

long long parse_int(const std::string& key, std::string_view value,
                    const std::string& requirement) {
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        fail(key, value, requirement);
    }
    return out;
}

std::uint64_t parse_u64(const std::string& key, std::string_view value,
                        const std::string& requirement) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        fail(key, value, requirement);
    }
    return out;
}

double parse_real(const std::string& key, std::string_view value,
                  const std::string& requirement) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(out)) {
        fail(key, value, requirement);
    }
    return out;
}

}  // namespace

std::optional<TrustKind> parse_trust_kind(std::string_view name) {
    if (name == "none") return TrustKind::None;
    if (name == "ignore_linear") return TrustKind::IgnoreLinear;
    if (name == "anti_linear") return TrustKind::AntiLinear;
    if (name == "logistic") return TrustKind::Logistic;
    if (name == "exponential") return TrustKind::Exponential;
    if (name == "bounded_logistic") return TrustKind::BoundedLogistic;
    return std::nullopt;
}

ParsedConfig parse_config(std::string_view text) {
    static const std::set<std::string> known = {
        "k",           "p_b",          "n",
        "m",           "policy",       "trials",
        "base_seed",   "max_rounds",   "high_threshold",
        "low_threshold", "anti_low_threshold", "evidence_order"};

    std::map<std::string, std::string> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                           : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected `key = value`, got \"" + std::string(line) +
                              "\"");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (known.find(key) == known.end()) {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key \"" +
                              key + "\"");
        }
        if (!entries.emplace(key, value).second) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key \"" +
                              key + "\"");
        }
    }

    ParsedConfig out;
    SweepSpec& spec = out.spec;
    const auto take = [&](const char* key) -> std::optional<std::string> {
        const auto it = entries.find(key);
        if (it == entries.end()) {
            out.defaulted_keys.emplace_back(key);
            return std::nullopt;
        }
        return it->second;
    };

    if (const auto v = take("k")) {
        spec.k_values.clear();
        for (const auto part : split(*v, ',')) {
            const long long k = parse_int("k", part, "an integer >= 2");
            if (k < 2 || k > 1'000'000) fail("k", part, "an integer >= 2");
            spec.k_values.push_back(static_cast<int>(k));
        }
    }
    if (const auto v = take("p_b")) {
        spec.p_b_values.clear();
        for (const auto part : split(*v, ',')) {
            const double p = parse_real("p_b", part, "in (0.5, 1.0)");
            if (!(p > 0.5) || !(p < 1.0)) fail("p_b", part, "in (0.5, 1.0)");
            spec.p_b_values.push_back(p);
        }
    }
    if (const auto v = take("n")) {
        spec.n_values.clear();
        for (const auto part : split(*v, ',')) {
            const long long n = parse_int("n", part, "an integer >= 1");
            if (n < 1 || n > 1'000'000) fail("n", part, "an integer >= 1");
            spec.n_values.push_back(static_cast<int>(n));
        }
    }
    if (const auto v = take("m")) {
        spec.m_values.clear();
        for (const auto part : split(*v, ',')) {
            const double m = parse_real("m", part, "a finite value >= 0");
            if (!(m >= 0.0)) fail("m", part, "a finite value >= 0");
            spec.m_values.push_back(m);
        }
    }
    if (const auto v = take("policy")) {
        spec.policies.clear();
        for (const auto part : split(*v, ',')) {
            const auto kind = parse_trust_kind(part);
            if (!kind) fail("policy", part, std::string("one of ") + kPolicyNames);
            spec.policies.push_back(*kind);
        }
    }
    if (const auto v = take("trials")) {
        const long long t = parse_int("trials", *v, "an integer >= 1");
        if (t < 1 || t > 100'000'000) fail("trials", *v, "an integer >= 1");
        spec.trials_per_cell = static_cast<int>(t);
    }
    if (const auto v = take("base_seed")) {
        spec.base_seed = parse_u64("base_seed", *v, "an unsigned 64-bit integer");
    }
    if (const auto v = take("max_rounds")) {
        const std::uint64_t r = parse_u64("max_rounds", *v, "an integer >= 1");
        if (r < 1) fail("max_rounds", *v, "an integer >= 1");
        spec.max_rounds = r;
    }
    const auto threshold = [&](const char* key, double& slot) {
        if (const auto v = take(key)) {
            const double x = parse_real(key, *v, "in (0, 1)");
            if (!(x > 0.0) || !(x < 1.0)) fail(key, *v, "in (0, 1)");
            slot = x;
        }
    };
    threshold("high_threshold", spec.thresholds.high);
    threshold("low_threshold", spec.thresholds.low);
    threshold("anti_low_threshold", spec.thresholds.anti_low);
    if (const auto v = take("evidence_order")) {
        if (*v == "fixed") {
            spec.evidence_order = EvidenceOrder::Fixed;
        } else if (*v == "shuffled") {
            spec.evidence_order = EvidenceOrder::Shuffled;
        } else {
            fail("evidence_order", *v, "one of fixed, shuffled");
        }
    }

    spec.validate();
    return out;
}

std::string canonical_config_line(const SweepSpec& spec) {
    const auto join_reals = [](const std::vector<double>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ',';
            s += format_shortest(xs[i]);
        }
        return s;
    };
    const auto join_ints = [](const std::vector<int>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(xs[i]);
        }
        return s;
    };
    std::string policies;
    for (std::size_t i = 0; i < spec.policies.size(); ++i) {
        if (i) policies += ',';
        policies += to_string(spec.policies[i]);
    }
    std::string line;
    line += "k=" + join_ints(spec.k_values);
    line += " p_b=" + join_reals(spec.p_b_values);
    line += " n=" + join_ints(spec.n_values);
    line += " m=" + join_reals(spec.m_values);
    line += " policy=" + policies;
    line += " trials=" + std::to_string(spec.trials_per_cell);
    line += " base_seed=" + std::to_string(spec.base_seed);
    line += " max_rounds=" + std::to_string(spec.max_rounds);
    line += " high_threshold=" + format_shortest(spec.thresholds.high);
    line += " low_threshold=" + format_shortest(spec.thresholds.low);
    line += " anti_low_threshold=" + format_shortest(spec.thresholds.anti_low);
    line += std::string(" evidence_order=") +
            (spec.evidence_order == EvidenceOrder::Fixed ? "fixed" : "shuffled");
    return line;
}

}  // namespace polarsim
