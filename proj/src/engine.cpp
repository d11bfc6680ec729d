#include "polarsim/engine.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace polarsim {

namespace {

constexpr std::uint64_t kStagnationWindow = 1000;
constexpr double kStagnationEps = 1e-9;

bool is_nonlinear(TrustKind k) {
    return k == TrustKind::Logistic || k == TrustKind::Exponential ||
           k == TrustKind::BoundedLogistic;
}

}  // namespace

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::TrueConsensus: return "true_consensus";
        case Outcome::FalseConsensus: return "false_consensus";
        case Outcome::Polarized: return "polarized";
        case Outcome::Undecided: return "undecided";
        case Outcome::Ongoing: return "ongoing";
    }
    return "?";
}

std::string to_string(TrustKind k) {
    switch (k) {
        case TrustKind::None: return "none";
        case TrustKind::IgnoreLinear: return "ignore_linear";
        case TrustKind::AntiLinear: return "anti_linear";
        case TrustKind::Logistic: return "logistic";
        case TrustKind::Exponential: return "exponential";
        case TrustKind::BoundedLogistic: return "bounded_logistic";
    }
    return "?";
}

std::string to_string(Arm a) { return a == Arm::A ? "A" : "B"; }

void TrialConfig::validate() const {
    BanditConfig::make(bandit.p_b, bandit.n_pulls, bandit.k_agents);
    if (!(policy.m >= 0.0) || !std::isfinite(policy.m)) {
        throw ConfigError("m must be a finite value >= 0");
    }
    if (max_rounds < 1) {
        throw ConfigError("max_rounds must be >= 1");
    }
    const auto& t = thresholds;
    if (!(t.anti_low > 0.0) || !(t.anti_low < t.low) || !(t.low < t.high) ||
        !(t.high < 1.0)) {
        throw ConfigError(
            "thresholds must satisfy 0 < anti_low_threshold < low_threshold"
            " < high_threshold < 1");
    }
}

PopulationState init_population(const TrialConfig& cfg) {
    cfg.validate();
    PopulationState state{{}, 0, Xoshiro256StarStar(cfg.seed)};
    state.credences.resize(static_cast<std::size_t>(cfg.bandit.k_agents));
    for (auto& c : state.credences) {
        c = state.rng.uniform_open01();
    }
    return state;
}

std::vector<Arm> choose_actions(const PopulationState& state) {
    std::vector<Arm> actions(state.credences.size());
    for (std::size_t i = 0; i < actions.size(); ++i) {
        actions[i] = state.credences[i] < 0.5 ? Arm::A : Arm::B;
    }
    return actions;
}

std::vector<EvidenceReport> generate_evidence(const std::vector<Arm>& actions,
                                              const BanditConfig& bandit,
                                              Xoshiro256StarStar& rng) {
    std::vector<EvidenceReport> reports(actions.size());
    for (std::size_t i = 0; i < actions.size(); ++i) {
        reports[i].source = static_cast<int>(i);
        if (actions[i] == Arm::B) {
            reports[i].pulls = bandit.n_pulls;
            reports[i].successes = sample_binomial(rng, bandit.n_pulls, bandit.p_good());
        }
    }
    return reports;
}

void update_round(PopulationState& state, const std::vector<EvidenceReport>& reports,
                  const TrialConfig& cfg) {
    const std::vector<Credence> start = state.credences;  // synchronous snapshot
    const std::size_t k = start.size();

    std::vector<int> order;
    order.reserve(k);
    for (const auto& rep : reports) {
        if (rep.informative()) {
            order.push_back(rep.source);
        }
    }
    const bool shuffled = cfg.evidence_order == EvidenceOrder::Shuffled;
    if (shuffled && order.size() > 1) {
        // Fisher-Yates; one permutation per round, shared by all agents.
        for (std::size_t i = order.size() - 1; i > 0; --i) {
            const auto j = static_cast<std::size_t>(state.rng.uniform01() *
                                                    static_cast<double>(i + 1));
            std::swap(order[i], order[j]);
        }
    }

    for (std::size_t i = 0; i < k; ++i) {
        Credence c = start[i];
        const auto fold = [&](const EvidenceReport& rep) {
            const std::size_t src = static_cast<std::size_t>(rep.source);
            const double d = src == i ? 0.0 : std::abs(start[i] - start[src]);
            const double p_i_e = evidence_prior(c, rep, cfg.bandit);
            const double w = trust_weight(cfg.policy, d, p_i_e);
            c = jeffrey_update(c, rep, cfg.bandit, w);
        };
        if (!shuffled && reports[i].informative()) {
            fold(reports[i]);  // own report first
        }
        for (int src : order) {
            if (!shuffled && static_cast<std::size_t>(src) == i) continue;
            fold(reports[static_cast<std::size_t>(src)]);
        }
        state.credences[i] = c;
    }
    ++state.round;
}

Outcome classify(const PopulationState& state, const TrialConfig& cfg,
                 bool stagnant_window) {
    const auto& c = state.credences;
    const auto& t = cfg.thresholds;

    bool all_high = true;
    bool all_low = true;
    for (double ci : c) {
        all_high = all_high && ci > t.high;
        all_low = all_low && ci < t.low;
    }
    if (all_high) return Outcome::TrueConsensus;
    if (all_low) return Outcome::FalseConsensus;

    if (cfg.policy.is_linear() && cfg.policy.m > 1.0) {
        const double low_edge =
            cfg.policy.kind == TrustKind::AntiLinear ? t.anti_low : t.low;
        std::vector<std::size_t> high_camp;
        std::vector<std::size_t> low_camp;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] > t.high) {
                high_camp.push_back(i);
            } else if (cfg.policy.kind == TrustKind::AntiLinear ? c[i] < low_edge
                                                                : c[i] <= low_edge) {
                low_camp.push_back(i);
            } else {
                return Outcome::Ongoing;  // somebody sits between the camps
            }
        }
        if (high_camp.empty() || low_camp.empty()) return Outcome::Ongoing;
        for (std::size_t hi : high_camp) {
            for (std::size_t lo : low_camp) {
                if (cfg.policy.m * std::abs(c[hi] - c[lo]) < 1.0) {
                    return Outcome::Ongoing;  // this pair still listens
                }
            }
        }
        return Outcome::Polarized;
    }

    if (is_nonlinear(cfg.policy.kind) && stagnant_window) {
        bool has_high = false;
        bool has_low = false;
        for (double ci : c) {
            has_high = has_high || ci > t.high;
            has_low = has_low || ci < t.low;
        }
        if (has_high && has_low) return Outcome::Polarized;
    }

    return Outcome::Ongoing;
}

double false_fraction(const std::vector<Credence>& credences) {
    if (credences.empty()) return 0.0;
    std::size_t n_false = 0;
    for (double c : credences) {
        if (c < 0.5) ++n_false;
    }
    return static_cast<double>(n_false) / static_cast<double>(credences.size());
}

TrialResult run_trial(const TrialConfig& cfg, const RoundObserver* observer) {
    PopulationState state = init_population(cfg);
    const bool track_stagnation = is_nonlinear(cfg.policy.kind);

    Outcome outcome = Outcome::Undecided;
    std::vector<Credence> prev;
    std::uint64_t stagnant_rounds = 0;

    while (state.round < cfg.max_rounds) {
        const auto actions = choose_actions(state);
        const auto reports = generate_evidence(actions, cfg.bandit, state.rng);
        if (observer) {
            (*observer)({state.round, state.credences, actions, reports});
        }
        if (track_stagnation) {
            prev = state.credences;
        }
        update_round(state, reports, cfg);

        bool stagnant_window = false;
        if (track_stagnation) {
            double max_move = 0.0;
            for (std::size_t i = 0; i < prev.size(); ++i) {
                max_move = std::max(max_move, std::abs(state.credences[i] - prev[i]));
            }
            stagnant_rounds = max_move < kStagnationEps ? stagnant_rounds + 1 : 0;
            stagnant_window = stagnant_rounds >= kStagnationWindow;
        }

        const Outcome o = classify(state, cfg, stagnant_window);
        if (o != Outcome::Ongoing) {
            outcome = o;
            break;
        }
    }

    TrialResult result;
    result.outcome = outcome;
    result.rounds = state.round;
    result.final_credences = std::move(state.credences);
    result.false_fraction = false_fraction(result.final_credences);
    return result;
}

}  // namespace polarsim
