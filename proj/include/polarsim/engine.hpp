#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polarsim/credal.hpp"
#include "polarsim/rng.hpp"

namespace polarsim {

enum class Arm { A, B };

// Classification of a population. Ongoing is only ever returned by classify();
// finished trials carry one of the other four.
enum class Outcome {
    TrueConsensus,   // every credence > high threshold
    FalseConsensus,  // every credence < low threshold (everyone plays A)
    Polarized,       // stable split between a high group and a low group
    Undecided,       // max_rounds exhausted with no verdict
    Ongoing,
};

std::string to_string(Outcome o);
std::string to_string(TrustKind k);
std::string to_string(Arm a);

struct Thresholds {
    double high = 0.99;      // consensus on B
    double low = 0.5;        // consensus on A / upper edge of the low camp
    double anti_low = 0.01;  // low camp under anti-updating must sit below this
};

// Order in which each agent folds the round's reports into its credence.
// Fixed: own report first, then the rest by ascending source index. Shuffled:
// one seeded permutation per round, shared by every agent (a robustness
// switch; results should not depend materially on it).
enum class EvidenceOrder { Fixed, Shuffled };

struct TrialConfig {
    BanditConfig bandit;
    TrustPolicy policy;
    std::uint64_t seed = 0;
    std::uint64_t max_rounds = 1'000'000;
    Thresholds thresholds;
    EvidenceOrder evidence_order = EvidenceOrder::Fixed;

    void validate() const;  // throws ConfigError
};

struct PopulationState {
    std::vector<Credence> credences;
    std::uint64_t round = 0;
    Xoshiro256StarStar rng;
};

struct TrialResult {
    Outcome outcome = Outcome::Undecided;
    std::uint64_t rounds = 0;  // round at which the classifier fired, or max_rounds
    std::vector<Credence> final_credences;
    double false_fraction = 0.0;  // share of agents ending with credence < 0.5
};

// Everything known about one round as it is executed: the credences agents
// started the round with, and the actions/evidence those credences produced.
struct RoundRecord {
    std::uint64_t round;
    const std::vector<Credence>& credences_before;
    const std::vector<Arm>& actions;
    const std::vector<EvidenceReport>& reports;
};
using RoundObserver = std::function<void(const RoundRecord&)>;

// Draws k_agents credences independently, uniform on the open interval (0,1),
// in agent-index order, from a fresh generator seeded with cfg.seed.
PopulationState init_population(const TrialConfig& cfg);

// Credence < 0.5 plays the safe arm A; 0.5 and above plays B.
std::vector<Arm> choose_actions(const PopulationState& state);

// One report per agent, in agent-index order. B-players consume exactly one
// uniform draw each; A-players consume none and report pulls = 0.
std::vector<EvidenceReport> generate_evidence(const std::vector<Arm>& actions,
                                              const BanditConfig& bandit,
                                              Xoshiro256StarStar& rng);

// Synchronous update: every agent folds the informative reports into its
// credence via jeffrey_update, with trust weights computed from start-of-round
// credence distances (own report counts as distance 0). All agents see the
// same snapshot; the order across agents does not matter.
void update_round(PopulationState& state, const std::vector<EvidenceReport>& reports,
                  const TrialConfig& cfg);

// Outcome of the current state, or Ongoing. Polarization is declared two ways:
//  - linear trust with m > 1: a nonempty high camp (> high) and a nonempty low
//    camp (<= low; additionally < anti_low for AntiLinear) covering everyone,
//    with m * |c_i - c_j| >= 1 for every cross-camp pair, so no low agent can
//    ever move a high agent or vice versa;
//  - non-linear trust kinds never freeze exactly, so the caller passes
//    stagnant_window = true once credences have stopped moving for a long
//    stretch, and a split population is then declared polarized.
// m <= 1 linear populations cannot satisfy the pair condition and are never
// polarized.
Outcome classify(const PopulationState& state, const TrialConfig& cfg,
                 bool stagnant_window = false);

double false_fraction(const std::vector<Credence>& credences);

// Runs rounds until classify() fires or max_rounds is reached. The observer,
// when given, sees every executed round in order; final credences are in the
// result. For non-linear trust kinds, stagnation is tracked as 1000
// consecutive rounds in which no credence moved by 1e-9 or more.
TrialResult run_trial(const TrialConfig& cfg, const RoundObserver* observer = nullptr);

}  // namespace polarsim
