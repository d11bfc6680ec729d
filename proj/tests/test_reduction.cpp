#include <vector>

#include "doctest.h"
#include "polarsim/engine.hpp"
#include "bayes_ref.hpp"

using namespace polarsim;

// With no mistrust in play, the full Jeffrey pipeline must collapse to plain
// Bayes exactly: same trajectories, same outcomes, same round counts, bit for
// bit against the reference implementation above.
TEST_CASE("none-policy trials are bit-identical to the strict-Bayes reference") {
    const int k = 6;
    const double p_b = 0.55;
    const int n = 10;

    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        TrialConfig cfg;
        cfg.bandit = BanditConfig::make(p_b, n, k);
        cfg.policy = TrustPolicy{TrustKind::None, 0.0};
        cfg.seed = seed;
        cfg.max_rounds = 200000;

        std::vector<std::vector<Credence>> trajectory;
        const RoundObserver obs = [&](const RoundRecord& rec) {
            trajectory.push_back(rec.credences_before);
        };
        const TrialResult got = run_trial(cfg, &obs);

        const bayes_ref::RefResult want =
            bayes_ref::run(k, p_b, n, seed, cfg.max_rounds);

        REQUIRE(got.rounds == want.rounds);
        CHECK((got.outcome == Outcome::TrueConsensus) ==
              (want.decided && want.truth_won));
        CHECK((got.outcome == Outcome::FalseConsensus) ==
              (want.decided && !want.truth_won));

        REQUIRE(trajectory.size() == want.trajectory.size());
        for (std::size_t r = 0; r < trajectory.size(); ++r) {
            for (std::size_t i = 0; i < trajectory[r].size(); ++i) {
                REQUIRE(trajectory[r][i] == want.trajectory[r][i]);
            }
        }
        REQUIRE(got.final_credences.size() == want.final_credences.size());
        for (std::size_t i = 0; i < got.final_credences.size(); ++i) {
            REQUIRE(got.final_credences[i] == want.final_credences[i]);
        }
    }
}
