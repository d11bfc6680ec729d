// Reference implementation of the plain strict-Bayes bandit community (no
// mistrust), written directly from the documented behavioral contracts:
//   - credences drawn uniform on (0,1), agent order, from the trial seed;
//   - credence < 0.5 plays A (no information), otherwise B;
//   - one uniform per B-player, agent order, inverted through the binomial
//     CDF with pmf(0) = (1-p)^n and
//     pmf(k+1) = pmf(k) * ((n-k)/(k+1)) * (p/(1-p)), left to right;
//   - every agent folds all informative reports through Bayes in ratio form,
//     own report first, the rest by source index;
//   - all > 0.99 is a true consensus, all < 0.5 a false one.
// Shares only the raw generator type with the production code, so agreement
// is evidence about the update/evidence pipeline, not a tautology.
#pragma once

#include <cstdint>
#include <vector>

#include "polarsim/rng.hpp"

namespace bayes_ref {

struct RefResult {
    bool decided = false;
    bool truth_won = false;
    std::uint64_t rounds = 0;
    std::vector<double> final_credences;
    std::vector<std::vector<double>> trajectory;  // start-of-round credences
};

inline int invert_binomial(double u, int n, double p) {
    double pmf = 1.0;
    for (int i = 0; i < n; ++i) pmf *= (1.0 - p);
    double cdf = pmf;
    int k = 0;
    const double odds = p / (1.0 - p);
    while (cdf <= u && k < n) {
        pmf = pmf * (static_cast<double>(n - k) / static_cast<double>(k + 1)) * odds;
        cdf += pmf;
        ++k;
    }
    return k;
}

inline double bayes_ratio(double c, int successes, int n, double eps) {
    if (c <= 0.0) return 0.0;
    if (c >= 1.0) return 1.0;
    const double good = 0.5 + eps;
    const double bad = 0.5 - eps;
    double r = 1.0;
    for (int i = 0; i < successes; ++i) r *= bad / good;
    for (int i = 0; i < n - successes; ++i) r *= good / bad;
    return c / (c + (1.0 - c) * r);
}

inline RefResult run(int k_agents, double p_b, int n, std::uint64_t seed,
                     std::uint64_t max_rounds, double high = 0.99, double low = 0.5) {
    polarsim::Xoshiro256StarStar gen(seed);
    const double eps = p_b - 0.5;

    std::vector<double> cred(static_cast<std::size_t>(k_agents));
    for (auto& c : cred) c = gen.uniform_open01();

    RefResult out;
    for (std::uint64_t round = 0; round < max_rounds; ++round) {
        out.trajectory.push_back(cred);

        std::vector<int> successes(cred.size(), -1);  // -1: played A
        for (std::size_t i = 0; i < cred.size(); ++i) {
            if (cred[i] >= 0.5) {
                successes[i] = invert_binomial(gen.uniform01(), n, 0.5 + eps);
            }
        }

        std::vector<double> next(cred.size());
        for (std::size_t i = 0; i < cred.size(); ++i) {
            double c = cred[i];
            if (successes[i] >= 0) c = bayes_ratio(c, successes[i], n, eps);
            for (std::size_t j = 0; j < cred.size(); ++j) {
                if (j == i || successes[j] < 0) continue;
                c = bayes_ratio(c, successes[j], n, eps);
            }
            next[i] = c;
        }
        cred = next;

        bool all_high = true, all_low = true;
        for (double c : cred) {
            all_high = all_high && c > high;
            all_low = all_low && c < low;
        }
        if (all_high || all_low) {
            out.decided = true;
            out.truth_won = all_high;
            out.rounds = round + 1;
            out.final_credences = cred;
            return out;
        }
    }
    out.rounds = max_rounds;
    out.final_credences = cred;
    return out;
}

}  // namespace bayes_ref
