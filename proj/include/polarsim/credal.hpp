#pragma once

#include <stdexcept>

namespace polarsim {

// Probability an agent assigns to "arm B is the better arm". Always in [0,1].
using Credence = double;

// Two-armed bandit setup. Arm A pays off at a known rate of 0.5 and carries
// no information; arm B pays off at 0.5 + epsilon (the true state) or
// 0.5 - epsilon (the rival hypothesis).
struct BanditConfig {
    double p_b = 0.7;    // true success rate of arm B, in (0.5, 1.0)
    double epsilon = 0.2;  // p_b - 0.5; the two hypotheses sit at 0.5 +/- epsilon
    int n_pulls = 20;    // pulls per agent per round, >= 1
    int k_agents = 10;   // population size, >= 2

    // Validates and derives epsilon as p_b - 0.5. The subtraction is exact for
    // p_b in (0.5, 1), so 0.5 + epsilon reproduces p_b bit for bit.
    static BanditConfig make(double p_b, int n_pulls, int k_agents);

    double p_good() const noexcept { return 0.5 + epsilon; }
    double p_bad() const noexcept { return 0.5 - epsilon; }
};

// How an agent discounts evidence from a source whose beliefs sit at distance
// d from its own. m scales the discount; m = 0 or kind None means full trust.
enum class TrustKind {
    None,             // w = 1 always; plain Bayesian updating
    IgnoreLinear,     // w = 1 - min(1, d*m) * (1 - p_i_e); bottoms out at ignoring
    AntiLinear,       // w = max(1 - d*m*(1 - p_i_e), 0); crosses into anti-updating
    Logistic,         // w = 1 / (1 + exp(m*(d - 1/2)))
    Exponential,      // w = exp(-m*d)
    BoundedLogistic,  // logistic, rescaled to approach p_i_e instead of 0
};

struct TrustPolicy {
    TrustKind kind = TrustKind::None;
    double m = 0.0;  // mistrust multiplier, >= 0

    bool is_linear() const noexcept {
        return kind == TrustKind::IgnoreLinear || kind == TrustKind::AntiLinear;
    }
};

// One agent's reported experiment for a round. Agents that pulled arm A
// report pulls = 0 (arm A is uninformative about B); arm-B players report
// pulls = n_pulls and the number of successes observed.
struct EvidenceReport {
    int source = 0;     // index of the reporting agent
    int pulls = 0;      // 0 or n_pulls
    int successes = 0;  // in [0, pulls]

    bool informative() const noexcept { return pulls > 0; }
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// C(n,k) p^k (1-p)^(n-k), computed with plain multiplication only (coefficient
// by the multiplicative recurrence, powers by repeated products). No libm, so
// results are bit-stable across platforms. Throws std::domain_error unless
// 0 <= k <= n and 0 < p < 1.
double binomial_pmf(int k, int n, double p);

// Posterior credence after conditioning fully on the report, in likelihood-
// ratio form: the binomial coefficients cancel, leaving
//   r  = ((0.5-e)/(0.5+e))^k * ((0.5+e)/(0.5-e))^(n-k)
//   c' = c / (c + (1-c) r)
// Degenerate priors 0 and 1 are returned unchanged. Requires an informative
// report.
Credence strict_bayes_update(Credence prior, const EvidenceReport& report,
                             const BanditConfig& bandit);

// P_i(E): the probability the agent assigns to seeing exactly this report,
// mixing the two hypotheses by its current credence.
double evidence_prior(Credence prior, const EvidenceReport& report,
                      const BanditConfig& bandit);

// Final credence in the evidence, P_f(E), as a function of belief distance d
// and the prior expectation p_i_e = P_i(E). Clamped to [0,1].
//
// Exactness constraints, relied on by the update step:
//  - both linear kinds return 1.0 exactly at d = 0;
//  - IgnoreLinear returns p_i_e itself (no arithmetic) once d*m >= 1, and
//    AntiLinear does the same at d*m == 1; feeding p_i_e back into
//    jeffrey_update makes the update a bit-exact no-op, which is what lets a
//    polarized population sit still forever.
double trust_weight(const TrustPolicy& policy, double d, double p_i_e);

// Jeffrey conditionalization:
//   P_f(H) = P(H|E) p_f_e + P(H|~E) (1 - p_f_e)
// with P(H|E) from strict_bayes_update and
//   P(H|~E) = (P_i(H) - P_i(H) P(E|H)) / (1 - P_i(E)).
// p_f_e = 1 recovers strict conditioning bit for bit; p_f_e equal to the
// evidence prior returns the prior unchanged (total probability). When
// P_i(E) >= 1 - 1e-12 the ~E branch is numerically meaningless and the strict
// posterior is returned.
Credence jeffrey_update(Credence prior, const EvidenceReport& report,
                        const BanditConfig& bandit, double p_f_e);

}  // namespace polarsim
