#include "polarsim/credal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polarsim {

BanditConfig BanditConfig::make(double p_b, int n_pulls, int k_agents) {
    if (!(p_b > 0.5) || !(p_b < 1.0)) {
        throw ConfigError("p_b must be in (0.5, 1.0), got " + std::to_string(p_b));
    }
    if (n_pulls < 1) {
        throw ConfigError("n must be an integer >= 1, got " + std::to_string(n_pulls));
    }
    if (k_agents < 2) {
        throw ConfigError("k must be an integer >= 2, got " + std::to_string(k_agents));
    }
    BanditConfig cfg;
    cfg.p_b = p_b;
    cfg.epsilon = p_b - 0.5;
    cfg.n_pulls = n_pulls;
    cfg.k_agents = k_agents;
    return cfg;
}

double binomial_pmf(int k, int n, double p) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("binomial_pmf: need 0 <= k <= n");
    }
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::domain_error("binomial_pmf: need 0 < p < 1");
    }
    // C(n,k) = prod_{i=1..j} (n-j+i)/i with j = min(k, n-k). Exact up to a few
    // ulp for n <= a few hundred; C(100,50) ~ 1e29 is nowhere near overflow.
    const int j = std::min(k, n - k);
    double coeff = 1.0;
    for (int i = 1; i <= j; ++i) {
        coeff = coeff * static_cast<double>(n - j + i) / static_cast<double>(i);
    }
    double pk = 1.0;
    for (int i = 0; i < k; ++i) {
        pk *= p;
    }
    double qk = 1.0;
    for (int i = 0; i < n - k; ++i) {
        qk *= (1.0 - p);
    }
    return coeff * pk * qk;
}

Credence strict_bayes_update(Credence prior, const EvidenceReport& report,
                             const BanditConfig& bandit) {
    if (!report.informative()) {
        throw std::domain_error("strict_bayes_update: report carries no pulls");
    }
    if (prior <= 0.0) return 0.0;
    if (prior >= 1.0) return 1.0;
    const double p_good = bandit.p_good();
    const double p_bad = bandit.p_bad();
    const double t_succ = p_bad / p_good;  // < 1, shrinks r per success
    const double t_fail = p_good / p_bad;  // > 1, grows r per failure
    double r = 1.0;
    for (int i = 0; i < report.successes; ++i) {
        r *= t_succ;
    }
    for (int i = 0; i < report.pulls - report.successes; ++i) {
        r *= t_fail;
    }
    // r may hit 0 or inf for extreme epsilon; the quotient below then lands on
    // the correct limit (1 or 0) without NaN because prior is strictly inside
    // (0,1) here.
    return prior / (prior + (1.0 - prior) * r);
}

double evidence_prior(Credence prior, const EvidenceReport& report,
                      const BanditConfig& bandit) {
    if (!report.informative()) {
        throw std::domain_error("evidence_prior: report carries no pulls");
    }
    const double like_good = binomial_pmf(report.successes, report.pulls, bandit.p_good());
    const double like_bad = binomial_pmf(report.successes, report.pulls, bandit.p_bad());
    return prior * like_good + (1.0 - prior) * like_bad;
}

double trust_weight(const TrustPolicy& policy, double d, double p_i_e) {
    if (!(policy.m >= 0.0)) {
        throw std::domain_error("trust_weight: m must be >= 0");
    }
    if (!(d >= 0.0) || !(d <= 1.0)) {
        throw std::domain_error("trust_weight: d must be in [0,1]");
    }
    double w = 1.0;
    const double dm = d * policy.m;
    switch (policy.kind) {
        case TrustKind::None:
            w = 1.0;
            break;
        case TrustKind::IgnoreLinear:
            // At and past dm = 1 the source is ignored outright; return p_i_e
            // itself so the caller's update is a bit-exact no-op.
            w = (dm >= 1.0) ? p_i_e : 1.0 - dm * (1.0 - p_i_e);
            break;
        case TrustKind::AntiLinear:
            w = (dm == 1.0) ? p_i_e : std::max(1.0 - dm * (1.0 - p_i_e), 0.0);
            break;
        case TrustKind::Logistic:
            w = 1.0 / (1.0 + std::exp(policy.m * (d - 0.5)));
            break;
        case TrustKind::Exponential:
            w = std::exp(-policy.m * d);
            break;
        case TrustKind::BoundedLogistic:
            w = (1.0 - p_i_e) / (1.0 + std::exp(policy.m * (d - 0.5))) + p_i_e;
            break;
    }
    return std::clamp(w, 0.0, 1.0);
}

Credence jeffrey_update(Credence prior, const EvidenceReport& report,
                        const BanditConfig& bandit, double p_f_e) {
    if (!(p_f_e >= 0.0) || !(p_f_e <= 1.0)) {
        throw std::domain_error("jeffrey_update: p_f_e must be in [0,1]");
    }
    const double post_e = strict_bayes_update(prior, report, bandit);
    const double prior_e = evidence_prior(prior, report, bandit);
    if (prior_e >= 1.0 - 1e-12) {
        return post_e;
    }
    if (p_f_e == prior_e) {
        // Total probability: weighting by the prior expectation changes
        // nothing. Returning the prior directly keeps the identity exact,
        // which freezes populations whose members fully ignore each other.
        return prior;
    }
    const double like_good = binomial_pmf(report.successes, report.pulls, bandit.p_good());
    const double post_not_e = (prior - prior * like_good) / (1.0 - prior_e);
    const double out = post_e * p_f_e + post_not_e * (1.0 - p_f_e);
    return std::clamp(out, 0.0, 1.0);
}

}  // namespace polarsim
