#include <cmath>

#include "doctest.h"
#include "oracle_ref.hpp"
#include "polarsim/credal.hpp"
#include "polarsim/rng.hpp"

using namespace polarsim;

namespace {

EvidenceReport rep(int successes, int pulls, int source = 0) {
    return EvidenceReport{source, pulls, successes};
}

const BanditConfig kEps01 = BanditConfig::make(0.6, 10, 2);

}  // namespace

TEST_CASE("binomial_pmf matches frozen exact values") {
    // Exact decimals: 120 * .6^7 * .4^3 and 120 * .4^7 * .6^3 terminate.
    CHECK(binomial_pmf(7, 10, 0.6) == doctest::Approx(0.214990848).epsilon(1e-12));
    CHECK(binomial_pmf(7, 10, 0.4) == doctest::Approx(0.042467328).epsilon(1e-12));
    CHECK(binomial_pmf(0, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(binomial_pmf(50, 100, 0.5) == doctest::Approx(0.07958923738717877).epsilon(1e-12));
}

TEST_CASE("binomial_pmf rejects bad domains") {
    CHECK_THROWS_AS(binomial_pmf(11, 10, 0.5), std::domain_error);
    CHECK_THROWS_AS(binomial_pmf(-1, 10, 0.5), std::domain_error);
    CHECK_THROWS_AS(binomial_pmf(3, 10, 0.0), std::domain_error);
    CHECK_THROWS_AS(binomial_pmf(3, 10, 1.0), std::domain_error);
}

TEST_CASE("binomial_pmf sums to one across k") {
    for (const double p : {0.2, 0.5, 0.8}) {
        for (const int n : {1, 10, 100}) {
            double sum = 0.0;
            for (int k = 0; k <= n; ++k) sum += binomial_pmf(k, n, p);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("strict_bayes_update reproduces the footnote value") {
    CHECK(strict_bayes_update(0.6, rep(7, 10), kEps01) ==
          doctest::Approx(0.8836363636363636).epsilon(1e-12));
}

TEST_CASE("strict_bayes_update direction follows the success count") {
    const BanditConfig cfg = BanditConfig::make(0.7, 10, 2);
    for (double c : {0.1, 0.5, 0.9}) {
        CHECK(strict_bayes_update(c, rep(8, 10), cfg) > c);   // k > n/2
        CHECK(strict_bayes_update(c, rep(2, 10), cfg) < c);   // k < n/2
        CHECK(strict_bayes_update(c, rep(5, 10), cfg) ==
              doctest::Approx(c).epsilon(1e-12));             // symmetric evidence
    }
}

TEST_CASE("strict_bayes_update keeps degenerate priors fixed") {
    CHECK(strict_bayes_update(0.0, rep(9, 10), kEps01) == 0.0);
    CHECK(strict_bayes_update(1.0, rep(1, 10), kEps01) == 1.0);
}

TEST_CASE("evidence_prior mixes the two likelihoods") {
    CHECK(evidence_prior(0.3, rep(7, 10), kEps01) ==
          doctest::Approx(0.094224384).epsilon(1e-12));
    // prior 1 collapses to the good-arm pmf
    CHECK(evidence_prior(1.0, rep(7, 10), kEps01) ==
          doctest::Approx(0.214990848).epsilon(1e-12));
    // prior 0.5 is the arithmetic mean
    const double mean = 0.5 * (binomial_pmf(7, 10, 0.6) + binomial_pmf(7, 10, 0.4));
    CHECK(evidence_prior(0.5, rep(7, 10), kEps01) == doctest::Approx(mean).epsilon(1e-15));
}

TEST_CASE("trust_weight reproduces the linear curves") {
    const TrustPolicy ignore{TrustKind::IgnoreLinear, 2.0};
    const TrustPolicy anti{TrustKind::AntiLinear, 2.0};
    const double p = 0.75;
    CHECK(trust_weight(ignore, 0.0, p) == 1.0);
    CHECK(trust_weight(anti, 0.0, p) == 1.0);
    CHECK(trust_weight(ignore, 0.5, p) == 0.75);
    CHECK(trust_weight(anti, 0.5, p) == 0.75);
    CHECK(trust_weight(ignore, 1.0, p) == 0.75);
    CHECK(trust_weight(anti, 1.0, p) == 0.5);
    CHECK(trust_weight(ignore, 0.3, 0.094224384) ==
          doctest::Approx(0.4565346304).epsilon(1e-12));
}

TEST_CASE("trust_weight returns p_i_e bitwise at and past the cutoff") {
    for (const double p : {0.094224384, 0.33, 0.75, 0.999}) {
        CHECK(trust_weight({TrustKind::IgnoreLinear, 2.0}, 0.5, p) == p);
        CHECK(trust_weight({TrustKind::IgnoreLinear, 2.0}, 0.8, p) == p);
        CHECK(trust_weight({TrustKind::IgnoreLinear, 4.0}, 0.25, p) == p);
        CHECK(trust_weight({TrustKind::AntiLinear, 2.0}, 0.5, p) == p);
    }
}

TEST_CASE("trust_weight is weakly decreasing in d and stays in [0,1]") {
    const TrustPolicy policies[] = {
        {TrustKind::None, 0.0},          {TrustKind::IgnoreLinear, 2.5},
        {TrustKind::AntiLinear, 3.0},    {TrustKind::Logistic, 12.0},
        {TrustKind::Exponential, 5.0},   {TrustKind::BoundedLogistic, 9.0},
    };
    for (const auto& pol : policies) {
        double prev = 2.0;
        for (int i = 0; i <= 200; ++i) {
            const double d = i / 200.0;
            const double w = trust_weight(pol, d, 0.3);
            CHECK(w >= 0.0);
            CHECK(w <= 1.0);
            CHECK(w <= prev + 1e-15);
            prev = w;
        }
    }
}

TEST_CASE("none policy and m=0 mean full trust") {
    for (const double d : {0.0, 0.3, 1.0}) {
        CHECK(trust_weight({TrustKind::None, 0.0}, d, 0.4) == 1.0);
        CHECK(trust_weight({TrustKind::IgnoreLinear, 0.0}, d, 0.4) == 1.0);
        CHECK(trust_weight({TrustKind::AntiLinear, 0.0}, d, 0.4) == 1.0);
    }
}

TEST_CASE("jeffrey_update matches the footnote chain") {
    const double w = trust_weight({TrustKind::IgnoreLinear, 2.0}, 0.3,
                                  evidence_prior(0.3, rep(7, 10), kEps01));
    CHECK(w == doctest::Approx(0.4565346304).epsilon(1e-12));
    CHECK(jeffrey_update(0.3, rep(7, 10), kEps01, w) ==
          doctest::Approx(0.4538028169014084).epsilon(1e-10));
}

TEST_CASE("jeffrey_update with full weight is strict Bayes, bitwise") {
    for (const double c : {0.01, 0.3, 0.5, 0.77, 0.99}) {
        for (int k = 0; k <= 10; ++k) {
            CHECK(jeffrey_update(c, rep(k, 10), kEps01, 1.0) ==
                  strict_bayes_update(c, rep(k, 10), kEps01));
        }
    }
}

TEST_CASE("jeffrey_update at the evidence prior is an exact no-op") {
    for (const double eps : {0.01, 0.1, 0.3}) {
        const BanditConfig cfg = BanditConfig::make(0.5 + eps, 20, 2);
        for (int i = 1; i < 40; ++i) {
            const double c = i / 40.0;
            for (int n : {1, 7, 20}) {
                for (int k = 0; k <= n; k += 3) {
                    const EvidenceReport r = rep(k, n);
                    const double pie = evidence_prior(c, r, cfg);
                    CHECK(jeffrey_update(c, r, cfg, pie) == c);
                }
            }
        }
    }
}

TEST_CASE("jeffrey_update stays inside [0,1] on random inputs") {
    Xoshiro256StarStar rng(7);
    for (int i = 0; i < 2000; ++i) {
        const int n = 1 + static_cast<int>(rng.uniform01() * 100);
        const int k = static_cast<int>(rng.uniform01() * (n + 1));
        const double eps = 0.001 + 0.299 * rng.uniform01();
        const BanditConfig cfg = BanditConfig::make(0.5 + eps, n, 2);
        const double c = rng.uniform01();
        const double pfe = rng.uniform01();
        const double out = jeffrey_update(c, rep(std::min(k, n), n), cfg, pfe);
        CHECK(out >= 0.0);
        CHECK(out <= 1.0);
    }
}

TEST_CASE("BanditConfig::make validates and derives epsilon exactly") {
    CHECK_THROWS_AS(BanditConfig::make(0.5, 10, 2), ConfigError);
    CHECK_THROWS_AS(BanditConfig::make(1.0, 10, 2), ConfigError);
    CHECK_THROWS_AS(BanditConfig::make(0.7, 0, 2), ConfigError);
    CHECK_THROWS_AS(BanditConfig::make(0.7, 10, 1), ConfigError);
    for (const double p : {0.55, 0.6, 0.7, 0.8, 0.9999}) {
        const BanditConfig cfg = BanditConfig::make(p, 10, 2);
        CHECK(cfg.p_good() == p);  // 0.5 + (p - 0.5) must round-trip bitwise
    }
}

TEST_CASE("differential oracle over randomized inputs") {
    Xoshiro256StarStar rng(20260819);
    double max_err = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const int n = 1 + static_cast<int>(rng.uniform01() * 100);
        const int k = std::min(n, static_cast<int>(rng.uniform01() * (n + 1)));
        const double eps = 1e-6 + (0.3 - 1e-6) * rng.uniform01();
        const double c = rng.uniform01();
        const double d = rng.uniform01();
        const double pfe = rng.uniform01();
        const BanditConfig cfg = BanditConfig::make(0.5 + eps, n, 2);
        const EvidenceReport r = rep(k, n);

        const oracle::Rat rc(c), rd(d), rpfe(pfe);
        const oracle::Rat reps = oracle::Rat(cfg.epsilon);

        const auto check = [&](double got, const oracle::Rat& want) {
            const double err = std::abs(got - oracle::to_double(want));
            max_err = std::max(max_err, err);
            CHECK(err <= 1e-10);
        };
        check(binomial_pmf(k, n, cfg.p_good()),
              oracle::binomial_pmf(k, n, oracle::Rat(1, 2) + reps));
        check(strict_bayes_update(c, r, cfg), oracle::strict_bayes(rc, k, n, reps));
        check(evidence_prior(c, r, cfg), oracle::evidence_prior(rc, k, n, reps));
        check(jeffrey_update(c, r, cfg, pfe), oracle::jeffrey(rc, k, n, reps, rpfe));

        const double m_lin = 3.0 * rng.uniform01();
        const double pie = evidence_prior(c, r, cfg);
        const oracle::Rat rpie(pie), rm(m_lin);
        check(trust_weight({TrustKind::IgnoreLinear, m_lin}, d, pie),
              oracle::trust_ignore_linear(rd, rm, rpie));
        check(trust_weight({TrustKind::AntiLinear, m_lin}, d, pie),
              oracle::trust_anti_linear(rd, rm, rpie));

        const double m_log = 5.0 + 15.0 * rng.uniform01();
        const double m_exp = 1.0 + 6.0 * rng.uniform01();
        const auto checkf = [&](double got, const oracle::Big& want) {
            const double err = std::abs(got - oracle::to_double(want));
            max_err = std::max(max_err, err);
            CHECK(err <= 1e-10);
        };
        checkf(trust_weight({TrustKind::Logistic, m_log}, d, pie),
               oracle::trust_logistic(oracle::Big(d), oracle::Big(m_log)));
        checkf(trust_weight({TrustKind::Exponential, m_exp}, d, pie),
               oracle::trust_exponential(oracle::Big(d), oracle::Big(m_exp)));
        checkf(trust_weight({TrustKind::BoundedLogistic, m_log}, d, pie),
               oracle::trust_bounded_logistic(oracle::Big(d), oracle::Big(m_log),
                                              oracle::Big(pie)));
    }
    MESSAGE("max |impl - oracle| = ", max_err);
}
