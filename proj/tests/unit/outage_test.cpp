#include <jcs/errors.hpp>
#include <jcs/montecarlo.hpp>
#include <jcs/outage.hpp>
#include <jcs/scenario.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace jcs;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Fixture {
    Scenario sc = paper_defaults();
    LinkVariances v = derive_variances(sc.params, sc.geometry);
    SystemParams at(double snr_db) const { return with_snr(sc.params, snr_db); }
};

}  // namespace

TEST(Thresholds, DefaultValues) {
    const OutageThresholds t = thresholds(with_snr(SystemParams{}, 20.0));
    ASSERT_TRUE(t.valid);
    EXPECT_DOUBLE_EQ(t.theta1_star, 1.0 / 0.4);
    EXPECT_DOUBLE_EQ(t.theta2_star, 2.0 / 0.3);
    EXPECT_DOUBLE_EQ(t.theta_star, 2.0 / 0.3);
    EXPECT_DOUBLE_EQ(t.theta1, 0.025);
    EXPECT_DOUBLE_EQ(t.phi, t.theta_star / 100.0);
}

TEST(Thresholds, InvalidWhenSplitCannotServeFar) {
    SystemParams p;
    p.gamma_th_f = 3.0;  // 0.7 - 0.3 * 3 < 0
    EXPECT_FALSE(thresholds(p).valid);
    const Fixture f;
    EXPECT_EQ(outage_far(p, f.v), 1.0);
    EXPECT_EQ(outage_near(p, f.v), 1.0);
}

// Reference: 30-digit mpmath with the echo expectation done by direct
// quadrature over sqrt(rho_RR) ~ Exp(beta_RT).
TEST(RelaySuccess, MatchesIndependentExpectation) {
    const Fixture f;
    EXPECT_LT(rel(relay_success(f.sc.params, f.v, 100.0, 0.05), 0.26759254711390731), 1e-12);
    EXPECT_LT(rel(relay_success(f.sc.params, f.v, 1000.0, 0.5), 5.713293373398203e-7), 1e-11);
}

TEST(RelaySuccess, MatchesSampling) {
    const Fixture f;
    McConfig mc;
    mc.trials = 400000;
    mc.seed = 11;
    for (double snr : {20.0, 30.0}) {
        const SystemParams p = f.at(snr);
        const double theta = thresholds(p).theta;
        const McEstimate e = estimate_relay_success(p, f.v, theta, mc);
        EXPECT_LE(std::abs(e.mean - relay_success(p, f.v, p.gamma_r(), theta)), 4.0 * e.std_error) << snr;
    }
}

TEST(RelaySuccess, ReducesToExponentialWithoutInterference) {
    const Fixture f;
    SystemParams p = with_mode(f.sc.params, DuplexMode::HD);
    p.delta = 0.0;
    EXPECT_LT(rel(relay_success(p, f.v, 100.0, 0.3), std::exp(-0.3 / f.v.beta_sr)), 1e-14);
}

TEST(Outage, MatchesIndependentReference) {
    const Fixture f;
    struct Ref {
        double snr, far, near;
    };
    for (const Ref r : {Ref{20, 0.8898297816698118, 0.98648891187808231},
                        Ref{30, 0.091974615481648346, 0.23516136915553423},
                        Ref{60, 4.8809486277886335e-5, 0.00017881771455531803}}) {
        EXPECT_LT(rel(outage_far(f.at(r.snr), f.v), r.far), 1e-12) << r.snr;
        EXPECT_LT(rel(outage_near(f.at(r.snr), f.v), r.near), 1e-12) << r.snr;
    }
    EXPECT_NEAR(outage_far(f.at(10), f.v), 0.99999999998825548, 1e-15);
}

TEST(Outage, MatchesMonteCarlo) {
    const Fixture f;
    McConfig mc;
    mc.trials = 300000;
    mc.seed = 3;
    for (double snr : {20.0, 30.0}) {
        const SystemParams p = f.at(snr);
        const McEstimate ef = estimate_outage(Device::Far, p, f.v, mc);
        const McEstimate en = estimate_outage(Device::Near, p, f.v, mc);
        EXPECT_LE(std::abs(ef.mean - outage_far(p, f.v)), 4.0 * ef.std_error) << snr;
        EXPECT_LE(std::abs(en.mean - outage_near(p, f.v)), 4.0 * en.std_error) << snr;
    }
}

TEST(Outage, DiversityOrderOne) {
    const Fixture f;
    EXPECT_NEAR(diversity_order(outage_far, f.sc.params, f.v, 50.0, 60.0), 1.0, 0.1);
    EXPECT_NEAR(diversity_order(outage_near, f.sc.params, f.v, 50.0, 60.0), 1.0, 0.1);
    EXPECT_THROW(diversity_order(outage_far, f.sc.params, f.v, 60.0, 50.0), DomainError);
    EXPECT_THROW(diversity_order(outage_far, f.sc.params, f.v, 140.0, 150.0), RangeError);
}

TEST(Outage, AsymptoteConverges) {
    const Fixture f;
    for (double snr : {60.0, 70.0}) {
        const SystemParams p = f.at(snr);
        EXPECT_NEAR(outage_far_asymptotic(p, f.v) / outage_far(p, f.v), 1.0, 0.05) << snr;
        EXPECT_NEAR(outage_near_asymptotic(p, f.v) / outage_near(p, f.v), 1.0, 0.05) << snr;
    }
    // gap shrinks with SNR
    const double g50 = std::abs(outage_far_asymptotic(f.at(50), f.v) / outage_far(f.at(50), f.v) - 1.0);
    const double g70 = std::abs(outage_far_asymptotic(f.at(70), f.v) / outage_far(f.at(70), f.v) - 1.0);
    EXPECT_LT(g70, g50);
}

TEST(Outage, NonCooperativeIsDirectOnly) {
    const Fixture f;
    const SystemParams p = with_mode(f.at(30.0), DuplexMode::NonCooperative);
    const OutageThresholds t = thresholds(p);
    EXPECT_LT(rel(outage_far(p, f.v), -std::expm1(-t.theta1 / f.v.beta_sdf)), 1e-15);
    EXPECT_LT(rel(outage_near(p, f.v), -std::expm1(-t.theta / f.v.beta_sdn)), 1e-15);
}

TEST(OutageProperty, BoundedMonotoneAndOrdered) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        Scenario sc = paper_defaults();
        sc.params.a_n = 0.05 + 0.4 * u(rng);
        sc.params.a_f = 1.0 - sc.params.a_n;
        sc.params.gamma_th_f = 0.1 + 2.0 * u(rng);
        sc.params.gamma_th_n = 0.1 + 4.0 * u(rng);
        sc.params.delta = u(rng);
        sc.geometry.d_sr = 2.0 + 20.0 * u(rng);
        sc.geometry.d_rdn = 2.0 + 20.0 * u(rng);
        const LinkVariances v = derive_variances(sc.params, sc.geometry);
        const double snr = 60.0 * u(rng);
        const SystemParams lo = with_snr(sc.params, snr);
        const SystemParams hi = with_snr(sc.params, snr + 5.0);
        for (auto fn : {outage_far, outage_near}) {
            const double a = fn(lo, v), b = fn(hi, v);
            ASSERT_GE(a, 0.0);
            ASSERT_LE(a, 1.0);
            ASSERT_LE(b, a + 1e-15);
            // removing loop interference never hurts
            ASSERT_LE(fn(with_mode(lo, DuplexMode::HD), v), a + 1e-15);
            // the relay branch only adds a second chance
            ASSERT_LE(a, fn(with_mode(lo, DuplexMode::NonCooperative), v) + 1e-15);
        }
    }
}
