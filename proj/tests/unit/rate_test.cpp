#include <jcs/channel.hpp>
#include <jcs/montecarlo.hpp>
#include <jcs/rate.hpp>
#include <jcs/scenario.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace jcs;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Fixture {
    Scenario sc = paper_defaults();
    LinkVariances v = derive_variances(sc.params, sc.geometry);
    SystemParams at(double snr_db) const { return with_snr(sc.params, snr_db); }
};

}  // namespace

TEST(InstantRates, ModeScaling) {
    const Fixture f;
    const ChannelRealization g = mean_surrogate(f.v);
    const SystemParams fd = f.at(30.0);
    const AchievableRates a = achievable_rates(fd, g);
    const AchievableRates h = achievable_rates(with_mode(fd, DuplexMode::HD), g);
    const AchievableRates n = achievable_rates(with_mode(fd, DuplexMode::NonCooperative), g);
    EXPECT_GT(h.far.relay, 0.5 * a.far.relay);  // no LSI in HD, half the time
    EXPECT_EQ(n.far.relay, 0.0);
    EXPECT_EQ(n.near.relay, 0.0);
    EXPECT_EQ(n.far.direct, a.far.direct);
    EXPECT_DOUBLE_EQ(a.sum(), a.r_f() + a.r_n());
    EXPECT_DOUBLE_EQ(a.r_f(), a.far.total());
}

// Reference: an independent scipy implementation of the same integrals
// (adaptive QUADPACK, absolute tolerance 1e-12).
TEST(ErgodicRate, MatchesIndependentQuadrature) {
    const Fixture f;
    struct Ref {
        double snr, far, near;
    };
    for (const Ref r : {Ref{10, 0.11029753441646753, 0.11529837894339079},
                        Ref{20, 0.7220273522120624, 0.8689731385061402},
                        Ref{30, 2.0454702819563604, 3.36995155023215},
                        Ref{60, 3.1008849168439268, 13.57082717354549}}) {
        EXPECT_LT(rel(ergodic_rate_far(f.at(r.snr), f.v), r.far), 1e-7) << r.snr;
        EXPECT_LT(rel(ergodic_rate_near(f.at(r.snr), f.v), r.near), 1e-7) << r.snr;
    }
    const RateTerms t = ergodic_rate_far_terms(f.at(60), f.v);
    EXPECT_LT(rel(t.relay, 1.3688872269600945), 1e-7);
    EXPECT_LT(rel(t.direct, 1.7319976898838323), 1e-7);
}

TEST(ErgodicRate, MatchesMonteCarlo) {
    const Fixture f;
    McConfig mc;
    mc.trials = 200000;
    mc.seed = 17;
    for (double snr : {10.0, 30.0}) {
        const SystemParams p = f.at(snr);
        const McEstimate ef = estimate_ergodic_rate(Device::Far, p, f.v, mc);
        const McEstimate en = estimate_ergodic_rate(Device::Near, p, f.v, mc);
        EXPECT_LE(std::abs(ef.mean - ergodic_rate_far(p, f.v)), 4.0 * ef.std_error) << snr;
        EXPECT_LE(std::abs(en.mean - ergodic_rate_near(p, f.v)), 4.0 * en.std_error) << snr;
    }
}

TEST(ErgodicRate, HalfDuplexAndNonCooperative) {
    const Fixture f;
    McConfig mc;
    mc.trials = 100000;
    for (auto mode : {DuplexMode::HD, DuplexMode::NonCooperative}) {
        const SystemParams p = with_mode(f.at(25.0), mode);
        const McEstimate ef = estimate_ergodic_rate(Device::Far, p, f.v, mc);
        const McEstimate en = estimate_ergodic_rate(Device::Near, p, f.v, mc);
        EXPECT_LE(std::abs(ef.mean - ergodic_rate_far(p, f.v)), 4.0 * ef.std_error);
        EXPECT_LE(std::abs(en.mean - ergodic_rate_near(p, f.v)), 4.0 * en.std_error);
    }
}

TEST(ErgodicRate, HighSnrLimits) {
    const Fixture f;
    const SystemParams nc = with_mode(f.at(60.0), DuplexMode::NonCooperative);
    EXPECT_LT(rel(ergodic_rate_far(nc, f.v), std::log2(10.0 / 3.0)), 0.01);
    // far saturates, near keeps climbing about log2(10) per decade
    const double df = ergodic_rate_far(f.at(60), f.v) - ergodic_rate_far(f.at(50), f.v);
    const double dn = ergodic_rate_near(f.at(60), f.v) - ergodic_rate_near(f.at(50), f.v);
    EXPECT_LT(df, 0.05);
    EXPECT_NEAR(dn / std::log2(10.0), 1.0, 0.2);
}

TEST(ErgodicRate, TruncationConvergesToFullIntegral) {
    const Fixture f;
    const SystemParams p = f.at(30.0);
    const double full = ergodic_rate_near_terms(p, f.v).relay;
    double last_gap = INFINITY;
    for (double w : {10.0, 100.0, 1e4, 1e6}) {
        const double gap = full - ergodic_rate_near_relay_truncated(p, f.v, w);
        EXPECT_GE(gap, -1e-9);
        EXPECT_LE(gap, last_gap + 1e-12);
        last_gap = gap;
    }
    EXPECT_LT(last_gap, 1e-4);
}

TEST(ErgodicRate, MeanGainApproximation) {
    const Fixture f;
    // Jensen-type surrogate sits above the exact value in this regime
    for (double snr : {20.0, 30.0, 60.0}) {
        const SystemParams p = f.at(snr);
        EXPECT_GT(ergodic_rate_far_approx(p, f.v), ergodic_rate_far(p, f.v)) << snr;
        EXPECT_GT(ergodic_rate_near_approx(p, f.v), ergodic_rate_near(p, f.v)) << snr;
        EXPECT_DOUBLE_EQ(ergodic_sum_approx(p, f.v),
                         ergodic_rate_far_approx(p, f.v) + ergodic_rate_near_approx(p, f.v));
    }
    EXPECT_LT(rel(ergodic_rate_far_approx(f.at(60), f.v), 3.261165013932972), 1e-12);
    EXPECT_LT(rel(ergodic_rate_near_approx(f.at(60), f.v), 14.227633506013516), 1e-12);
}
