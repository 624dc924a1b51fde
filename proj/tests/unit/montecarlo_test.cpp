#include <jcs/errors.hpp>
#include <jcs/montecarlo.hpp>
#include <jcs/parallel.hpp>
#include <jcs/scenario.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>

using namespace jcs;

namespace {

struct Fixture {
    Scenario sc = paper_defaults();
    LinkVariances v = derive_variances(sc.params, sc.geometry);
};

}  // namespace

TEST(MonteCarlo, BitIdenticalAcrossChunksAndWorkers) {
    const Fixture f;
    const SystemParams p = with_snr(f.sc.params, 25.0);
    McConfig base;
    base.trials = 50000;
    base.seed = 77;
    base.workers = 1;
    base.chunk = 1 << 20;
    const McEstimate ref = estimate_outage(Device::Near, p, f.v, base);
    const McEstimate ref_rate = estimate_ergodic_rate(Device::Far, p, f.v, base);
    for (unsigned w : {1u, 2u, 4u})
        for (std::uint64_t chunk : {1ull, 1000ull, 4096ull, 33333ull}) {
            McConfig mc = base;
            mc.workers = w;
            mc.chunk = chunk;
            const McEstimate e = estimate_outage(Device::Near, p, f.v, mc);
            EXPECT_EQ(e.mean, ref.mean);
            EXPECT_EQ(e.std_error, ref.std_error);
            EXPECT_EQ(e.trials, ref.trials);
            const McEstimate r = estimate_ergodic_rate(Device::Far, p, f.v, mc);
            EXPECT_EQ(r.mean, ref_rate.mean);
            EXPECT_EQ(r.std_error, ref_rate.std_error);
        }
}

TEST(MonteCarlo, SeedChangesTheStream) {
    const Fixture f;
    const SystemParams p = with_snr(f.sc.params, 25.0);
    McConfig a, b;
    a.trials = b.trials = 20000;
    b.seed = a.seed + 1;
    EXPECT_NE(estimate_ergodic_rate(Device::Near, p, f.v, a).mean,
              estimate_ergodic_rate(Device::Near, p, f.v, b).mean);
}

TEST(MonteCarlo, PrefixOfLongerRunSharesBlocks) {
    // A run that is a whole number of blocks reproduces the first blocks of
    // a longer run; the estimates differ only through the added blocks.
    const Fixture f;
    const SystemParams p = with_snr(f.sc.params, 30.0);
    McConfig small, big;
    small.trials = kMcBlock * 4;
    big.trials = kMcBlock * 8;
    const McEstimate s = estimate_ergodic_rate(Device::Far, p, f.v, small);
    McConfig again = small;
    again.workers = 3;
    EXPECT_EQ(s.mean, estimate_ergodic_rate(Device::Far, p, f.v, again).mean);
    EXPECT_EQ(estimate_ergodic_rate(Device::Far, p, f.v, big).trials, kMcBlock * 8);
}

TEST(MonteCarlo, ProbabilityErrorStaysPositiveAtTheEdges) {
    const Fixture f;
    McConfig mc;
    mc.trials = 5000;
    const McEstimate e = estimate_outage(Device::Far, with_snr(f.sc.params, 0.0), f.v, mc);
    EXPECT_EQ(e.mean, 1.0);
    EXPECT_GT(e.std_error, 0.0);
    EXPECT_LT(e.std_error, 1.0 / mc.trials);
    const McEstimate mid = estimate_outage(Device::Far, with_snr(f.sc.params, 20.0), f.v, mc);
    EXPECT_NEAR(mid.std_error, std::sqrt(mid.mean * (1 - mid.mean) / mc.trials), 1e-5);
}

TEST(MonteCarlo, OutageEventLogic) {
    SystemParams p;
    SinrSet s;
    s.sdf_xf = 2.0;  // direct success
    EXPECT_FALSE(outage_event(Device::Far, p, s));
    s.sdf_xf = 0.5;
    s.sr_xf = 2.0;
    s.rdf_xf = 2.0;
    EXPECT_FALSE(outage_event(Device::Far, p, s));
    EXPECT_TRUE(outage_event(Device::Far, with_mode(p, DuplexMode::NonCooperative), s));
    s.sr_xf = 0.5;  // relay failed to decode: silent
    EXPECT_TRUE(outage_event(Device::Far, p, s));

    SinrSet n;
    n.sdn_xf = 2.0, n.sdn_xn = 3.0;
    EXPECT_FALSE(outage_event(Device::Near, p, n));
    n.sdn_xn = 1.0;  // SIC ok, own symbol fails
    EXPECT_TRUE(outage_event(Device::Near, p, n));
    n.sr_xf = 2.0, n.sr_xn = 3.0, n.rdn_xf = 2.0, n.rdn_xn = 3.0;
    EXPECT_FALSE(outage_event(Device::Near, p, n));
}

TEST(MonteCarlo, ConfigValidation) {
    McConfig mc;
    mc.trials = 0;
    EXPECT_THROW(mc.validate(), ConfigError);
    mc.trials = 10;
    mc.chunk = 0;
    EXPECT_THROW(mc.validate(), ConfigError);
}

TEST(Parallel, ForCoversEveryIndexOnce) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    EXPECT_EQ(std::accumulate(hits.begin(), hits.end(), 0), 1000);
    EXPECT_EQ(*std::min_element(hits.begin(), hits.end()), 1);
}

TEST(Parallel, ExceptionsPropagate) {
    EXPECT_THROW(parallel_for(100, 3,
                              [](std::size_t i) {
                                  if (i == 57) throw DomainError("boom");
                              }),
                 DomainError);
}

TEST(Parallel, PairwiseSum) {
    std::vector<double> xs(1 << 20, 0.1);
    EXPECT_NEAR(pairwise_sum(xs), 0.1 * xs.size(), 1e-9);
    EXPECT_EQ(pairwise_sum({}), 0.0);
}

TEST(Parallel, WorkerResolution) {
    EXPECT_EQ(resolve_workers(3), 3u);
    EXPECT_GE(resolve_workers(0), 1u);
    setenv("JCS_WORKERS", "5", 1);
    EXPECT_EQ(default_workers(), 5u);
    unsetenv("JCS_WORKERS");
}
