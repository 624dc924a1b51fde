#include "jcs/montecarlo.hpp"

#include "jcs/errors.hpp"
#include "jcs/parallel.hpp"
#include "jcs/rate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace jcs {

void McConfig::validate() const {
    if (trials < 1) throw ConfigError("McConfig: trials must be at least 1");
    if (chunk < 1) throw ConfigError("McConfig: chunk must be at least 1");
}

namespace {

// Welford moments, merged with Chan's formula.
struct Moments {
    double n = 0.0, mean = 0.0, m2 = 0.0;

    void add(double x) {
        n += 1.0;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
};

Moments merge(const Moments& a, const Moments& b) {
    if (a.n == 0.0) return b;
    if (b.n == 0.0) return a;
    Moments m;
    m.n = a.n + b.n;
    const double d = b.mean - a.mean;
    m.mean = a.mean + d * (b.n / m.n);
    m.m2 = a.m2 + b.m2 + d * d * (a.n * b.n / m.n);
    return m;
}

Moments reduce(const std::vector<Moments>& blocks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return blocks[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge(reduce(blocks, lo, mid), reduce(blocks, mid, hi));
}

// trial(stream) -> sample value, run over canonical blocks.
template <class Trial>
Moments run_blocks(const McConfig& mc, const Trial& trial) {
    mc.validate();
    const std::uint64_t n_blocks = (mc.trials + kMcBlock - 1) / kMcBlock;
    const std::uint64_t per_unit = std::max<std::uint64_t>(1, (mc.chunk + kMcBlock - 1) / kMcBlock);
    const std::uint64_t n_units = (n_blocks + per_unit - 1) / per_unit;
    std::vector<Moments> blocks(n_blocks);
    parallel_for(n_units, resolve_workers(mc.workers), [&](std::size_t unit) {
        const std::uint64_t b_end = std::min(n_blocks, (unit + 1) * per_unit);
        for (std::uint64_t b = unit * per_unit; b < b_end; ++b) {
            RandomStream stream(mc.seed, b);
            const std::uint64_t t_end = std::min(mc.trials, (b + 1) * kMcBlock);
            Moments m;
            for (std::uint64_t t = b * kMcBlock; t < t_end; ++t) m.add(trial(stream));
            blocks[b] = m;
        }
    });
    return reduce(blocks, 0, blocks.size());
}

McEstimate as_probability(const Moments& m) {
    McEstimate e;
    e.trials = static_cast<std::uint64_t>(m.n);
    e.mean = std::clamp(m.mean, 0.0, 1.0);
    const double n = m.n;
    // Half-width of the Wilson interval at one sigma; stays positive at 0 and 1.
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / n + 1.0 / (4.0 * n * n)) / (1.0 + 1.0 / n);
    return e;
}

McEstimate as_mean(const Moments& m) {
    McEstimate e;
    e.trials = static_cast<std::uint64_t>(m.n);
    e.mean = m.mean;
    e.std_error = m.n > 1.0 ? std::sqrt(m.m2 / (m.n - 1.0) / m.n) : 0.0;
    return e;
}

// Noncentral chi-square with `dof` degrees of freedom and noncentrality a^2.
double noncentral_chi2(RandomStream& s, int dof, double a) {
    const double z0 = s.normal() + a;
    double t = z0 * z0;
    for (int i = 1; i < dof; ++i) {
        const double z = s.normal();
        t += z * z;
    }
    return t;
}

}  // namespace

bool outage_event(Device device, const SystemParams& p, const SinrSet& s) {
    const bool coop = p.mode != DuplexMode::NonCooperative;
    if (device == Device::Far) {
        // Direct branch decodes x_f, or the relay decodes and forwards it.
        const bool direct_ok = s.sdf_xf >= p.gamma_th_f;
        const bool relay_ok = coop && s.sr_xf >= p.gamma_th_f && s.rdf_xf >= p.gamma_th_f;
        return !(direct_ok || relay_ok);
    }
    const bool direct_ok = s.sdn_xf >= p.gamma_th_f && s.sdn_xn >= p.gamma_th_n;
    const bool relay_ok = coop && s.sr_xf >= p.gamma_th_f && s.sr_xn >= p.gamma_th_n &&
                          s.rdn_xf >= p.gamma_th_f && s.rdn_xn >= p.gamma_th_n;
    return !(direct_ok || relay_ok);
}

McEstimate estimate_outage(Device device, const SystemParams& params, const LinkVariances& vars,
                           const McConfig& mc) {
    const Moments m = run_blocks(mc, [&](RandomStream& s) {
        const ChannelRealization g = sample(vars, s);
        return outage_event(device, params, evaluate(params, g)) ? 1.0 : 0.0;
    });
    return as_probability(m);
}

McEstimate estimate_ergodic_rate(Device device, const SystemParams& params,
                                 const LinkVariances& vars, const McConfig& mc) {
    const Moments m = run_blocks(mc, [&](RandomStream& s) {
        const AchievableRates r = achievable_rates(params, sample(vars, s));
        return device == Device::Far ? r.r_f() : r.r_n();
    });
    return as_mean(m);
}

McEstimate estimate_detection_given(const SystemParams& params, const ChannelRealization& gains,
                                    double zeta, const McConfig& mc) {
    const double a = h1_noncentrality(params, gains);
    const double b2 = 2.0 * zeta / params.n0;
    const int dof = static_cast<int>(2.0 * kH1Order);
    const Moments m = run_blocks(mc, [&](RandomStream& s) {
        return noncentral_chi2(s, dof, a) > b2 ? 1.0 : 0.0;
    });
    return as_probability(m);
}

McEstimate estimate_detection(const SystemParams& params, const LinkVariances& vars,
                              const DetectionConfig& config, const McConfig& mc) {
    config.validate();
    const int dof = static_cast<int>(2.0 * kH1Order);
    const Moments m = run_blocks(mc, [&](RandomStream& s) {
        const ChannelRealization g = sample(vars, s);
        const double zeta = calibrate_threshold(params, g, config.p_fa_target);
        const double a = h1_noncentrality(params, g);
        return noncentral_chi2(s, dof, a) > 2.0 * zeta / params.n0 ? 1.0 : 0.0;
    });
    return as_probability(m);
}

McEstimate estimate_relay_success(const SystemParams& params, const LinkVariances& vars,
                                  double theta, const McConfig& mc) {
    const double w = params.effective_omega();
    const double gr = params.gamma_r();
    const Moments m = run_blocks(mc, [&](RandomStream& s) {
        const ChannelRealization g = sample(vars, s);
        const double x = g.rho_rr * params.delta * gr + g.rho_li * w * gr + 1.0;
        return g.rho_sr >= theta * x ? 1.0 : 0.0;
    });
    return as_probability(m);
}

}  // namespace jcs
