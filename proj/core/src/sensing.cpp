#include "jcs/sensing.hpp"

#include "jcs/errors.hpp"
#include "jcs/parallel.hpp"
#include "jcs/specfun.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace jcs {

void DetectionConfig::validate() const {
    if (!(p_fa_target > 0.0 && p_fa_target < 1.0))
        throw ConfigError("p_fa_target must lie in (0, 1)");
    if (ensemble_size < 1) throw ConfigError("ensemble_size must be at least 1");
}

namespace {

std::complex<double> h0_amplitude(const SystemParams& p, const ChannelRealization& g) {
    const double w = p.effective_omega();
    return g.h_sr * (std::sqrt(p.a_n * p.p_com) + std::sqrt(p.a_f * p.p_com)) +
           g.h_li * std::sqrt(w * p.p_sen);
}

double threshold_arg(const SystemParams& p, double zeta) {
    if (!(zeta >= 0.0)) throw DomainError("sensing threshold must be nonnegative");
    return std::sqrt(2.0 * zeta / p.n0);
}

}  // namespace

double h0_noncentrality(const SystemParams& p, const ChannelRealization& g) {
    return std::sqrt(2.0 * std::norm(h0_amplitude(p, g)) / p.n0);
}

double h1_noncentrality(const SystemParams& p, const ChannelRealization& g) {
    const std::complex<double> a = h0_amplitude(p, g) + g.h_rr * std::sqrt(p.delta * p.p_sen);
    return std::sqrt(2.0 * std::norm(a) / p.n0);
}

double false_alarm(const SystemParams& p, const ChannelRealization& g, double zeta) {
    return marcum_q(kH0Order, h0_noncentrality(p, g), threshold_arg(p, zeta));
}

double detection_probability(const SystemParams& p, const ChannelRealization& g, double zeta) {
    return marcum_q(kH1Order, h1_noncentrality(p, g), threshold_arg(p, zeta));
}

double calibrate_threshold(const SystemParams& p, const ChannelRealization& g, double p_fa_target) {
    const double b = marcum_q_inv_b(kH0Order, h0_noncentrality(p, g), p_fa_target);
    return 0.5 * p.n0 * b * b;
}

double ensemble_detection(const SystemParams& params, const LinkVariances& vars,
                          const DetectionConfig& config, std::uint64_t seed, unsigned workers) {
    config.validate();
    std::vector<double> pd(config.ensemble_size);
    parallel_for(config.ensemble_size, resolve_workers(workers), [&](std::size_t i) {
        RandomStream stream(seed, i);
        const ChannelRealization g = sample(vars, stream);
        const double zeta = calibrate_threshold(params, g, config.p_fa_target);
        pd[i] = detection_probability(params, g, zeta);
    });
    return pairwise_sum(pd) / static_cast<double>(pd.size());
}

}  // namespace jcs
