#pragma once

#include "jcs/channel.hpp"
#include "jcs/scenario.hpp"

#include <cstddef>
#include <cstdint>

namespace jcs {

/// Marcum orders of the energy statistic: 4 DoF without the echo, 5 with it.
inline constexpr double kH0Order = 2.0;
inline constexpr double kH1Order = 2.5;

struct DetectionConfig {
    double p_fa_target = 1e-5;
    std::size_t ensemble_size = 2000;

    void validate() const;
};

/// Noncentrality arguments sqrt(2 |A|^2 / N0) of the two hypotheses.
double h0_noncentrality(const SystemParams& params, const ChannelRealization& gains);
double h1_noncentrality(const SystemParams& params, const ChannelRealization& gains);

double false_alarm(const SystemParams& params, const ChannelRealization& gains, double zeta);
double detection_probability(const SystemParams& params, const ChannelRealization& gains,
                             double zeta);

/// Threshold zeta giving false_alarm == p_fa_target on this realization.
double calibrate_threshold(const SystemParams& params, const ChannelRealization& gains,
                           double p_fa_target);

/// Mean detection probability over config.ensemble_size channel draws, the
/// threshold recalibrated per draw. Draw i uses RandomStream(seed, i).
double ensemble_detection(const SystemParams& params, const LinkVariances& vars,
                          const DetectionConfig& config, std::uint64_t seed,
                          unsigned workers = 0);

}  // namespace jcs
