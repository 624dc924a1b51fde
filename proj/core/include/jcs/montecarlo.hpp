#pragma once

#include "jcs/channel.hpp"
#include "jcs/scenario.hpp"
#include "jcs/sensing.hpp"
#include "jcs/sinr.hpp"

#include <cstdint>

namespace jcs {

/// Trials are grouped into fixed blocks of kMcBlock; block k always draws from
/// RandomStream(seed, k), so results do not depend on chunk or workers.
inline constexpr std::uint64_t kMcBlock = 1024;

struct McConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::uint64_t chunk = 65536;  // trials per work unit, rounded up to whole blocks
    unsigned workers = 0;         // 0: JCS_WORKERS or hardware count

    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

enum class Device { Far, Near };

/// Outage event for one realization under selection combining with a
/// decode-and-forward relay that stays silent when it fails to decode.
bool outage_event(Device device, const SystemParams& params, const SinrSet& s);

McEstimate estimate_outage(Device device, const SystemParams& params, const LinkVariances& vars,
                           const McConfig& mc);

McEstimate estimate_ergodic_rate(Device device, const SystemParams& params,
                                 const LinkVariances& vars, const McConfig& mc);

/// Detection on a fixed realization: per trial, a 5-DoF noncentral chi-square
/// energy statistic (noncentrality from the echo hypothesis) against zeta.
McEstimate estimate_detection_given(const SystemParams& params, const ChannelRealization& gains,
                                    double zeta, const McConfig& mc);

/// Ensemble detection: per trial, draw a channel, calibrate zeta to the
/// false-alarm target, then draw the energy statistic.
McEstimate estimate_detection(const SystemParams& params, const LinkVariances& vars,
                              const DetectionConfig& config, const McConfig& mc);

/// Rate of the relay decode-success event rho_SR >= theta * X for tests of
/// the closed form.
McEstimate estimate_relay_success(const SystemParams& params, const LinkVariances& vars,
                                  double theta, const McConfig& mc);

}  // namespace jcs
