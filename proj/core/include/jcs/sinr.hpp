#pragma once

#include "jcs/channel.hpp"
#include "jcs/scenario.hpp"

namespace jcs {

/// Decode SINRs. Naming: <link>_<symbol>, e.g. sr_xf is x_f decoded at R.
struct SinrSet {
    double sdn_xf = 0.0;
    double sdn_xn = 0.0;
    double sdf_xf = 0.0;
    double sr_xf = 0.0;
    double sr_xn = 0.0;
    double rdf_xf = 0.0;
    double rdn_xf = 0.0;
    double rdn_xn = 0.0;
    double sense = 0.0;  // echo SINR at the relay
};

SinrSet evaluate(const SystemParams& params, const ChannelRealization& gains);

/// Mean received power at the relay, averaged over symbols and noise.
double received_power(const SystemParams& params, const ChannelRealization& gains);

/// Inverse of received_power for the echo term: returns rho_rr * delta,
/// clamped at zero. Throws DomainError when p_sen == 0.
double estimate_target_info(const SystemParams& params, const ChannelRealization& gains,
                            double measured_power);

}  // namespace jcs
