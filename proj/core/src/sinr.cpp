#include "jcs/sinr.hpp"

#include "jcs/errors.hpp"

#include <algorithm>

namespace jcs {

SinrSet evaluate(const SystemParams& params, const ChannelRealization& g) {
    const double af = params.a_f;
    const double an = params.a_n;
    const double gc = params.gamma_c();
    const double gr = params.gamma_r();
    const double w = params.effective_omega();
    const double d = params.delta;

    SinrSet s;
    s.sdn_xf = af * g.rho_sdn * gc / (an * g.rho_sdn * gc + 1.0);
    s.sdn_xn = an * g.rho_sdn * gc;
    s.sdf_xf = af * g.rho_sdf * gc / (an * g.rho_sdf * gc + 1.0);

    const double relay_interf = g.rho_rr * d * gr + g.rho_li * w * gr + 1.0;
    s.sr_xf = af * g.rho_sr * gc / (an * g.rho_sr * gc + relay_interf);
    s.sr_xn = an * g.rho_sr * gc / relay_interf;

    s.rdf_xf = af * g.rho_rdf * gr / (an * g.rho_rdf * gr + 1.0);
    s.rdn_xf = af * g.rho_rdn * gr / (an * g.rho_rdn * gr + 1.0);
    s.rdn_xn = an * g.rho_rdn * gr;

    s.sense = d * g.rho_rr * gr / (g.rho_sr * gc + g.rho_li * w * gr + 1.0);
    return s;
}

double received_power(const SystemParams& params, const ChannelRealization& g) {
    const double w = params.effective_omega();
    return g.rho_sr * params.p_com + g.rho_rr * params.delta * params.p_sen +
           g.rho_li * w * params.p_sen + params.n0;
}

double estimate_target_info(const SystemParams& params, const ChannelRealization& g,
                            double measured_power) {
    if (!(measured_power >= 0.0)) throw DomainError("estimate_target_info: negative power");
    if (params.p_sen == 0.0) throw DomainError("estimate_target_info: undefined for p_sen = 0");
    const double w = params.effective_omega();
    const double residual = measured_power - g.rho_li * w * params.p_sen -
                            g.rho_sr * params.p_com - params.n0;
    return std::max(0.0, residual / params.p_sen);
}

}  // namespace jcs
