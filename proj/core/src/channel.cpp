#include "jcs/channel.hpp"

#include "jcs/errors.hpp"

#include <cmath>

namespace jcs {

void ChannelRealization::update_gains() {
    rho_sr = std::norm(h_sr);
    rho_sdf = std::norm(h_sdf);
    rho_sdn = std::norm(h_sdn);
    rho_rdf = std::norm(h_rdf);
    rho_rdn = std::norm(h_rdn);
    rho_rt = std::norm(h_rt);
    rho_rr = std::norm(h_rr);
    rho_li = std::norm(h_li);
}

ChannelRealization sample(const LinkVariances& vars, RandomStream& stream) {
    vars.validate();
    ChannelRealization g;
    g.h_sr = stream.complex_normal(vars.beta_sr);
    g.h_sdf = stream.complex_normal(vars.beta_sdf);
    g.h_sdn = stream.complex_normal(vars.beta_sdn);
    g.h_rdf = stream.complex_normal(vars.beta_rdf);
    g.h_rdn = stream.complex_normal(vars.beta_rdn);
    g.h_rt = stream.complex_normal(vars.beta_rr);
    g.h_li = stream.complex_normal(vars.beta_li);
    g.h_rr = g.h_rt * g.h_rt;
    g.update_gains();
    g.rho_rr = g.rho_rt * g.rho_rt;  // exact square, not |h_rt^2| rounded separately
    return g;
}

ChannelRealization mean_surrogate(const LinkVariances& vars) {
    vars.validate();
    ChannelRealization g;
    g.h_sr = std::sqrt(vars.beta_sr);
    g.h_sdf = std::sqrt(vars.beta_sdf);
    g.h_sdn = std::sqrt(vars.beta_sdn);
    g.h_rdf = std::sqrt(vars.beta_rdf);
    g.h_rdn = std::sqrt(vars.beta_rdn);
    g.h_rt = std::sqrt(vars.beta_rr);
    g.h_li = std::sqrt(vars.beta_li);
    g.h_rr = std::sqrt(2.0) * vars.beta_rr;
    g.update_gains();
    g.rho_sr = vars.beta_sr;
    g.rho_sdf = vars.beta_sdf;
    g.rho_sdn = vars.beta_sdn;
    g.rho_rdf = vars.beta_rdf;
    g.rho_rdn = vars.beta_rdn;
    g.rho_rt = vars.beta_rr;
    g.rho_rr = 2.0 * vars.beta_rr * vars.beta_rr;
    g.rho_li = vars.beta_li;
    return g;
}

double rho_rr_cdf(double x, double beta_rr) {
    if (!(x >= 0.0)) throw DomainError("rho_rr_cdf: x must be nonnegative");
    if (!(beta_rr > 0.0)) throw DomainError("rho_rr_cdf: beta must be positive");
    return -std::expm1(-std::sqrt(x) / beta_rr);
}

double rho_rr_pdf(double x, double beta_rr) {
    if (!(x >= 0.0)) throw DomainError("rho_rr_pdf: x must be nonnegative");
    if (!(beta_rr > 0.0)) throw DomainError("rho_rr_pdf: beta must be positive");
    const double s = std::sqrt(x);
    return std::exp(-s / beta_rr) / (2.0 * beta_rr * s);
}

}  // namespace jcs
