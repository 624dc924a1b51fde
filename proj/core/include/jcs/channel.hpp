#pragma once

#include "jcs/rng.hpp"
#include "jcs/scenario.hpp"

#include <complex>

namespace jcs {

/// One fading draw. rho_* = |h_*|^2. The echo is the R->T->R cascade with
/// a reciprocal hop, so h_rr = h_rt^2 and rho_rr = rho_rt^2.
struct ChannelRealization {
    std::complex<double> h_sr, h_sdf, h_sdn, h_rdf, h_rdn, h_rt, h_rr, h_li;
    double rho_sr = 0.0;
    double rho_sdf = 0.0;
    double rho_sdn = 0.0;
    double rho_rdf = 0.0;
    double rho_rdn = 0.0;
    double rho_rt = 0.0;
    double rho_rr = 0.0;
    double rho_li = 0.0;

    /// Fill every rho_* from the complex coefficients.
    void update_gains();
};

ChannelRealization sample(const LinkVariances& vars, RandomStream& stream);

/// Deterministic stand-in with rho_i = beta_i and rho_rr = E[rho_rr] = 2 beta_rr^2.
/// Coefficients are real and positive with matching magnitudes.
ChannelRealization mean_surrogate(const LinkVariances& vars);

/// Cascaded echo gain law: F(x) = 1 - exp(-sqrt(x) / beta).
double rho_rr_cdf(double x, double beta_rr);
/// f(x) = exp(-sqrt(x) / beta) / (2 beta sqrt(x)).
double rho_rr_pdf(double x, double beta_rr);

}  // namespace jcs
