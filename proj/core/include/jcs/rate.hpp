#pragma once

#include "jcs/channel.hpp"
#include "jcs/quadrature.hpp"
#include "jcs/scenario.hpp"

namespace jcs {

/// Per-device rate split into the relayed term and the direct term, both
/// already scaled for the duplex mode (HD halves the relayed term, the
/// non-cooperative mode drops it).
struct RateTerms {
    double relay = 0.0;
    double direct = 0.0;
    double total() const { return relay + direct; }
};

struct AchievableRates {
    RateTerms far;
    RateTerms near;
    double r_f() const { return far.total(); }
    double r_n() const { return near.total(); }
    double sum() const { return r_f() + r_n(); }
};

/// Instantaneous rates for one gain assignment (bits/s/Hz).
AchievableRates achievable_rates(const SystemParams& params, const ChannelRealization& gains);

/// Quadrature settings used by the ergodic integrals unless overridden.
QuadratureSpec rate_quadrature();

RateTerms ergodic_rate_far_terms(const SystemParams& params, const LinkVariances& vars,
                                 const QuadratureSpec& spec = rate_quadrature());
RateTerms ergodic_rate_near_terms(const SystemParams& params, const LinkVariances& vars,
                                  const QuadratureSpec& spec = rate_quadrature());

double ergodic_rate_far(const SystemParams& params, const LinkVariances& vars);
double ergodic_rate_near(const SystemParams& params, const LinkVariances& vars);

/// Near-device relayed integral truncated at w_max (finite upper limit).
double ergodic_rate_near_relay_truncated(const SystemParams& params, const LinkVariances& vars,
                                         double w_max,
                                         const QuadratureSpec& spec = rate_quadrature());

/// Mean-gain approximations: E[rho_i] = beta_i and E[rho_rr] = 2 beta_rr^2
/// substituted into the instantaneous rate expressions.
RateTerms ergodic_rate_far_approx_terms(const SystemParams& params, const LinkVariances& vars);
RateTerms ergodic_rate_near_approx_terms(const SystemParams& params, const LinkVariances& vars);
double ergodic_rate_far_approx(const SystemParams& params, const LinkVariances& vars);
double ergodic_rate_near_approx(const SystemParams& params, const LinkVariances& vars);
double ergodic_sum_approx(const SystemParams& params, const LinkVariances& vars);

}  // namespace jcs
