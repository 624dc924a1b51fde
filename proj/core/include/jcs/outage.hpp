#pragma once

#include "jcs/scenario.hpp"

#include <functional>

namespace jcs {

struct OutageThresholds {
    bool valid = false;  // false when a_f <= a_n * gamma_th_f
    double theta1 = 0.0, theta2 = 0.0, theta = 0.0;
    double phi1 = 0.0, phi2 = 0.0, phi = 0.0;
    double theta1_star = 0.0, theta2_star = 0.0, theta_star = 0.0;
};

OutageThresholds thresholds(const SystemParams& params);

/// Pr(rho_SR >= theta * (rho_RR delta gamma_r + rho_LI omega gamma_r + 1)),
/// the relay's decode-success probability at normalized threshold theta.
double relay_success(const SystemParams& params, const LinkVariances& vars, double gamma_r,
                     double theta);

double outage_far(const SystemParams& params, const LinkVariances& vars);
double outage_near(const SystemParams& params, const LinkVariances& vars);

/// High-SNR forms; the relay factor keeps the finite gamma_r / gamma_c ratio.
double outage_far_asymptotic(const SystemParams& params, const LinkVariances& vars);
double outage_near_asymptotic(const SystemParams& params, const LinkVariances& vars);

using OutageFn = std::function<double(const SystemParams&, const LinkVariances&)>;

/// -d log10(P_out) / d log10(gamma) between two SNRs with gamma_c = gamma_r.
/// Throws RangeError when either outage is <= 1e-12.
double diversity_order(const OutageFn& outage_fn, const SystemParams& params,
                       const LinkVariances& vars, double snr_lo_db, double snr_hi_db);

}  // namespace jcs
