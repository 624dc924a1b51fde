#include "jcs/outage.hpp"

#include "jcs/errors.hpp"
#include "jcs/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace jcs {

OutageThresholds thresholds(const SystemParams& p) {
    OutageThresholds t;
    const double margin = p.a_f - p.a_n * p.gamma_th_f;
    if (!(margin > 0.0)) return t;
    t.valid = true;
    const double gc = p.gamma_c();
    const double gr = p.gamma_r();
    t.theta1_star = p.gamma_th_f / margin;
    t.theta2_star = p.gamma_th_n / p.a_n;
    t.theta_star = std::max(t.theta1_star, t.theta2_star);
    t.theta1 = t.theta1_star / gc;
    t.theta2 = t.theta2_star / gc;
    t.theta = std::max(t.theta1, t.theta2);
    t.phi1 = t.theta1_star / gr;
    t.phi2 = t.theta2_star / gr;
    t.phi = std::max(t.phi1, t.phi2);
    return t;
}

namespace {

// beta_SR / (beta_SR + beta_LI w x) * K(beta_RR, delta x / beta_SR) / (2 beta_RR),
// where x = gamma_r * theta. This is E over the echo and LSI gains of the
// survival exp(-theta (...)/beta_SR) without the noise factor.
double interference_factor(const SystemParams& p, const LinkVariances& v, double x) {
    const double w = p.effective_omega();
    const double lsi = v.beta_sr / (v.beta_sr + v.beta_li * w * x);
    const double echo = echo_kernel(v.beta_rr, p.delta * x / v.beta_sr) / (2.0 * v.beta_rr);
    return lsi * echo;
}

double direct_outage(double theta, double beta) { return -std::expm1(-theta / beta); }

}  // namespace

double relay_success(const SystemParams& p, const LinkVariances& v, double gamma_r, double theta) {
    if (!std::isfinite(theta)) return 0.0;
    return std::exp(-theta / v.beta_sr) * interference_factor(p, v, gamma_r * theta);
}

double outage_far(const SystemParams& p, const LinkVariances& v) {
    const OutageThresholds t = thresholds(p);
    if (!t.valid) return 1.0;
    const double direct = direct_outage(t.theta1, v.beta_sdf);
    if (p.mode == DuplexMode::NonCooperative) return direct;
    const double coop_ok = relay_success(p, v, p.gamma_r(), t.theta1) * std::exp(-t.phi1 / v.beta_rdf);
    return std::clamp(direct * (1.0 - coop_ok), 0.0, 1.0);
}

double outage_near(const SystemParams& p, const LinkVariances& v) {
    const OutageThresholds t = thresholds(p);
    if (!t.valid) return 1.0;
    const double direct = direct_outage(t.theta, v.beta_sdn);
    if (p.mode == DuplexMode::NonCooperative) return direct;
    const double coop_ok = relay_success(p, v, p.gamma_r(), t.theta) * std::exp(-t.phi / v.beta_rdn);
    return std::clamp(direct * (1.0 - coop_ok), 0.0, 1.0);
}

double outage_far_asymptotic(const SystemParams& p, const LinkVariances& v) {
    const OutageThresholds t = thresholds(p);
    if (!t.valid) return 1.0;
    const double direct = t.theta1 / v.beta_sdf;
    if (p.mode == DuplexMode::NonCooperative) return direct;
    const double ratio = p.gamma_r() / p.gamma_c();
    const double coop_ok = (1.0 - t.phi1 / v.beta_rdf) * interference_factor(p, v, ratio * t.theta1_star);
    return direct * (1.0 - coop_ok);
}

double outage_near_asymptotic(const SystemParams& p, const LinkVariances& v) {
    const OutageThresholds t = thresholds(p);
    if (!t.valid) return 1.0;
    const double direct = t.theta / v.beta_sdn;
    if (p.mode == DuplexMode::NonCooperative) return direct;
    const double ratio = p.gamma_r() / p.gamma_c();
    const double coop_ok = (1.0 - t.phi / v.beta_rdn) * interference_factor(p, v, ratio * t.theta_star);
    return direct * (1.0 - coop_ok);
}

double diversity_order(const OutageFn& outage_fn, const SystemParams& params,
                       const LinkVariances& vars, double snr_lo_db, double snr_hi_db) {
    if (!(snr_hi_db > snr_lo_db)) throw DomainError("diversity_order: need snr_hi > snr_lo");
    const double lo = outage_fn(with_snr(params, snr_lo_db), vars);
    const double hi = outage_fn(with_snr(params, snr_hi_db), vars);
    if (!(lo > 1e-12) || !(hi > 1e-12)) throw RangeError("diversity_order: outage underflow");
    return -(std::log10(hi) - std::log10(lo)) / ((snr_hi_db - snr_lo_db) / 10.0);
}

}  // namespace jcs
