#include "jcs/scenario.hpp"

#include "jcs/errors.hpp"

#include <cmath>

namespace jcs {

namespace {

void check(bool ok, const char* msg) {
    if (!ok) throw ConfigError(msg);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::string to_string(DuplexMode m) {
    switch (m) {
        case DuplexMode::FD: return "FD";
        case DuplexMode::HD: return "HD";
        case DuplexMode::NonCooperative: return "NonCooperative";
    }
    return "?";
}

std::string to_string(VarianceLaw law) {
    return law == VarianceLaw::Power ? "power" : "amplitude";
}

DuplexMode parse_duplex_mode(const std::string& s) {
    if (s == "FD" || s == "fd") return DuplexMode::FD;
    if (s == "HD" || s == "hd") return DuplexMode::HD;
    if (s == "NonCooperative" || s == "noncoop" || s == "non-cooperative")
        return DuplexMode::NonCooperative;
    throw ConfigError("unknown duplex mode: " + s);
}

VarianceLaw parse_variance_law(const std::string& s) {
    if (s == "power") return VarianceLaw::Power;
    if (s == "amplitude") return VarianceLaw::Amplitude;
    throw ConfigError("unknown variance law: " + s);
}

void SystemParams::validate() const {
    check(std::isfinite(a_f) && std::isfinite(a_n), "a_f and a_n must be finite");
    check(std::abs(a_f + a_n - 1.0) <= 1e-12, "a_f + a_n must equal 1");
    check(0.0 < a_n && a_n < a_f && a_f < 1.0, "need 0 < a_n < a_f < 1");
    check(finite_nonneg(p_com) && finite_nonneg(p_sen) && finite_nonneg(p_max),
          "powers must be finite and nonnegative");
    check(p_com <= p_max * (1.0 + 1e-12) && p_sen <= p_max * (1.0 + 1e-12),
          "p_com and p_sen must not exceed p_max");
    check(std::isfinite(gamma_th_f) && gamma_th_f > 0.0, "gamma_th_f must be positive");
    check(std::isfinite(gamma_th_n) && gamma_th_n > 0.0, "gamma_th_n must be positive");
    check(delta >= 0.0 && delta <= 1.0, "delta must lie in [0, 1]");
    check(omega == 0.0 || omega == 1.0, "omega must be 0 or 1");
    check(std::isfinite(n0) && n0 > 0.0, "n0 must be positive");
    check(std::isfinite(rho_li_mean) && rho_li_mean > 0.0, "rho_li_mean must be positive");
    check(std::isfinite(omega_var) && omega_var > 0.0, "omega_var must be positive");
    check(finite_nonneg(alpha), "alpha must be nonnegative");
    check(finite_nonneg(kappa), "kappa must be nonnegative");
    if (mode == DuplexMode::HD) check(omega == 0.0, "HD mode requires omega = 0");
    if (mode == DuplexMode::FD) check(omega == 1.0, "FD mode requires omega = 1");
}

void Geometry::validate() const {
    for (double d : {d_sr, d_sdf, d_sdn, d_rdf, d_rdn, d_rt, d_tr})
        check(std::isfinite(d) && d > 0.0, "distances must be positive");
    check(d_rt == d_tr, "d_rt must equal d_tr");
}

void LinkVariances::validate() const {
    for (double b : {beta_sr, beta_sdf, beta_sdn, beta_rdf, beta_rdn, beta_rr, beta_li})
        check(std::isfinite(b) && b > 0.0, "link variances must be positive");
}

double link_variance(double omega_var, double alpha, double distance, VarianceLaw law) {
    const double path = 1.0 + std::pow(distance, alpha);
    return law == VarianceLaw::Power ? omega_var / path : omega_var / std::sqrt(path);
}

LinkVariances derive_variances(const SystemParams& params, const Geometry& geo) {
    params.validate();
    geo.validate();
    auto beta = [&](double d) {
        return link_variance(params.omega_var, params.alpha, d, params.variance_law);
    };
    LinkVariances v;
    v.beta_sr = beta(geo.d_sr);
    v.beta_sdf = beta(geo.d_sdf);
    v.beta_sdn = beta(geo.d_sdn);
    v.beta_rdf = beta(geo.d_rdf);
    v.beta_rdn = beta(geo.d_rdn);
    v.beta_rr = beta(geo.d_rt);
    v.beta_li = params.rho_li_mean;
    v.validate();
    return v;
}

Scenario paper_defaults() {
    Scenario s;
    s.params.rho_li_mean = db_to_linear(-25.0);
    return s;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

SystemParams with_snr(SystemParams params, double snr_db) {
    const double p = params.n0 * db_to_linear(snr_db);
    params.p_com = p;
    params.p_sen = p;
    if (params.p_max < p) params.p_max = p;
    return params;
}

SystemParams with_power_split(SystemParams params, double a_n) {
    params.a_n = a_n;
    params.a_f = 1.0 - a_n;
    return params;
}

SystemParams with_mode(SystemParams params, DuplexMode mode) {
    params.mode = mode;
    if (mode == DuplexMode::HD) params.omega = 0.0;
    if (mode == DuplexMode::FD) params.omega = 1.0;
    return params;
}

}  // namespace jcs
