#pragma once

#include <string>

namespace jcs {

enum class DuplexMode { FD, HD, NonCooperative };

// How the footnote's h / sqrt(1 + d^alpha) becomes a variance.
//   Power:     beta = Omega / (1 + d^alpha)
//   Amplitude: beta = Omega / sqrt(1 + d^alpha)
enum class VarianceLaw { Power, Amplitude };

std::string to_string(DuplexMode m);
std::string to_string(VarianceLaw law);
DuplexMode parse_duplex_mode(const std::string& s);
VarianceLaw parse_variance_law(const std::string& s);

/// All scenario constants. Powers are linear and normalized to n0's unit.
struct SystemParams {
    double a_f = 0.7;
    double a_n = 0.3;
    double p_com = 100.0;
    double p_sen = 100.0;
    double p_max = 1000.0;
    double gamma_th_f = 1.0;
    double gamma_th_n = 2.0;
    double delta = 0.2;
    double omega = 1.0;
    double n0 = 1.0;
    double rho_li_mean = 0.0031622776601683794;  // -25 dB
    double omega_var = 5.0;
    double alpha = 4.0;
    double kappa = 0.01;
    DuplexMode mode = DuplexMode::FD;
    VarianceLaw variance_law = VarianceLaw::Amplitude;

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;

    double gamma_c() const { return p_com / n0; }
    double gamma_r() const { return p_sen / n0; }

    /// LSI switch as seen by the SINR model. Non-cooperative runs keep
    /// whatever omega says but nothing downstream reads the relay path.
    double effective_omega() const { return mode == DuplexMode::HD ? 0.0 : omega; }
};

struct Geometry {
    double d_sr = 10.0;
    double d_sdf = 25.0;
    double d_sdn = 20.0;
    double d_rdf = 20.0;
    double d_rdn = 15.0;
    double d_rt = 12.0;
    double d_tr = 12.0;

    void validate() const;
};

struct LinkVariances {
    double beta_sr = 0.0;
    double beta_sdf = 0.0;
    double beta_sdn = 0.0;
    double beta_rdf = 0.0;
    double beta_rdn = 0.0;
    double beta_rr = 0.0;  // variance of the R->T->R hop, equal to beta_rt
    double beta_li = 0.0;

    void validate() const;
};

struct Scenario {
    SystemParams params;
    Geometry geometry;
};

/// Single-link variance under the chosen law.
double link_variance(double omega_var, double alpha, double distance, VarianceLaw law);

LinkVariances derive_variances(const SystemParams& params, const Geometry& geo);

Scenario paper_defaults();

/// dB helpers for the configuration and CLI boundary.
double db_to_linear(double db);
double linear_to_db(double lin);

/// Copy of params with p_com = p_sen = n0 * 10^(snr_db / 10).
SystemParams with_snr(SystemParams params, double snr_db);

/// Copy with a_n replaced and a_f = 1 - a_n.
SystemParams with_power_split(SystemParams params, double a_n);

/// Copy switched to a duplex mode with omega kept consistent.
SystemParams with_mode(SystemParams params, DuplexMode mode);

}  // namespace jcs
