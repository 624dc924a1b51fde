#pragma once

#include "jcs/channel.hpp"
#include "jcs/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jcs {

enum class Problem { SCD, CCD };

struct OpaTolerances {
    double rel_tol = 1e-9;     // stop when a sweep improves less than this
    int max_sweeps = 100;
    double sigma = 1e-6;       // keeps a_n strictly below 0.5
    double feas_slack = 1e-9;  // relative slack for constraint checks
    int an_scan_points = 4096; // CCD polish over a_n
};

/// Pin any subset of the decision variables (fixed-parameter baselines).
struct FixedVariables {
    std::optional<double> p_com;
    std::optional<double> p_sen;
    std::optional<double> a_n;
};

struct OpaSolution {
    double p_com = 0.0;
    double p_sen = 0.0;
    double a_n = 0.0;
    double objective = 0.0;        // SCD: sensing SINR; CCD: high-SNR sum-rate surrogate
    double exact_objective = 0.0;  // CCD: instantaneous sum rate at the point; SCD: same as objective
    bool feasible = false;
    int iterations = 0;
    std::vector<double> trace;           // objective after each sweep
    std::vector<std::string> violated;   // named constraints when infeasible
};

/// Quantities of the SCD closed form at a given a_n.
struct ScdDerived {
    double theta1_star = 0.0, theta2_star = 0.0, theta_star = 0.0;
    double theta_prime = 0.0;  // theta_star / rho_SR
    double l2 = 0.0;           // delta rho_RR + omega rho_LI
    double c11 = 0.0, c12 = 0.0, c1 = 0.0;
    double a_n_dagger = 0.0;
};

/// Quantities of the CCD reformulation at a given (p_com, p_sen, a_n).
struct CcdDerived {
    double l1 = 0.0, l2 = 0.0, l3 = 0.0, l4 = 0.0;
    double f1 = 0.0, f2 = 0.0, f3 = 0.0;
    double c11 = 0.0, c12 = 0.0, c13 = 0.0, c1 = 0.0;  // P_com floors from the direct links
    double c21 = 0.0, c22 = 0.0, c23 = 0.0, c2 = 0.0;  // a_n floors
    double c31 = 0.0, c32 = 0.0, c33 = 0.0, c34 = 0.0, c35 = 0.0, c3 = 0.0;  // a_n ceilings
};

/// gamma_th_n / (gamma_th_f + gamma_th_n + gamma_th_f gamma_th_n).
double a_n_dagger(double gamma_th_f, double gamma_th_n);

ScdDerived scd_derived(const SystemParams& params, const ChannelRealization& gains, double a_n);
CcdDerived ccd_derived(const SystemParams& params, const ChannelRealization& gains, double p_com,
                       double p_sen, double a_n);

/// Sensing SINR at the relay for the given powers.
double scd_objective(const SystemParams& params, const ChannelRealization& gains, double p_com,
                     double p_sen);

/// High-SNR sum-rate surrogate (bits/s/Hz).
double ccd_objective(const SystemParams& params, const ChannelRealization& gains, double p_com,
                     double p_sen, double a_n);

/// Instantaneous sum rate r_f + r_n at the point.
double ccd_exact_objective(const SystemParams& params, const ChannelRealization& gains,
                           double p_com, double p_sen, double a_n);

/// Names of violated constraints, evaluated on the exact SINR expressions with
/// relative slack.
std::vector<std::string> scd_violations(const SystemParams& params, const ChannelRealization& gains,
                                        double p_com, double p_sen, double a_n, double slack = 1e-9);
std::vector<std::string> ccd_violations(const SystemParams& params, const ChannelRealization& gains,
                                        double p_com, double p_sen, double a_n, double slack = 1e-9);

OpaSolution solve_scd(const SystemParams& params, const ChannelRealization& gains,
                      const OpaTolerances& tol = {}, const FixedVariables& fixed = {});
OpaSolution solve_ccd(const SystemParams& params, const ChannelRealization& gains,
                      const OpaTolerances& tol = {}, const FixedVariables& fixed = {});

/// Exhaustive search: P_com, P_sen on linspace(0, p_max, resolution), a_n on
/// the cell midpoints of (0, 0.5). Fixed variables replace their axis.
OpaSolution grid_oracle(Problem problem, const SystemParams& params,
                        const ChannelRealization& gains, int resolution, unsigned workers = 0,
                        const FixedVariables& fixed = {}, double slack = 1e-9);

/// Stationarity check for the SCD power step at a solution: multipliers of
/// the active constraints and the P_sen reproduced by the KKT closed form.
struct ScdKkt {
    double lambda11 = 0.0, lambda12 = 0.0, lambda13 = 0.0;
    double p_sen_closed_form = 0.0;  // NaN when omega rho_LI == 0
    bool multipliers_nonnegative = false;
};
ScdKkt scd_kkt(const SystemParams& params, const ChannelRealization& gains,
               const OpaSolution& sol);

}  // namespace jcs
