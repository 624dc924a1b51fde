#include "jcs/opa.hpp"

#include "jcs/errors.hpp"
#include "jcs/parallel.hpp"
#include "jcs/rate.hpp"
#include "jcs/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace jcs {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kBig = std::numeric_limits<double>::infinity();

SystemParams at_point(SystemParams p, double p_com, double p_sen, double a_n) {
    p.p_com = p_com;
    p.p_sen = p_sen;
    p.a_n = a_n;
    p.a_f = 1.0 - a_n;
    return p;
}

// N0 * theta / rho, infinite on a dead link.
double floor_for(double n0, double theta, double rho) { return rho > 0.0 ? n0 * theta / rho : kBig; }

void check_gains(const ChannelRealization& g) {
    for (double r : {g.rho_sr, g.rho_sdf, g.rho_sdn, g.rho_rdf, g.rho_rdn, g.rho_rr, g.rho_li})
        if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("optimizer: gains must be finite and nonnegative");
}

struct Thetas {
    bool ok = false;
    double t1 = 0.0, t2 = 0.0, t = 0.0;
};

Thetas thetas(const SystemParams& p, double a_n) {
    Thetas th;
    const double margin = (1.0 - a_n) - a_n * p.gamma_th_f;
    if (!(a_n > 0.0) || !(margin > 0.0)) return th;
    th.ok = true;
    th.t1 = p.gamma_th_f / margin;
    th.t2 = p.gamma_th_n / a_n;
    th.t = std::max(th.t1, th.t2);
    return th;
}

bool below(double value, double floor, double slack) { return value < floor * (1.0 - slack); }

void check_common(const SystemParams& p, double p_com, double p_sen, double a_n, double slack,
                  std::vector<std::string>& out) {
    const double cap = p.p_max * (1.0 + slack);
    if (p_com < -slack * p.p_max) out.push_back("p_com >= 0");
    if (p_sen < -slack * p.p_max) out.push_back("p_sen >= 0");
    if (p_com > cap) out.push_back("p_com <= p_max");
    if (p_sen > cap) out.push_back("p_sen <= p_max");
    if (!(a_n > 0.0 && a_n < 0.5)) out.push_back("0 < a_n < a_f");
}

}  // namespace

double a_n_dagger(double th_f, double th_n) { return th_n / (th_f + th_n + th_f * th_n); }

ScdDerived scd_derived(const SystemParams& p, const ChannelRealization& g, double a_n) {
    ScdDerived d;
    const Thetas th = thetas(p, a_n);
    d.a_n_dagger = a_n_dagger(p.gamma_th_f, p.gamma_th_n);
    d.l2 = p.delta * g.rho_rr + p.effective_omega() * g.rho_li;
    if (!th.ok) {
        d.theta1_star = d.theta_star = d.theta_prime = d.c11 = d.c12 = d.c1 = kBig;
        d.theta2_star = a_n > 0.0 ? p.gamma_th_n / a_n : kBig;
        return d;
    }
    d.theta1_star = th.t1;
    d.theta2_star = th.t2;
    d.theta_star = th.t;
    d.theta_prime = g.rho_sr > 0.0 ? th.t / g.rho_sr : kBig;
    d.c11 = floor_for(p.n0, th.t, g.rho_rdn);
    d.c12 = floor_for(p.n0, th.t1, g.rho_rdf);
    d.c1 = std::max(d.c11, d.c12);
    return d;
}

CcdDerived ccd_derived(const SystemParams& p, const ChannelRealization& g, double p_com,
                       double p_sen, double a_n) {
    CcdDerived d;
    const double a_f = 1.0 - a_n;
    const double w = p.effective_omega();
    const double thf = p.gamma_th_f;
    const double thn = p.gamma_th_n;
    d.l2 = g.rho_rr * p.delta + g.rho_li * w;
    d.l1 = g.rho_sr + d.l2;
    d.l3 = a_f * g.rho_sr - a_n * g.rho_sr * thf;
    d.l4 = p.delta * g.rho_rr - p.kappa * g.rho_li * w;
    d.f1 = a_n * g.rho_sr + d.l2;
    d.f2 = a_n * g.rho_rdn * p_sen + p.n0;
    d.f3 = a_n * g.rho_sdn * p_com + p.n0;

    const Thetas th = thetas(p, a_n);
    if (th.ok) {
        d.c11 = floor_for(p.n0, th.t1, g.rho_sdf);
        d.c12 = floor_for(p.n0, th.t1, g.rho_sdn);
        d.c13 = floor_for(p.n0, th.t2, g.rho_sdn);
    } else {
        d.c11 = d.c12 = d.c13 = kBig;
    }
    d.c1 = std::max({d.c11, d.c12, d.c13});

    auto ratio = [](double num, double den) { return den > 0.0 ? num / den : kBig; };
    d.c21 = ratio(d.l2 * p_sen * thn + p.n0 * thn, g.rho_sr * p_com);
    d.c22 = ratio(p.n0 * thn, g.rho_sdn * p_com);
    d.c23 = ratio(p.n0 * thn, g.rho_rdn * p_sen);
    d.c2 = std::max({d.c21, d.c22, d.c23});

    auto g1 = [&](double rho) {
        const double x = p_com * rho;
        return x > 0.0 ? (x - p.n0 * thf) / (x * (1.0 + thf)) : -kBig;
    };
    auto g2 = [&](double rho) {
        const double x = p_sen * rho;
        return x > 0.0 ? (x - p.n0 * thf) / (x * (1.0 + thf)) : -kBig;
    };
    d.c31 = g1(g.rho_sdf);
    d.c32 = g1(g.rho_sdn);
    d.c33 = g2(g.rho_rdf);
    d.c34 = g2(g.rho_rdn);
    const double x = p_com * g.rho_sr;
    d.c35 = x > 0.0 ? (x - d.l2 * p_sen * thf - p.n0 * thf) / (x * (1.0 + thf)) : -kBig;
    d.c3 = std::min({d.c31, d.c32, d.c33, d.c34, d.c35});
    return d;
}

double scd_objective(const SystemParams& p, const ChannelRealization& g, double p_com, double p_sen) {
    return evaluate(at_point(p, p_com, p_sen, p.a_n), g).sense;
}

double ccd_objective(const SystemParams& p, const ChannelRealization& g, double p_com, double p_sen,
                     double a_n) {
    const double a_f = 1.0 - a_n;
    const double w = p.effective_omega();
    const double l2 = g.rho_rr * p.delta + g.rho_li * w;
    const double relay_far = std::min(a_f * g.rho_sr / (a_n * g.rho_sr + l2), a_f / a_n);
    const double echo_limited = l2 > 0.0 ? a_n * g.rho_sr / l2 : kBig;
    const double relay_near = std::min(echo_limited, a_n * g.rho_rdn * p_sen / p.n0);
    return std::log2(1.0 + relay_far) + std::log2(1.0 + a_f / a_n) + std::log2(1.0 + relay_near) +
           std::log2(1.0 + a_n * g.rho_sdn * p_com / p.n0);
}

double ccd_exact_objective(const SystemParams& p, const ChannelRealization& g, double p_com,
                           double p_sen, double a_n) {
    return achievable_rates(at_point(p, p_com, p_sen, a_n), g).sum();
}

std::vector<std::string> scd_violations(const SystemParams& p, const ChannelRealization& g,
                                        double p_com, double p_sen, double a_n, double slack) {
    std::vector<std::string> out;
    check_common(p, p_com, p_sen, a_n, slack, out);
    if (!(a_n > 0.0 && a_n < 1.0)) return out;
    const SinrSet s = evaluate(at_point(p, p_com, p_sen, a_n), g);
    if (below(s.sr_xf, p.gamma_th_f, slack)) out.push_back("sr_xf >= gamma_th_f");
    if (below(s.rdf_xf, p.gamma_th_f, slack)) out.push_back("rdf_xf >= gamma_th_f");
    if (below(s.rdn_xf, p.gamma_th_f, slack)) out.push_back("rdn_xf >= gamma_th_f");
    if (below(s.sr_xn, p.gamma_th_n, slack)) out.push_back("sr_xn >= gamma_th_n");
    if (below(s.rdn_xn, p.gamma_th_n, slack)) out.push_back("rdn_xn >= gamma_th_n");
    return out;
}

std::vector<std::string> ccd_violations(const SystemParams& p, const ChannelRealization& g,
                                        double p_com, double p_sen, double a_n, double slack) {
    std::vector<std::string> out = scd_violations(p, g, p_com, p_sen, a_n, slack);
    if (!(a_n > 0.0 && a_n < 1.0)) return out;
    const SinrSet s = evaluate(at_point(p, p_com, p_sen, a_n), g);
    if (below(s.sdf_xf, p.gamma_th_f, slack)) out.push_back("sdf_xf >= gamma_th_f");
    if (below(s.sdn_xf, p.gamma_th_f, slack)) out.push_back("sdn_xf >= gamma_th_f");
    if (below(s.sdn_xn, p.gamma_th_n, slack)) out.push_back("sdn_xn >= gamma_th_n");
    if (below(s.sense, p.kappa, slack)) out.push_back("sense >= kappa");
    return out;
}

// ---------------------------------------------------------------- SCD

namespace {

struct PowerPoint {
    bool feasible = false;
    double p_com = 0.0, p_sen = 0.0;
    std::string reason;
};

OpaSolution finish(OpaSolution sol, std::vector<std::string> violated) {
    sol.violated = std::move(violated);
    sol.feasible = sol.violated.empty();
    return sol;
}

OpaSolution infeasible(std::string reason, int iterations = 0) {
    OpaSolution s;
    s.feasible = false;
    s.objective = s.exact_objective = kNaN;
    s.p_com = s.p_sen = s.a_n = kNaN;
    s.iterations = iterations;
    s.violated.push_back(std::move(reason));
    return s;
}

}  // namespace

namespace {

OpaSolution scd_at(const SystemParams& p, const ChannelRealization& g, const OpaTolerances& tol,
                   const FixedVariables& fixed, double a) {
    const double pmax = p.p_max;
    const double n0 = p.n0;
    if (!(a > 0.0 && a < 0.5)) return infeasible("0 < a_n < a_f");
    const ScdDerived d = scd_derived(p, g, a);
    if (!std::isfinite(d.theta_star)) return infeasible("a_f > a_n gamma_th_f");
    if (!std::isfinite(d.theta_prime)) return infeasible("rho_SR > 0");
    if (d.c1 > pmax) return infeasible("C1 <= p_max");

    OpaSolution sol;
    sol.a_n = a;
    double pc = fixed.p_com ? *fixed.p_com : pmax;
    double ps = fixed.p_sen ? *fixed.p_sen : d.c1;
    double prev = -kBig;

    for (int sweep = 1; sweep <= tol.max_sweeps; ++sweep) {
        if (!fixed.p_sen) {
            // Largest P_sen allowed by the relay decode constraint at this P_com.
            double cap = pmax;
            if (d.l2 > 0.0) cap = std::min(cap, (pc / d.theta_prime - n0) / d.l2);
            else if (pc < d.theta_prime * n0) cap = -kBig;
            if (cap < d.c1) return infeasible("P_sen >= C1 under the relay decode constraint", sweep);
            ps = cap;
        }
        if (!fixed.p_com) {
            const double need = d.theta_prime * (d.l2 * ps + n0);
            if (need > pmax * (1.0 + tol.feas_slack))
                return infeasible("P_com <= p_max under the relay decode constraint", sweep);
            pc = std::min(need, pmax);
        }
        const double obj = scd_objective(p, g, pc, ps);
        sol.trace.push_back(obj);
        sol.iterations = sweep;
        if (std::abs(obj - prev) <= tol.rel_tol * std::abs(obj)) break;
        prev = obj;
    }

    sol.p_com = pc;
    sol.p_sen = ps;
    sol.objective = sol.exact_objective = scd_objective(p, g, pc, ps);
    return finish(sol, scd_violations(p, g, pc, ps, a, tol.feas_slack));
}

}  // namespace

OpaSolution solve_scd(const SystemParams& p, const ChannelRealization& g, const OpaTolerances& tol,
                      const FixedVariables& fixed) {
    check_gains(g);
    if (fixed.a_n) return scd_at(p, g, tol, fixed, *fixed.a_n);

    // The objective depends on a_n only through theta*, smallest at a_n^dagger.
    const double top = 0.5 - tol.sigma;
    const double best_a = std::min(a_n_dagger(p.gamma_th_f, p.gamma_th_n), top);
    OpaSolution first = scd_at(p, g, tol, fixed, best_a);
    if (first.feasible) return first;

    // The direct-link floors need not be loosest at a_n^dagger. theta* grows
    // away from a_n^dagger on both sides, so the best feasible a_n is the one
    // nearest to it: scan, then bisect the feasibility edge on each side.
    constexpr int kScan = 2000;
    std::optional<double> below, above;
    for (int i = 1; i < kScan; ++i) {
        const double a = top * i / kScan;
        if (!scd_at(p, g, tol, fixed, a).feasible) continue;
        if (a < best_a) below = a;
        else if (!above) above = a;
    }
    OpaSolution best = first;
    auto consider = [&](double a) {
        OpaSolution s = scd_at(p, g, tol, fixed, a);
        if (s.feasible && (!best.feasible || s.objective > best.objective)) best = std::move(s);
    };
    auto edge = [&](double ok, double bad) {
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (ok + bad);
            (scd_at(p, g, tol, fixed, mid).feasible ? ok : bad) = mid;
        }
        consider(ok);
    };
    if (below) edge(*below, std::min(best_a, *below + top / kScan));
    if (above) edge(*above, std::max(best_a, *above - top / kScan));
    return best;
}

ScdKkt scd_kkt(const SystemParams& p, const ChannelRealization& g, const OpaSolution& sol) {
    ScdKkt k;
    const ScdDerived d = scd_derived(p, g, sol.a_n);
    const double w = p.effective_omega();
    const double d0 = g.rho_sr * sol.p_com + p.n0;
    const double denom = d0 + g.rho_li * w * sol.p_sen;
    const double grad = p.delta * g.rho_rr * d0 / (denom * denom);
    const double decode_cap = d.l2 > 0.0 ? (sol.p_com / d.theta_prime - p.n0) / d.l2 : kBig;
    if (sol.p_sen >= decode_cap * (1.0 - 1e-9) && decode_cap <= p.p_max)
        k.lambda11 = grad / (d.l2 * d.theta_prime);
    else
        k.lambda13 = grad;
    k.multipliers_nonnegative = k.lambda11 >= 0.0 && k.lambda12 >= 0.0 && k.lambda13 >= 0.0;
    const double big_lambda = k.lambda11 * d.l2 * d.theta_prime - k.lambda12 + k.lambda13;
    if (g.rho_li * w > 0.0 && big_lambda > 0.0) {
        const double v = (std::sqrt(p.delta * g.rho_rr * d0 / big_lambda) - d0) / (g.rho_li * w);
        k.p_sen_closed_form = std::max(0.0, v);
    } else {
        k.p_sen_closed_form = kNaN;
    }
    return k;
}

// ---------------------------------------------------------------- CCD

namespace {

// Surrogate maximum over (P_com, P_sen) at fixed a_n. For fixed a_n the
// surrogate is non-decreasing in both powers, the feasible P_sen set is an
// interval and the P_com ceiling grows with P_sen, so the top of the interval
// is optimal; ties are broken toward the smallest P_sen.
PowerPoint ccd_powers(const SystemParams& p, const ChannelRealization& g, double a,
                      const FixedVariables& fixed) {
    PowerPoint pt;
    const Thetas th = thetas(p, a);
    if (!th.ok) {
        pt.reason = "a_f > a_n gamma_th_f";
        return pt;
    }
    if (!(g.rho_sr > 0.0)) {
        pt.reason = "rho_SR > 0";
        return pt;
    }
    const double pmax = p.p_max;
    const double n0 = p.n0;
    const double kappa = p.kappa;
    const double w = p.effective_omega();
    const double l2 = p.delta * g.rho_rr + w * g.rho_li;
    const double l4 = p.delta * g.rho_rr - kappa * w * g.rho_li;
    const double tp = th.t / g.rho_sr;
    const double lc = std::max({floor_for(n0, th.t1, g.rho_sdf), floor_for(n0, th.t, g.rho_sdn)});
    const double ls = std::max({floor_for(n0, th.t1, g.rho_rdf), floor_for(n0, th.t, g.rho_rdn)});

    // P_com ceiling given P_sen (sensing floor and budget).
    auto upper_com = [&](double ps) {
        if (kappa <= 0.0) return pmax;
        return std::min(pmax, (l4 * ps - kappa * n0) / (kappa * g.rho_sr));
    };
    // P_com floor given P_sen (direct links and relay decoding).
    auto lower_com = [&](double ps) { return std::max(lc, tp * (l2 * ps + n0)); };
    const double saturation = (l2 > 0.0 && g.rho_rdn > 0.0) ? n0 * g.rho_sr / (l2 * g.rho_rdn) : kBig;

    if (lc > pmax) {
        pt.reason = "C1 <= p_max (direct-link P_com floor)";
        return pt;
    }
    if (kappa > 0.0 && !(l4 > 0.0)) {
        pt.reason = "sense >= kappa (l4 <= 0)";
        return pt;
    }

    if (fixed.p_com) {
        const double pc = *fixed.p_com;
        if (pc < lc * (1.0 - 1e-12) || pc > pmax) {
            pt.reason = "fixed P_com outside [C1, p_max]";
            return pt;
        }
        double lo = ls;
        double hi = pmax;
        if (l2 > 0.0) hi = std::min(hi, (pc / tp - n0) / l2);
        else if (pc < tp * n0) hi = -kBig;
        if (kappa > 0.0) lo = std::max(lo, kappa * (g.rho_sr * pc + n0) / l4);
        if (fixed.p_sen) lo = hi = *fixed.p_sen;  // both pinned: just check below
        if (lo > hi * (1.0 + 1e-12) || hi < 0.0) {
            pt.reason = "no P_sen satisfies relay decoding and sensing at fixed P_com";
            return pt;
        }
        pt.feasible = true;
        pt.p_com = pc;
        pt.p_sen = std::clamp(saturation, lo, std::max(lo, hi));
        return pt;
    }

    double s_lo = ls;
    double s_hi = pmax;
    if (kappa > 0.0) {
        s_lo = std::max(s_lo, kappa * (g.rho_sr * lc + n0) / l4);
        const double slope = l4 - kappa * th.t * l2;
        if (!(slope > 0.0)) {
            pt.reason = "sense >= kappa together with relay decoding (l4 <= kappa theta* l2)";
            return pt;
        }
        s_lo = std::max(s_lo, kappa * n0 * (th.t + 1.0) / slope);
    }
    if (l2 > 0.0) s_hi = std::min(s_hi, (pmax / tp - n0) / l2);
    else if (tp * n0 > pmax) s_hi = -kBig;

    if (fixed.p_sen) {
        const double ps = *fixed.p_sen;
        if (ps < s_lo * (1.0 - 1e-12) || ps > s_hi * (1.0 + 1e-12)) {
            pt.reason = "fixed P_sen outside the feasible interval";
            return pt;
        }
        pt.feasible = true;
        pt.p_sen = ps;
        pt.p_com = std::max(lower_com(ps), upper_com(ps));
        pt.p_com = std::min(pt.p_com, upper_com(ps));
        return pt;
    }

    if (s_lo > s_hi) {
        pt.reason = "empty (P_com, P_sen) region at this a_n";
        return pt;
    }
    const double pc = upper_com(s_hi);
    double needed = s_lo;
    if (kappa > 0.0) needed = std::max(needed, (kappa * g.rho_sr * pc + kappa * n0) / l4);
    pt.feasible = true;
    pt.p_com = pc;
    pt.p_sen = std::clamp(std::max(saturation, needed), s_lo, s_hi);
    return pt;
}

struct CcdCandidate {
    bool feasible = false;
    double a = 0.0, p_com = 0.0, p_sen = 0.0, value = -kBig;
};

CcdCandidate ccd_value(const SystemParams& p, const ChannelRealization& g, double a,
                       const FixedVariables& fixed) {
    CcdCandidate c;
    c.a = a;
    if (!(a > 0.0 && a < 0.5)) return c;
    const PowerPoint pt = ccd_powers(p, g, a, fixed);
    if (!pt.feasible) return c;
    c.feasible = true;
    c.p_com = pt.p_com;
    c.p_sen = pt.p_sen;
    c.value = ccd_objective(p, g, pt.p_com, pt.p_sen, a);
    return c;
}

// Global search of V(a) = max over powers, over a in (0, 0.5 - sigma].
CcdCandidate polish_a_n(const SystemParams& p, const ChannelRealization& g, const OpaTolerances& tol,
                        const FixedVariables& fixed) {
    const double a_max = 0.5 - tol.sigma;
    const double a_min = 1e-9;
    const int n = std::max(16, tol.an_scan_points);
    std::vector<double> grid;
    grid.reserve(n);
    const int half = n / 2;
    for (int i = 0; i < half; ++i)
        grid.push_back(a_min * std::pow(a_max / a_min, static_cast<double>(i) / (half - 1)));
    for (int i = 0; i < n - half; ++i)
        grid.push_back(a_min + (a_max - a_min) * static_cast<double>(i) / (n - half - 1));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<CcdCandidate> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = ccd_value(p, g, grid[i], fixed);

    std::size_t best = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (vals[i].feasible && (best == grid.size() || vals[i].value > vals[best].value)) best = i;
    if (best == grid.size()) return {};
    CcdCandidate top = vals[best];

    auto consider = [&](const CcdCandidate& c) {
        if (c.feasible && c.value > top.value) top = c;
    };

    // Feasibility edges next to the best cell: bisect onto the boundary.
    for (int side : {-1, 1}) {
        const long j = static_cast<long>(best) + side;
        if (j < 0 || j >= static_cast<long>(grid.size()) || vals[j].feasible) continue;
        double in = grid[best];
        double out = grid[j];
        for (int it = 0; it < 200 && std::abs(in - out) > 1e-16 * in; ++it) {
            const double mid = 0.5 * (in + out);
            if (ccd_value(p, g, mid, fixed).feasible) in = mid;
            else out = mid;
        }
        consider(ccd_value(p, g, in, fixed));
    }

    // Golden-section refinement on the bracketing cells.
    double lo = grid[best > 0 ? best - 1 : 0];
    double hi = grid[std::min(best + 1, grid.size() - 1)];
    auto value = [&](double a) {
        const CcdCandidate c = ccd_value(p, g, a, fixed);
        consider(c);
        return c.feasible ? c.value : -kBig;
    };
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = value(x1);
    double f2 = value(x2);
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = value(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = value(x1);
        }
    }
    return top;
}

}  // namespace

OpaSolution solve_ccd(const SystemParams& p, const ChannelRealization& g, const OpaTolerances& tol,
                      const FixedVariables& fixed) {
    check_gains(g);
    const double a_cap = 0.5 - tol.sigma;
    double a = fixed.a_n ? *fixed.a_n : std::min(a_n_dagger(p.gamma_th_f, p.gamma_th_n), a_cap);

    OpaSolution sol;
    CcdCandidate cur = ccd_value(p, g, a, fixed);
    std::string first_reason;
    if (!cur.feasible) {
        first_reason = ccd_powers(p, g, a, fixed).reason;
        if (!(a > 0.0 && a < 0.5)) first_reason = "0 < a_n < a_f";
    }

    // Alternating loop: powers at fixed a_n, then a_n down to its floor C2.
    double prev = -kBig;
    int sweeps = 0;
    if (cur.feasible) {
        for (int sweep = 1; sweep <= tol.max_sweeps; ++sweep) {
            sweeps = sweep;
            double next_a = a;
            if (!fixed.a_n) {
                const CcdDerived d = ccd_derived(p, g, cur.p_com, cur.p_sen, a);
                next_a = std::min(d.c2, a_cap);
            }
            double obj = cur.value;
            if (next_a != a && next_a > 0.0) {
                const double moved = ccd_objective(p, g, cur.p_com, cur.p_sen, next_a);
                const bool still_ok =
                    ccd_violations(p, g, cur.p_com, cur.p_sen, next_a, tol.feas_slack).empty();
                const CcdCandidate re = ccd_value(p, g, next_a, fixed);
                if (still_ok && re.feasible && re.value >= moved) {
                    a = next_a;
                    cur = re;
                    obj = re.value;
                }
            }
            sol.trace.push_back(obj);
            if (std::abs(obj - prev) <= tol.rel_tol * std::abs(obj)) break;
            prev = obj;
        }
    }

    if (!fixed.a_n) {
        const CcdCandidate polished = polish_a_n(p, g, tol, fixed);
        if (polished.feasible && (!cur.feasible || polished.value > cur.value)) {
            cur = polished;
            sol.trace.push_back(polished.value);
        }
    }
    sol.iterations = std::max(1, sweeps);

    if (!cur.feasible) {
        OpaSolution bad = infeasible(first_reason.empty() ? "no feasible a_n" : first_reason, sweeps);
        return bad;
    }
    sol.a_n = cur.a;
    sol.p_com = cur.p_com;
    sol.p_sen = cur.p_sen;
    sol.objective = cur.value;
    sol.exact_objective = ccd_exact_objective(p, g, cur.p_com, cur.p_sen, cur.a);
    return finish(sol, ccd_violations(p, g, cur.p_com, cur.p_sen, cur.a, tol.feas_slack));
}

// ---------------------------------------------------------------- grid

OpaSolution grid_oracle(Problem problem, const SystemParams& p, const ChannelRealization& g,
                        int resolution, unsigned workers, const FixedVariables& fixed, double slack) {
    if (resolution < 2) throw DomainError("grid_oracle: resolution must be at least 2");
    check_gains(g);
    auto axis_power = [&](const std::optional<double>& pin) {
        std::vector<double> v;
        if (pin) return std::vector<double>{*pin};
        for (int i = 0; i < resolution; ++i) v.push_back(p.p_max * i / (resolution - 1));
        return v;
    };
    const std::vector<double> pcs = axis_power(fixed.p_com);
    const std::vector<double> pss = axis_power(fixed.p_sen);
    std::vector<double> as;
    if (fixed.a_n) as.push_back(*fixed.a_n);
    else
        for (int k = 0; k < resolution; ++k) as.push_back(0.5 * (k + 0.5) / resolution);

    struct Best {
        bool found = false;
        double value = -kBig, pc = 0.0, ps = 0.0;
    };
    std::vector<Best> slices(as.size());
    const double w = p.effective_omega();
    parallel_for(as.size(), resolve_workers(workers), [&](std::size_t k) {
        const double a = as[k];
        const double af = 1.0 - a;
        Best best;
        if (!(a > 0.0 && a < 0.5)) return;
        for (double pc : pcs) {
            const double gc = pc / p.n0;
            const double sdf_xf = af * g.rho_sdf * gc / (a * g.rho_sdf * gc + 1.0);
            const double sdn_xf = af * g.rho_sdn * gc / (a * g.rho_sdn * gc + 1.0);
            const double sdn_xn = a * g.rho_sdn * gc;
            if (problem == Problem::CCD &&
                (below(sdf_xf, p.gamma_th_f, slack) || below(sdn_xf, p.gamma_th_f, slack) ||
                 below(sdn_xn, p.gamma_th_n, slack)))
                continue;
            for (double ps : pss) {
                const double gr = ps / p.n0;
                const double rdf_xf = af * g.rho_rdf * gr / (a * g.rho_rdf * gr + 1.0);
                const double rdn_xf = af * g.rho_rdn * gr / (a * g.rho_rdn * gr + 1.0);
                const double rdn_xn = a * g.rho_rdn * gr;
                const double x = g.rho_rr * p.delta * gr + g.rho_li * w * gr + 1.0;
                const double sr_xf = af * g.rho_sr * gc / (a * g.rho_sr * gc + x);
                const double sr_xn = a * g.rho_sr * gc / x;
                if (below(sr_xf, p.gamma_th_f, slack) || below(rdf_xf, p.gamma_th_f, slack) ||
                    below(rdn_xf, p.gamma_th_f, slack) || below(sr_xn, p.gamma_th_n, slack) ||
                    below(rdn_xn, p.gamma_th_n, slack))
                    continue;
                const double sense = p.delta * g.rho_rr * gr / (g.rho_sr * gc + g.rho_li * w * gr + 1.0);
                double value;
                if (problem == Problem::SCD) {
                    value = sense;
                } else {
                    if (below(sense, p.kappa, slack)) continue;
                    value = ccd_objective(p, g, pc, ps, a);
                }
                if (!best.found || value > best.value) best = {true, value, pc, ps};
            }
        }
        slices[k] = best;
    });

    OpaSolution sol;
    std::size_t arg = as.size();
    for (std::size_t k = 0; k < as.size(); ++k)
        if (slices[k].found && (arg == as.size() || slices[k].value > slices[arg].value)) arg = k;
    sol.iterations = 1;
    if (arg == as.size()) {
        sol.feasible = false;
        sol.objective = sol.exact_objective = kNaN;
        sol.p_com = sol.p_sen = sol.a_n = kNaN;
        sol.violated.push_back("no feasible grid point");
        return sol;
    }
    sol.feasible = true;
    sol.a_n = as[arg];
    sol.p_com = slices[arg].pc;
    sol.p_sen = slices[arg].ps;
    sol.objective = slices[arg].value;
    sol.exact_objective = problem == Problem::SCD
                              ? sol.objective
                              : ccd_exact_objective(p, g, sol.p_com, sol.p_sen, sol.a_n);
    sol.trace.push_back(sol.objective);
    return sol;
}

}  // namespace jcs
