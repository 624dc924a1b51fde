#include "jcs/rate.hpp"

#include "jcs/outage.hpp"
#include "jcs/sinr.hpp"
#include "jcs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jcs {

namespace {

double relay_scale(DuplexMode m) {
    switch (m) {
        case DuplexMode::FD: return 1.0;
        case DuplexMode::HD: return 0.5;
        case DuplexMode::NonCooperative: return 0.0;
    }
    return 1.0;
}

}  // namespace

AchievableRates achievable_rates(const SystemParams& params, const ChannelRealization& gains) {
    const SinrSet s = evaluate(params, gains);
    const double scale = relay_scale(params.mode);
    AchievableRates r;
    r.far.relay = scale * std::log2(1.0 + std::min({s.sr_xf, s.rdf_xf, s.rdn_xf}));
    r.far.direct = std::log2(1.0 + std::min(s.sdf_xf, s.sdn_xf));
    r.near.relay = scale * std::log2(1.0 + std::min(s.sr_xn, s.rdn_xn));
    r.near.direct = std::log2(1.0 + s.sdn_xn);
    return r;
}

QuadratureSpec rate_quadrature() {
    QuadratureSpec q;
    q.abs_tol = 1e-12;
    q.rel_tol = 1e-10;
    q.max_subdivisions = 20000;
    return q;
}

RateTerms ergodic_rate_far_terms(const SystemParams& p, const LinkVariances& v,
                                 const QuadratureSpec& spec) {
    RateTerms out;
    const double gc = p.gamma_c();
    const double gr = p.gamma_r();
    const double w_max = p.a_f / p.a_n;  // survival of the x_f SINR vanishes beyond
    const double inv_ln2 = 1.0 / std::numbers::ln2;

    if (gc > 0.0) {
        auto direct = [&](double w) {
            const double denom = p.a_f - p.a_n * w;
            if (denom <= 0.0) return 0.0;
            const double th = w / (gc * denom);
            return std::exp(-th / v.beta_sdf - th / v.beta_sdn) / (1.0 + w);
        };
        out.direct = integrate(direct, 0.0, w_max, spec) * inv_ln2;
    }

    const double scale = relay_scale(p.mode);
    if (scale > 0.0 && gc > 0.0 && gr > 0.0) {
        auto relay = [&](double w) {
            const double denom = p.a_f - p.a_n * w;
            if (denom <= 0.0) return 0.0;
            const double th_c = w / (gc * denom);
            const double th_r = w / (gr * denom);
            return relay_success(p, v, gr, th_c) *
                   std::exp(-th_r / v.beta_rdf - th_r / v.beta_rdn) / (1.0 + w);
        };
        out.relay = scale * integrate(relay, 0.0, w_max, spec) * inv_ln2;
    }
    return out;
}

namespace {

double near_relay_integrand(const SystemParams& p, const LinkVariances& v, double w) {
    const double th_c = w / (p.a_n * p.gamma_c());
    const double th_r = w / (p.a_n * p.gamma_r());
    return relay_success(p, v, p.gamma_r(), th_c) * std::exp(-th_r / v.beta_rdn) / (1.0 + w);
}

}  // namespace

RateTerms ergodic_rate_near_terms(const SystemParams& p, const LinkVariances& v,
                                  const QuadratureSpec& spec) {
    RateTerms out;
    const double gc = p.gamma_c();
    const double inv_ln2 = 1.0 / std::numbers::ln2;
    if (gc > 0.0) out.direct = scaled_e1(1.0 / (v.beta_sdn * p.a_n * gc)) * inv_ln2;

    const double scale = relay_scale(p.mode);
    if (scale > 0.0 && gc > 0.0 && p.gamma_r() > 0.0) {
        auto relay = [&](double w) { return near_relay_integrand(p, v, w); };
        out.relay = scale * integrate(relay, 0.0, kInf, spec) * inv_ln2;
    }
    return out;
}

double ergodic_rate_near_relay_truncated(const SystemParams& p, const LinkVariances& v,
                                         double w_max, const QuadratureSpec& spec) {
    auto relay = [&](double w) { return near_relay_integrand(p, v, w); };
    // decade panels keep the mass near w = 0 visible for very large w_max
    double sum = 0.0, lo = 0.0;
    for (double hi = std::min(1.0, w_max); lo < w_max; hi = std::min(hi * 10.0, w_max)) {
        sum += integrate(relay, lo, hi, spec);
        lo = hi;
    }
    return relay_scale(p.mode) * sum / std::numbers::ln2;
}

double ergodic_rate_far(const SystemParams& p, const LinkVariances& v) {
    return ergodic_rate_far_terms(p, v).total();
}

double ergodic_rate_near(const SystemParams& p, const LinkVariances& v) {
    return ergodic_rate_near_terms(p, v).total();
}

RateTerms ergodic_rate_far_approx_terms(const SystemParams& p, const LinkVariances& v) {
    return achievable_rates(p, mean_surrogate(v)).far;
}

RateTerms ergodic_rate_near_approx_terms(const SystemParams& p, const LinkVariances& v) {
    return achievable_rates(p, mean_surrogate(v)).near;
}

double ergodic_rate_far_approx(const SystemParams& p, const LinkVariances& v) {
    return ergodic_rate_far_approx_terms(p, v).total();
}

double ergodic_rate_near_approx(const SystemParams& p, const LinkVariances& v) {
    return ergodic_rate_near_approx_terms(p, v).total();
}

double ergodic_sum_approx(const SystemParams& p, const LinkVariances& v) {
    return ergodic_rate_far_approx(p, v) + ergodic_rate_near_approx(p, v);
}

}  // namespace jcs
