#include "jcs/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

namespace jcs {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + ": argument not finite");
}

// Continued fraction for exp(z^2) erfc(z), modified Lentz. Good for z >= 2.
double erfcx_cf(double z) {
    constexpr double tiny = 1e-300;
    double f = z;
    double c = z;
    double d = 0.0;
    for (int k = 1; k < 5000; ++k) {
        const double a = 0.5 * k;
        d = z + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = z + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / (f * kSqrtPi);
}

}  // namespace

double erfc(double z) {
    if (std::isnan(z)) throw DomainError("erfc: NaN argument");
    return std::erfc(z);
}

double erfcx(double z) {
    require_finite(z, "erfcx");
    // erfcx(-z) = 2 exp(z^2) - erfcx(z); overflows to inf below about -26.6
    if (z < 0.0) return 2.0 * std::exp(z * z) - erfcx(-z);
    if (z < 2.0) return std::exp(z * z) * std::erfc(z);
    if (z > 1e8) {
        const double r = 1.0 / (z * z);
        return (1.0 - 0.5 * r + 0.75 * r * r) / (z * kSqrtPi);
    }
    return erfcx_cf(z);
}

double echo_kernel(double b, double c) {
    require_finite(b, "echo_kernel");
    require_finite(c, "echo_kernel");
    if (b <= 0.0) throw DomainError("echo_kernel: b must be positive");
    if (c < 0.0) throw DomainError("echo_kernel: c must be nonnegative");
    if (c == 0.0) return 2.0 * b;
    const double z = 1.0 / (2.0 * b * std::sqrt(c));
    if (z > 1e4) {
        // sqrt(pi/c) erfcx(z) = 2b (1 - 1/(2z^2) + 3/(4z^4) - 15/(8z^6))
        const double r = 1.0 / (z * z);
        return 2.0 * b * (1.0 + r * (-0.5 + r * (0.75 - 1.875 * r)));
    }
    return std::sqrt(std::numbers::pi / c) * erfcx(z);
}

double exp_integral_ei(double x) {
    require_finite(x, "exp_integral_ei");
    if (x >= 0.0) throw DomainError("exp_integral_ei: argument must be negative");
    // libstdc++ loses digits for large |x|; use the continued fraction there.
    if (x <= -1.0) return -std::exp(x) * scaled_e1(-x);
    return std::expint(x);
}

double scaled_e1(double x) {
    require_finite(x, "scaled_e1");
    if (x <= 0.0) throw DomainError("scaled_e1: argument must be positive");
    if (x < 1.0) return -std::exp(x) * std::expint(-x);
    // Continued fraction for exp(x) E1(x), modified Lentz.
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h;
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw DomainError("gamma_q: need a > 0, x >= 0");
    if (std::isinf(x)) return 0.0;
    return boost::math::gamma_q(a, x);
}

double gamma_p(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw DomainError("gamma_p: need a > 0, x >= 0");
    if (std::isinf(x)) return 1.0;
    return boost::math::gamma_p(a, x);
}

double marcum_q(double nu, double a, double b) {
    if (std::isnan(nu) || std::isnan(a) || std::isnan(b))
        throw DomainError("marcum_q: NaN argument");
    if (nu < 0.5) throw DomainError("marcum_q: order below 0.5");
    if (a < 0.0 || b < 0.0) throw DomainError("marcum_q: negative argument");
    if (!std::isfinite(a) || !std::isfinite(nu)) throw DomainError("marcum_q: infinite argument");
    if (b == 0.0) return 1.0;
    if (std::isinf(b)) return 0.0;

    const double x = 0.5 * a * a;
    const double y = 0.5 * b * b;
    if (x == 0.0) return gamma_q(nu, y);

    // Poisson(x) mixture of Q(nu + k, y). Truncate each side when a geometric
    // bound on the remaining Poisson mass drops below 1e-16.
    constexpr double kTail = 1e-16;
    const double log_x = std::log(x);
    auto log_w = [&](double k) { return -x + k * log_x - std::lgamma(k + 1.0); };

    const double mode = std::floor(x);
    double k_lo = mode;
    while (k_lo > 0.0) {
        const double ratio = k_lo / x;  // w_{k-1} / w_k, shrinking as k falls
        if (ratio < 1.0) {
            const double bound = std::exp(log_w(k_lo)) * ratio / (1.0 - ratio);
            if (bound < kTail) break;
        }
        k_lo -= 1.0;
    }

    // Q(nu + k_lo, y) from the library, then the stable upward recurrence
    // Q(s + 1, y) = Q(s, y) + y^s e^{-y} / Gamma(s + 1).
    double q = gamma_q(nu + k_lo, y);
    const double log_y = std::log(y);
    double log_inc = (nu + k_lo) * log_y - y - std::lgamma(nu + k_lo + 1.0);

    double lw = log_w(k_lo);
    double sum = 0.0;
    for (double k = k_lo;; k += 1.0) {
        sum += std::exp(lw) * q;
        const double ratio = x / (k + 1.0);  // w_{k+1} / w_k
        if (k >= mode && ratio < 1.0) {
            const double bound = std::exp(lw) * ratio / (1.0 - ratio);
            if (bound < kTail) break;
        }
        q += std::exp(log_inc);
        if (q > 1.0) q = 1.0;
        log_inc += log_y - std::log(nu + k + 1.0);
        lw += log_x - std::log(k + 1.0);
    }
    if (sum > 1.0) sum = 1.0;
    return sum;
}

double marcum_q_inv_b(double nu, double a, double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("marcum_q_inv_b: p must lie in (0, 1)");
    double lo = 0.0;
    double hi = std::max(1.0, a + 1.0);
    int expansions = 0;
    while (marcum_q(nu, a, hi) > p) {
        lo = hi;
        hi *= 2.0;
        if (++expansions > 200) throw ConvergenceError("marcum_q_inv_b: bracket expansion failed", hi, hi);
    }
    // log Q is smooth and keeps its slope deep in the tail
    const double log_p = std::log(p);
    auto f = [&](double b) { return std::log(marcum_q(nu, a, b)) - log_p; };
    std::uintmax_t max_iter = 200;
    const auto [l, h] = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(52),
                                                         max_iter);
    return 0.5 * (l + h);
}

}  // namespace jcs
