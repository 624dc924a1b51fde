#pragma once

#include "jcs/errors.hpp"
#include "jcs/quadrature.hpp"

namespace jcs {

/// Complementary error function. Throws DomainError for non-finite z.
double erfc(double z);

/// Scaled complementary error function exp(z^2) * erfc(z), z >= 0.
double erfcx(double z);

/// K(b, c) = 2 * integral_0^inf exp(-t/b - c t^2) dt, b > 0, c >= 0.
double echo_kernel(double b, double c);

/// Principal-value exponential integral Ei(x) for x < 0.
double exp_integral_ei(double x);

/// exp(x) * E1(x) for x > 0, i.e. -exp(x) * Ei(-x) without overflow.
double scaled_e1(double x);

/// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);
/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Generalized Marcum Q of real order nu >= 0.5.
double marcum_q(double nu, double a, double b);

/// Threshold b with marcum_q(nu, a, b) == p, 0 < p < 1.
double marcum_q_inv_b(double nu, double a, double p);

}  // namespace jcs
