#pragma once

#include <cstddef>
#include <functional>
#include <limits>

namespace jcs {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::size_t max_subdivisions = 2000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t subdivisions = 0;
    std::size_t evaluations = 0;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) quadrature. hi may be +infinity, in
/// which case the interval is mapped through w = lo + u / (1 - u).
/// Throws ConvergenceError when the subdivision cap is hit.
QuadratureResult integrate_detailed(const Integrand& f, double lo, double hi,
                                    const QuadratureSpec& spec = {});

double integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec = {});

}  // namespace jcs
