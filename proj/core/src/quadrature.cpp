#include "jcs/quadrature.hpp"

#include "jcs/errors.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <vector>

namespace jcs {

namespace {

// Kronrod 15-point abscissae (positive half) and weights, with the
// embedded 7-point Gauss weights on the odd-indexed nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(const F& f, double a, double b, std::size_t& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * kWk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        resk += kWk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    evals += 15;
    return {a, b, resk * h, std::abs((resk - resg) * h)};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
        throw DomainError("QuadratureSpec: tolerances must be positive and max_subdivisions >= 1");
}

QuadratureResult integrate_detailed(const Integrand& f, double lo, double hi,
                                    const QuadratureSpec& spec) {
    spec.validate();
    if (!std::isfinite(lo) || std::isnan(hi)) throw DomainError("integrate: bad limits");
    if (hi == lo) return {};
    if (hi < lo && !std::isinf(hi)) {
        QuadratureResult r = integrate_detailed(f, hi, lo, spec);
        r.value = -r.value;
        return r;
    }

    const bool semi_infinite = std::isinf(hi);
    auto g = [&](double x) {
        double v;
        if (semi_infinite) {
            const double one_minus = 1.0 - x;
            const double w = lo + x / one_minus;
            v = f(w) / (one_minus * one_minus);
        } else {
            v = f(x);
        }
        if (!std::isfinite(v)) throw DomainError("integrate: integrand not finite");
        return v;
    };
    const double a0 = semi_infinite ? 0.0 : lo;
    const double b0 = semi_infinite ? 1.0 : hi;

    QuadratureResult out;
    std::vector<Segment> heap;
    heap.push_back(gk15(g, a0, b0, out.evaluations));
    double total = heap.front().value;
    double err = heap.front().error;

    auto resum = [&] {
        total = 0.0;
        err = 0.0;
        for (const Segment& s : heap) {
            total += s.value;
            err += s.error;
        }
    };

    for (;;) {
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
            // The running sums drift; confirm against an exact re-sum.
            resum();
            if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) break;
        }
        if (out.subdivisions >= spec.max_subdivisions) {
            resum();
            throw ConvergenceError("integrate: subdivision cap exceeded", total, err);
        }
        std::pop_heap(heap.begin(), heap.end());
        const Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            heap.push_back(worst);
            resum();
            throw ConvergenceError("integrate: roundoff limit reached", total, err);
        }
        const Segment left = gk15(g, worst.a, mid, out.evaluations);
        const Segment right = gk15(g, mid, worst.b, out.evaluations);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
        ++out.subdivisions;
    }

    out.value = total;
    out.error = err;
    return out;
}

double integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
    return integrate_detailed(f, lo, hi, spec).value;
}

}  // namespace jcs
