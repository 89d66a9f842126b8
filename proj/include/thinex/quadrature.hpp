#ifndef THINEX_QUADRATURE_HPP
#define THINEX_QUADRATURE_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "thinex/special.hpp"

// Double-exponential (tanh-sinh family) quadrature. Handles the endpoint
// singularities of the spectral densities (inverse square roots at hard
// edges) and the algebraic tails of the heavy-tailed laws without any
// special casing at call sites.

namespace thinex {

namespace detail {

inline constexpr double kDeTmax = 6.5;      // |sinh scale| beyond which weights underflow
inline constexpr int kDeMaxLevel = 12;

// Generic double-exponential driver: `node` maps (t) -> (x, weight) and may
// signal a skipped node by returning weight 0.
template <class NodeFn>
double de_integrate(NodeFn&& node, double abs_tol) {
    double h = 1.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double result = 0.0;
    for (int level = 0; level <= kDeMaxLevel; ++level) {
        CompensatedSum<double> acc;
        // On refinement only odd multiples of h are new, but the integrand
        // evaluations are cheap closed forms; recomputing keeps this short.
        for (double t = -kDeTmax; t <= kDeTmax; t += h)
            acc.add(node(t));
        result = acc.value() * h;
        if (level > 2 && std::abs(result - prev) <= abs_tol * 0.5) return result;
        prev = result;
        h *= 0.5;
    }
    return result;
}

} // namespace detail

/// Integrate f over the finite interval [a, b]; integrable endpoint
/// singularities are fine (nodes never touch a or b exactly).
template <class F>
double integrate_finite(F&& f, double a, double b, double abs_tol = 1e-12) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw std::domain_error("integrate_finite: requires a <= b");
    }
    const double c = 0.5 * (a + b);
    const double s = 0.5 * (b - a);
    auto node = [&](double t) -> double {
        const double u = 0.5 * M_PI * std::sinh(t);
        const double ch = std::cosh(u);
        const double w = s * 0.5 * M_PI * std::cosh(t) / (ch * ch);
        if (w == 0.0 || !std::isfinite(w)) return 0.0;
        // distance to the nearer endpoint, computed without cancellation
        const double comp = s * 2.0 / (std::exp(2.0 * std::abs(u)) + 1.0); // s*(1-|tanh u|)
        if (comp == 0.0) return 0.0;
        const double x = t < 0.0 ? a + comp
                       : t > 0.0 ? b - comp
                                 : c;
        const double v = f(x);
        return std::isfinite(v) ? w * v : 0.0;
    };
    return detail::de_integrate(node, abs_tol);
}

/// Integrate f over [a, +inf).
template <class F>
double integrate_upper(F&& f, double a, double abs_tol = 1e-12) {
    auto node = [&](double t) -> double {
        const double u = 0.5 * M_PI * std::sinh(t);
        const double e = std::exp(u);
        const double w = e * 0.5 * M_PI * std::cosh(t);
        if (w == 0.0 || !std::isfinite(w)) return 0.0;
        const double v = f(a + e);
        return std::isfinite(v) ? w * v : 0.0;
    };
    return detail::de_integrate(node, abs_tol);
}

/// Integrate f over the whole real line.
template <class F>
double integrate_real_line(F&& f, double abs_tol = 1e-12) {
    auto node = [&](double t) -> double {
        const double u = 0.5 * M_PI * std::sinh(t);
        const double w = std::cosh(u) * 0.5 * M_PI * std::cosh(t);
        if (!std::isfinite(w)) return 0.0;
        const double v = f(std::sinh(u));
        return std::isfinite(v) ? w * v : 0.0;
    };
    return detail::de_integrate(node, abs_tol);
}

/// Integrate over [a, b] where either endpoint may be infinite.
template <class F>
double integrate_interval(F&& f, double a, double b, double abs_tol = 1e-12) {
    const bool lo_inf = std::isinf(a);
    const bool hi_inf = std::isinf(b);
    if (lo_inf && hi_inf) return integrate_real_line(f, abs_tol);
    if (hi_inf) return integrate_upper(f, a, abs_tol);
    if (lo_inf)
        return integrate_upper([&](double x) { return f(-x); }, -b, abs_tol);
    return integrate_finite(f, a, b, abs_tol);
}

} // namespace thinex

#endif // THINEX_QUADRATURE_HPP
