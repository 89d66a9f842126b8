#ifndef THINEX_FREE_MAX_HPP
#define THINEX_FREE_MAX_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "thinex/order_stats.hpp"
#include "thinex/quadrature.hpp"

// The free maximum law on spectral CDFs: F_{H v H'} = max(0, F + F' - 1)
// and its k-fold power max(0, kF - (k-1)), which coincides with the
// asymptotically thinned CDF.

namespace thinex {

/// A spectral CDF: either an analytic parent law or any callable
/// (e.g. an empirical CDF) evaluating x -> probability.
class SpectralCDF {
public:
    SpectralCDF(const ParentLaw& law) // NOLINT(google-explicit-constructor)
        : eval_([law](double x) { return law.cdf(x); }) {}
    explicit SpectralCDF(std::function<double(double)> eval) : eval_(std::move(eval)) {}

    double operator()(double x) const { return eval_(x); }

private:
    std::function<double(double)> eval_;
};

inline double free_max_pair(const SpectralCDF& fa, const SpectralCDF& fb, double x) {
    const double v = fa(x) + fb(x) - 1.0;
    return v > 0.0 ? v : 0.0;
}

inline double free_max_power(const SpectralCDF& f, double k, double x) {
    if (!(k >= 1.0)) throw std::domain_error("free_max_power: requires k >= 1");
    return truncated_cdf_value(f(x), k);
}

/// Truncation point x* of the k-fold maximum: F(x*) = alpha = 1 - 1/k.
struct TruncationPoint {
    double x_star;
    double k;
    double alpha;
};

inline TruncationPoint truncation_point(const ParentLaw& law, double k) {
    if (!(k > 1.0)) throw std::domain_error("truncation_point: requires k > 1");
    const double alpha = 1.0 - 1.0 / k;
    return {law.quantile(alpha), k, alpha};
}

/// Spectral density of the k-fold maximum; identical to the asymptotic
/// thinned PDF, which it delegates to.
inline double max_density(const ParentLaw& law, double k, double x) {
    return thinned_pdf_asymptotic(law, k, x);
}

/// Quadrature check of the truncated-density normalization
/// int_{x*}^{hi} k p = 1; used by tests and the CLI diagnostics.
inline double max_density_mass(const ParentLaw& law, double k, double abs_tol = 1e-10) {
    const double x_star = k > 1.0 ? truncation_point(law, k).x_star : law.support().lo;
    return integrate_interval([&](double x) { return k * law.pdf(x); }, x_star,
                              law.support().hi, abs_tol);
}

} // namespace thinex

#endif // THINEX_FREE_MAX_HPP
