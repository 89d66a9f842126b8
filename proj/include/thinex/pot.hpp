#ifndef THINEX_POT_HPP
#define THINEX_POT_HPP

#include <cmath>
#include <span>
#include <stdexcept>

#include "thinex/order_stats.hpp"

// Peaks-Over-Threshold: exceedance / excess distributions and the
// threshold <-> thinning-fraction dictionary F(u) = 1 - 1/k.

namespace thinex {

struct Threshold {
    double u;
    double k_of_u;
};

/// k(u) = 1/(1 - F(u)). Thresholds at or beyond the upper support edge are
/// rejected: everything downstream divides by 1 - F(u).
inline double k_from_threshold(const ParentLaw& law, double u) {
    if (u >= law.support().hi)
        throw std::domain_error("k_from_threshold: threshold at or above the upper support edge");
    const double s = law.sf(u);
    if (!(s > 0.0))
        throw std::domain_error("k_from_threshold: degenerate threshold, F(u) = 1");
    return 1.0 / s;
}

/// u(k) = F^{-1}(1 - 1/k), the inverse of k_from_threshold.
inline double threshold_from_k(const ParentLaw& law, double k) {
    if (!(k > 1.0)) throw std::domain_error("threshold_from_k: requires k > 1");
    return law.quantile(1.0 - 1.0 / k);
}

inline Threshold make_threshold(const ParentLaw& law, double u) {
    return {u, k_from_threshold(law, u)};
}

/// P(X < t | X > u) = (F(t) - F(u)) / (1 - F(u)), for t >= u.
inline double exceedance_cdf(const ParentLaw& law, double u, double t) {
    if (t < u) throw std::domain_error("exceedance_cdf: requires t >= u");
    const double s = law.sf(u);
    if (!(s > 0.0) || u >= law.support().hi)
        throw std::domain_error("exceedance_cdf: degenerate threshold, F(u) = 1");
    const double v = (law.cdf(t) - law.cdf(u)) / s;
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

/// Excess distribution P(X < u + t | X > u), t >= 0.
inline double excess_cdf(const ParentLaw& law, double u, double t) {
    if (t < 0.0) throw std::domain_error("excess_cdf: requires t >= 0");
    return exceedance_cdf(law, u, u + t);
}

/// Density of the excess law: p(u+t) / (1 - F(u)).
inline double excess_pdf(const ParentLaw& law, double u, double t) {
    if (t < 0.0) throw std::domain_error("excess_pdf: requires t >= 0");
    const double s = law.sf(u);
    if (!(s > 0.0) || u >= law.support().hi)
        throw std::domain_error("excess_pdf: degenerate threshold, F(u) = 1");
    return law.pdf(u + t) / s;
}

/// Max gap over the grid between the excess CDF and the thinned CDF at
/// fraction k(u); both sides are the same algebraic expression, so the
/// contract is <= 1e-14.
inline double pot_thinning_identity_check(const ParentLaw& law, double u,
                                          std::span<const double> excess_grid) {
    const double k = k_from_threshold(law, u);
    double worst = 0.0;
    for (const double t : excess_grid) {
        const double gap =
            std::abs(excess_cdf(law, u, t) - thinned_cdf_asymptotic(law, k, u + t));
        if (gap > worst) worst = gap;
    }
    return worst;
}

} // namespace thinex

#endif // THINEX_POT_HPP
