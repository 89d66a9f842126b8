#ifndef THINEX_EXTREME_LAWS_HPP
#define THINEX_EXTREME_LAWS_HPP

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "thinex/order_stats.hpp"

// The six limiting extreme CDFs (classical and free/POT), their generalized
// Pareto identifications, the centering/scaling recipes per attraction
// domain, convergence of rescaled thinned CDFs, and the exponentiation
// bridge between the classical and free families.

namespace thinex {

enum class LimitFamily { gumbel, frechet, weibull };
enum class Calculus { classical, free };

struct LimitLaw {
    LimitFamily family;
    Calculus calculus;
    double gamma = 0.0; // tail index, unused for Gumbel

    double cdf(double x) const;
};

namespace detail {

inline void check_gamma(LimitFamily family, double gamma) {
    if (family != LimitFamily::gumbel && !(gamma > 0.0))
        throw std::invalid_argument("limit law: tail index gamma must be > 0");
}

} // namespace detail

/// Classical Fisher-Tippett-Gnedenko limit CDFs.
inline double classical_limit_cdf(LimitFamily family, double gamma, double x) {
    detail::check_gamma(family, gamma);
    switch (family) {
        case LimitFamily::gumbel:
            return std::exp(-std::exp(-x));
        case LimitFamily::frechet:
            return x <= 0.0 ? 0.0 : std::exp(-std::pow(x, -gamma));
        case LimitFamily::weibull:
            return x >= 0.0 ? 1.0 : std::exp(-std::pow(-x, gamma));
    }
    return 0.0;
}

/// Free / POT limit CDFs (truncated generalized Pareto forms).
inline double free_limit_cdf(LimitFamily family, double gamma, double x) {
    detail::check_gamma(family, gamma);
    switch (family) {
        case LimitFamily::gumbel:
            return x < 0.0 ? 0.0 : -std::expm1(-x);
        case LimitFamily::frechet:
            return x < 1.0 ? 0.0 : 1.0 - std::pow(x, -gamma);
        case LimitFamily::weibull:
            if (x < -1.0) return 0.0;
            if (x >= 0.0) return 1.0;
            return 1.0 - std::pow(-x, gamma);
    }
    return 0.0;
}

inline double LimitLaw::cdf(double x) const {
    return calculus == Calculus::classical ? classical_limit_cdf(family, gamma, x)
                                           : free_limit_cdf(family, gamma, x);
}

/// Generalized Pareto CDF G_beta; beta = 0 is the exponential limit.
inline double gpd_cdf(double beta, double x) {
    if (x <= 0.0) return 0.0;
    if (beta == 0.0) return -std::expm1(-x);
    if (beta < 0.0 && x >= -1.0 / beta) return 1.0;
    return -std::expm1(-std::log1p(beta * x) / beta);
}

/// GPD shape plus the affine pre-map z = scale * (x - shift) under which
/// the free limit CDF equals G_beta(z).
struct GPDParams {
    double beta;
    double shift;
    double scale;

    double map(double x) const { return scale * (x - shift); }
};

inline GPDParams gpd_identify(LimitFamily family, double gamma) {
    detail::check_gamma(family, gamma);
    switch (family) {
        case LimitFamily::gumbel: return {0.0, 0.0, 1.0};
        case LimitFamily::frechet: return {1.0 / gamma, 1.0, gamma};
        case LimitFamily::weibull: return {-1.0 / gamma, -1.0, gamma};
    }
    return {0.0, 0.0, 1.0};
}

inline double gpd_composed_cdf(const GPDParams& p, double x) {
    return gpd_cdf(p.beta, p.map(x));
}

enum class ScalingMode { exact_quantile, asymptotic_expansion };

/// Centering a_k and scaling b_k > 0.
struct ScalingConstants {
    double a;
    double b;
    ScalingMode mode;
};

/// Table-1 recipe keyed on the law's attraction domain:
///   Gumbel:  a = F^{-1}(1-1/k),  b = F^{-1}(1-1/(ek)) - a
///   Frechet: a = 0,              b = F^{-1}(1-1/k)
///   Weibull: a = x_+,            b = x_+ - F^{-1}(1-1/k)
/// The asymptotic mode substitutes the printed leading-order expansions.
inline ScalingConstants scaling_constants(const ParentLaw& law, double k,
                                          ScalingMode mode = ScalingMode::exact_quantile) {
    if (!(k > 1.0)) throw std::domain_error("scaling_constants: requires k > 1");
    double a = 0.0, b = 0.0;
    if (mode == ScalingMode::exact_quantile) {
        const double q = law.quantile(1.0 - 1.0 / k);
        switch (law.domain()) {
            case AttractionDomain::gumbel:
                a = q;
                b = law.quantile(1.0 - 1.0 / (M_E * k)) - a;
                break;
            case AttractionDomain::frechet:
                a = 0.0;
                b = q;
                break;
            case AttractionDomain::weibull:
                a = law.support().hi;
                b = a - q;
                break;
        }
    } else {
        switch (law.kind()) {
            case LawKind::semicircle:
            case LawKind::marchenko_pastur:
                a = law.support().hi;
                b = law.edge_gap_asymptotic(k);
                break;
            case LawKind::levy_smirnov:
                a = 0.0;
                b = law.quantile_asymptotic(k);
                break;
            case LawKind::gaussian:
                a = law.gaussian_centering_asymptotic(k);
                b = law.gaussian_scaling_asymptotic(k);
                break;
            case LawKind::exponential:
                a = std::log(k);
                b = 1.0;
                break;
            default:
                throw std::domain_error("scaling_constants: no asymptotic expansion for " +
                                        law.name());
        }
    }
    if (!(b > 0.0))
        throw std::runtime_error("scaling_constants: non-positive scaling for " + law.name());
    return {a, b, mode};
}

/// The rescaled thinned CDF F_k(a_k + b_k x) whose k -> inf limit is the
/// law's free extreme CDF.
inline double rescaled_thinned_cdf(const ParentLaw& law, double k, double x,
                                   ScalingMode mode = ScalingMode::exact_quantile) {
    const ScalingConstants sc = scaling_constants(law, k, mode);
    return thinned_cdf_asymptotic(law, k, sc.a + sc.b * x);
}

/// Table-2 assignment: the free limit each catalog law converges to.
inline LimitLaw assigned_free_limit(const ParentLaw& law) {
    switch (law.domain()) {
        case AttractionDomain::weibull:
            return {LimitFamily::weibull, Calculus::free, *law.tail_index()};
        case AttractionDomain::frechet:
            return {LimitFamily::frechet, Calculus::free, *law.tail_index()};
        case AttractionDomain::gumbel:
            return {LimitFamily::gumbel, Calculus::free, 0.0};
    }
    throw std::domain_error("assigned_free_limit: unsupported law");
}

/// Default evaluation grid per attraction domain, covering the region where
/// the limit CDF is non-trivial.
inline std::vector<double> default_limit_grid(AttractionDomain domain, std::size_t points = 401) {
    double lo = 0.0, hi = 0.0;
    switch (domain) {
        case AttractionDomain::weibull: lo = -1.25; hi = 0.25; break;
        case AttractionDomain::frechet: lo = 1.1; hi = 50.0; break;
        case AttractionDomain::gumbel: lo = 0.0; hi = 8.0; break;
    }
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}

struct ConvergencePoint {
    double k;
    double sup_distance;
};

/// Sup-distance between the rescaled thinned CDF and the assigned free
/// limit, one row per k. Trend assertions (decreasing for power-law tails,
/// monotone for the Gaussian) are made by the callers.
inline std::vector<ConvergencePoint> limit_convergence_report(
    const ParentLaw& law, std::span<const double> k_list, std::span<const double> grid,
    ScalingMode mode = ScalingMode::exact_quantile) {
    const LimitLaw target = assigned_free_limit(law);
    std::vector<ConvergencePoint> rows;
    rows.reserve(k_list.size());
    for (const double k : k_list) {
        const ScalingConstants sc = scaling_constants(law, k, mode);
        double sup = 0.0;
        for (const double x : grid) {
            const double gap =
                std::abs(thinned_cdf_asymptotic(law, k, sc.a + sc.b * x) - target.cdf(x));
            if (gap > sup) sup = gap;
        }
        rows.push_back({k, sup});
    }
    return rows;
}

inline std::vector<ConvergencePoint> limit_convergence_report(
    const ParentLaw& law, std::span<const double> k_list,
    ScalingMode mode = ScalingMode::exact_quantile) {
    const std::vector<double> grid = default_limit_grid(law.domain());
    return limit_convergence_report(law, k_list, grid, mode);
}

/// t(x) exp(F_core(x) - 1): the corrected exponentiation relation mapping
/// the free extreme law onto the classical one. F_core is the continuous
/// branch of the free CDF with the T-step cancelled; t(x) = theta(x) in the
/// Frechet domain and 1 otherwise.
inline double exponentiation_bridge(LimitFamily family, double gamma, double x) {
    detail::check_gamma(family, gamma);
    switch (family) {
        case LimitFamily::gumbel: {
            const double core = -std::expm1(-x); // 1 - e^{-x}, all x
            return std::exp(core - 1.0);
        }
        case LimitFamily::frechet: {
            if (x <= 0.0) return 0.0; // t(x) = theta(x); core -> -inf at 0+
            const double core = 1.0 - std::pow(x, -gamma);
            return std::exp(core - 1.0);
        }
        case LimitFamily::weibull: {
            // inner theta(-x) retained: core = 1 - theta(-x)(-x)^gamma
            const double core = x >= 0.0 ? 1.0 : 1.0 - std::pow(-x, gamma);
            return std::exp(core - 1.0);
        }
    }
    return 0.0;
}

} // namespace thinex

#endif // THINEX_EXTREME_LAWS_HPP
