#ifndef THINEX_DISTRIBUTIONS_HPP
#define THINEX_DISTRIBUTIONS_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thinex/special.hpp"

// Catalog of the spectral / classical parent laws used throughout the
// library. All closed forms; quantiles are closed-form where available and
// otherwise inverted by bracketed bisection polished with Newton steps.

namespace thinex {

enum class LawKind {
    semicircle,       // Wigner semicircle on [-2,2]
    marchenko_pastur, // rectangularity r in (0,1), support [(1-sqrt r)^2, (1+sqrt r)^2]
    arcsine,          // Beta(1/2,1/2) on [0,1]
    free_cauchy,      // spectral Cauchy on R
    levy_smirnov,     // free Levy-Smirnov on (1/4, inf)
    gaussian,         // standard normal
    exponential       // unit exponential on [0, inf)
};

enum class AttractionDomain { gumbel, frechet, weibull };

struct Interval {
    double lo;
    double hi;
};

class ParentLaw {
public:
    static ParentLaw semicircle() { return ParentLaw(LawKind::semicircle); }
    static ParentLaw marchenko_pastur(double r) {
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("marchenko_pastur: rectangularity must lie in (0,1)");
        return ParentLaw(LawKind::marchenko_pastur, r);
    }
    static ParentLaw arcsine() { return ParentLaw(LawKind::arcsine); }
    static ParentLaw free_cauchy() { return ParentLaw(LawKind::free_cauchy); }
    static ParentLaw levy_smirnov() { return ParentLaw(LawKind::levy_smirnov); }
    static ParentLaw gaussian() { return ParentLaw(LawKind::gaussian); }
    static ParentLaw exponential() { return ParentLaw(LawKind::exponential); }

    /// CLI-facing lookup by name; `r` is consumed by "mp" only.
    static ParentLaw from_name(std::string_view name, double r = 0.25) {
        if (name == "semicircle") return semicircle();
        if (name == "mp" || name == "marchenko-pastur") return marchenko_pastur(r);
        if (name == "arcsine") return arcsine();
        if (name == "free-cauchy" || name == "cauchy") return free_cauchy();
        if (name == "levy-smirnov") return levy_smirnov();
        if (name == "gaussian") return gaussian();
        if (name == "exponential") return exponential();
        throw std::invalid_argument("unknown law: " + std::string(name));
    }

    LawKind kind() const { return kind_; }
    double rectangularity() const { return r_; }

    std::string name() const {
        switch (kind_) {
            case LawKind::semicircle: return "semicircle";
            case LawKind::marchenko_pastur: return "mp";
            case LawKind::arcsine: return "arcsine";
            case LawKind::free_cauchy: return "free-cauchy";
            case LawKind::levy_smirnov: return "levy-smirnov";
            case LawKind::gaussian: return "gaussian";
            case LawKind::exponential: return "exponential";
        }
        return "?";
    }

    Interval support() const {
        constexpr double inf = std::numeric_limits<double>::infinity();
        switch (kind_) {
            case LawKind::semicircle: return {-2.0, 2.0};
            case LawKind::marchenko_pastur: return {edge_lo(), edge_hi()};
            case LawKind::arcsine: return {0.0, 1.0};
            case LawKind::free_cauchy: return {-inf, inf};
            case LawKind::levy_smirnov: return {0.25, inf};
            case LawKind::gaussian: return {-inf, inf};
            case LawKind::exponential: return {0.0, inf};
        }
        return {0.0, 0.0};
    }

    AttractionDomain domain() const {
        switch (kind_) {
            case LawKind::semicircle:
            case LawKind::marchenko_pastur:
            case LawKind::arcsine: return AttractionDomain::weibull;
            case LawKind::free_cauchy:
            case LawKind::levy_smirnov: return AttractionDomain::frechet;
            default: return AttractionDomain::gumbel;
        }
    }

    /// Tail index of the attracting (free) extreme law; empty in the Gumbel domain.
    std::optional<double> tail_index() const {
        switch (kind_) {
            case LawKind::semicircle: return 1.5;
            case LawKind::marchenko_pastur: return 1.5;
            case LawKind::arcsine: return 0.5;
            case LawKind::free_cauchy: return 1.0;
            case LawKind::levy_smirnov: return 0.5;
            default: return std::nullopt;
        }
    }

    double pdf(double x) const {
        switch (kind_) {
            case LawKind::semicircle:
                if (x <= -2.0 || x >= 2.0) return 0.0;
                return std::sqrt(4.0 - x * x) / (2.0 * M_PI);
            case LawKind::marchenko_pastur: {
                const double lo = edge_lo(), hi = edge_hi();
                if (x <= lo || x >= hi) return 0.0;
                return std::sqrt((hi - x) * (x - lo)) / (2.0 * M_PI * r_ * x);
            }
            case LawKind::arcsine:
                if (x < 0.0 || x > 1.0) return 0.0;
                return 1.0 / (M_PI * std::sqrt(x * (1.0 - x)));
            case LawKind::free_cauchy:
                return 1.0 / (M_PI * (1.0 + x * x));
            case LawKind::levy_smirnov:
                if (x <= 0.25) return 0.0;
                return std::sqrt(4.0 * x - 1.0) / (2.0 * M_PI * x * x);
            case LawKind::gaussian:
                return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
            case LawKind::exponential:
                return x < 0.0 ? 0.0 : std::exp(-x);
        }
        return 0.0;
    }

    double cdf(double x) const {
        switch (kind_) {
            case LawKind::semicircle:
                if (x <= -2.0) return 0.0;
                if (x >= 2.0) return 1.0;
                return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * M_PI) +
                       std::asin(0.5 * x) / M_PI;
            case LawKind::marchenko_pastur:
                return mp_cdf(x);
            case LawKind::arcsine:
                if (x <= 0.0) return 0.0;
                if (x >= 1.0) return 1.0;
                return 2.0 / M_PI * std::asin(std::sqrt(x));
            case LawKind::free_cauchy:
                return 0.5 + std::atan(x) / M_PI;
            case LawKind::levy_smirnov: {
                if (x <= 0.25) return 0.0;
                const double c = 2.0 / M_PI * std::acos(0.5 / std::sqrt(x)) -
                                 std::sqrt(4.0 * x - 1.0) / (2.0 * M_PI * x);
                return c < 0.0 ? 0.0 : c;
            }
            case LawKind::gaussian:
                return 0.5 * std::erfc(-x / std::sqrt(2.0));
            case LawKind::exponential:
                return x <= 0.0 ? 0.0 : -std::expm1(-x);
        }
        return 0.0;
    }

    /// Survival function 1 - cdf, evaluated without cancellation in the
    /// upper tail (the thinning fraction k(u) = 1/sf(u) lives there).
    double sf(double x) const {
        switch (kind_) {
            case LawKind::semicircle:
                return cdf(-x);
            case LawKind::free_cauchy:
                if (x > 0.0) return std::atan(1.0 / x) / M_PI;
                return 0.5 - std::atan(x) / M_PI;
            case LawKind::levy_smirnov: {
                if (x <= 0.25) return 1.0;
                const double s = 2.0 / M_PI * std::asin(0.5 / std::sqrt(x)) +
                                 std::sqrt(4.0 * x - 1.0) / (2.0 * M_PI * x);
                return s > 1.0 ? 1.0 : s;
            }
            case LawKind::gaussian:
                return 0.5 * std::erfc(x / std::sqrt(2.0));
            case LawKind::exponential:
                return x <= 0.0 ? 1.0 : std::exp(-x);
            default:
                return 1.0 - cdf(x);
        }
    }

    /// Inverse CDF. Closed forms for Cauchy / Gaussian / exponential,
    /// bracketed bisection + Newton for the remaining laws.
    double quantile(double p) const {
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("quantile: p must lie in (0,1)");
        switch (kind_) {
            case LawKind::free_cauchy:
                return std::tan(M_PI * (p - 0.5)); // == -cot(pi p)
            case LawKind::gaussian:
                return inv_normal_cdf(p);
            case LawKind::exponential:
                return -std::log1p(-p);
            default:
                return invert_cdf(p);
        }
    }

    /// Leading-order expansion of quantile(1 - 1/k) near the relevant
    /// support edge. Only the laws with a printed expansion are covered.
    double quantile_asymptotic(double k) const {
        if (!(k >= 2.0))
            throw std::domain_error("quantile_asymptotic: requires k >= 2");
        switch (kind_) {
            case LawKind::semicircle:
            case LawKind::marchenko_pastur:
                return support().hi - edge_gap_asymptotic(k);
            case LawKind::levy_smirnov: {
                const double t = 2.0 * k / M_PI;
                return t * t;
            }
            case LawKind::gaussian:
                return gaussian_centering_asymptotic(k);
            case LawKind::exponential:
                return std::log(k);
            default:
                throw std::domain_error("quantile_asymptotic: no expansion for " + name());
        }
    }

    /// Distance x_+ - F^{-1}(1-1/k) to leading order (soft-edge laws only).
    double edge_gap_asymptotic(double k) const {
        if (!(k >= 2.0))
            throw std::domain_error("edge_gap_asymptotic: requires k >= 2");
        const double base = std::pow(1.5 * M_PI / k, 2.0 / 3.0);
        switch (kind_) {
            case LawKind::semicircle:
                return base;
            case LawKind::marchenko_pastur: {
                const double sr = std::sqrt(r_);
                return base * std::pow(1.0 + sr, 4.0 / 3.0) * sr;
            }
            default:
                throw std::domain_error("edge_gap_asymptotic: no expansion for " + name());
        }
    }

    /// Asymptotic Gumbel centering sqrt(u - ln u) with k = sqrt(2 pi) e^{u/2}.
    double gaussian_centering_asymptotic(double k) const {
        const double u = 2.0 * std::log(k / std::sqrt(2.0 * M_PI));
        if (!(u > 1.0))
            throw std::domain_error("gaussian asymptotics need k > sqrt(2 pi e)");
        return std::sqrt(u - std::log(u));
    }

    /// Asymptotic Gumbel scaling sqrt(2+u-ln(2+u)) - sqrt(u-ln u).
    double gaussian_scaling_asymptotic(double k) const {
        const double u = 2.0 * std::log(k / std::sqrt(2.0 * M_PI));
        if (!(u > 1.0))
            throw std::domain_error("gaussian asymptotics need k > sqrt(2 pi e)");
        return std::sqrt(2.0 + u - std::log(2.0 + u)) - std::sqrt(u - std::log(u));
    }

private:
    explicit ParentLaw(LawKind kind, double r = 0.0) : kind_(kind), r_(r) {}

    double edge_lo() const { const double s = std::sqrt(r_); return (1.0 - s) * (1.0 - s); }
    double edge_hi() const { const double s = std::sqrt(r_); return (1.0 + s) * (1.0 + s); }

    // Closed-form MP CDF. With the principal arctan branch both arguments
    // pass through zero inside the bulk, so the expression is continuous on
    // (x-, x+) as written; endpoints are pinned to exact 0/1.
    double mp_cdf(double x) const {
        const double lo = edge_lo(), hi = edge_hi();
        if (x <= lo) return 0.0;
        if (x >= hi) return 1.0;
        const double s = std::sqrt((hi - x) * (x - lo));
        const double inv2pr = 1.0 / (2.0 * M_PI * r_);
        const double t1 = (1.0 - r_) * inv2pr *
            std::atan(((1.0 - r_) * (1.0 - r_) - x * (1.0 + r_)) / ((1.0 - r_) * s));
        const double t2 = (1.0 + r_) * inv2pr * std::atan((1.0 + r_ - x) / s);
        const double v = 0.5 + s * inv2pr + t1 - t2;
        return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    }

    // Bisection to a narrow bracket, then Newton with the closed-form PDF;
    // falls back to pure bisection whenever Newton leaves the bracket
    // (the soft edges have vanishing density and stall Newton).
    double invert_cdf(double p) const {
        const Interval sup = support();
        double lo = sup.lo;
        double hi = sup.hi;
        if (std::isinf(hi)) {
            hi = std::isinf(lo) ? 1.0 : lo + 1.0;
            while (cdf(hi) < p) hi = lo + (hi - lo) * 2.0;
        }
        if (std::isinf(lo)) {
            lo = hi - 1.0;
            while (cdf(lo) > p) lo = hi - (hi - lo) * 2.0;
        }

        constexpr double kFTol = 1e-13;
        const double width_goal = 1e-8 * std::max({1.0, std::abs(lo), std::abs(hi)});
        double x = 0.5 * (lo + hi);
        while (hi - lo > width_goal) {
            x = 0.5 * (lo + hi);
            const double fx = cdf(x);
            if (std::abs(fx - p) <= kFTol) return x;
            (fx < p ? lo : hi) = x;
        }
        x = 0.5 * (lo + hi);
        for (int it = 0; it < 5; ++it) {
            const double fx = cdf(x);
            if (std::abs(fx - p) <= kFTol) return x;
            const double dx = pdf(x);
            const double step = dx > 0.0 ? (fx - p) / dx : 0.0;
            const double xn = x - step;
            if (step == 0.0 || !(xn > lo && xn < hi)) break;
            (fx < p ? lo : hi) = x;
            x = xn;
        }
        // pure-bisection fallback down to machine width
        for (;;) {
            x = 0.5 * (lo + hi);
            if (x == lo || x == hi) break;
            const double fx = cdf(x);
            if (std::abs(fx - p) <= kFTol) return x;
            (fx < p ? lo : hi) = x;
        }
        // bracket collapsed to adjacent doubles: where the CDF slope is
        // unbounded (hard edges) no representable x meets the F-tolerance,
        // so return the endpoint that comes closest
        x = std::abs(cdf(lo) - p) <= std::abs(cdf(hi) - p) ? lo : hi;
        if (std::abs(cdf(x) - p) > 1e-12 && std::nextafter(lo, hi) != hi)
            throw std::runtime_error("quantile: inversion did not converge for " + name());
        return x;
    }

    LawKind kind_;
    double r_;
};

} // namespace thinex

#endif // THINEX_DISTRIBUTIONS_HPP
