#ifndef THINEX_ORDER_STATS_HPP
#define THINEX_ORDER_STATS_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "thinex/distributions.hpp"
#include "thinex/special.hpp"

// Finite-sample and asymptotic thinning of i.i.d. order statistics.
//
// All binomial machinery works in log-factorial space built by compensated
// summation of log(i); nothing here can overflow up to the m <= 1e6 guard.
// The kernels are templated on the floating type: `double` is the production
// instantiation, `long double` serves as the refined evaluator the identity
// tests compare against.

namespace thinex {

inline constexpr std::int64_t kMaxSampleSize = 1'000'000;

/// Retain the n largest of m i.i.d. draws.
struct ThinSpec {
    std::int64_t m; // sample size
    std::int64_t n; // retained largest values

    double k() const { return static_cast<double>(m) / static_cast<double>(n); }
    double alpha() const { return static_cast<double>(m - n) / static_cast<double>(m); }
};

inline void validate(const ThinSpec& spec) {
    if (spec.n < 1 || spec.m < spec.n)
        throw std::domain_error("ThinSpec: requires 1 <= n <= m");
    if (spec.m > kMaxSampleSize)
        throw std::length_error("ThinSpec: m exceeds the 1e6 evaluation guard");
}

/// Rounds n = m/k to the nearest integer; the realized ratio m/n is what
/// the asymptotic formulas must be compared against.
inline ThinSpec make_thin_spec(std::int64_t m, double k) {
    if (!(k >= 1.0)) throw std::domain_error("make_thin_spec: requires k >= 1");
    std::int64_t n = std::llround(static_cast<double>(m) / k);
    if (n < 1) n = 1;
    if (n > m) n = m;
    ThinSpec spec{m, n};
    validate(spec);
    return spec;
}

/// The asymptotically thinned pair (parent law, fraction k).
struct AsymptoticThinned {
    ParentLaw law;
    double k;
};

namespace detail {

/// log(i!) for i = 0..n, accumulated with compensated summation.
template <class Real>
class LogFactorials {
public:
    explicit LogFactorials(std::int64_t n) : table_(static_cast<std::size_t>(n) + 1) {
        table_[0] = Real(0);
        CompensatedSum<Real> acc;
        for (std::int64_t i = 1; i <= n; ++i) {
            acc.add(std::log(static_cast<Real>(i)));
            table_[static_cast<std::size_t>(i)] = acc.value();
        }
    }
    Real log_choose(std::int64_t n, std::int64_t k) const {
        return table_[static_cast<std::size_t>(n)] - table_[static_cast<std::size_t>(k)] -
               table_[static_cast<std::size_t>(n - k)];
    }

private:
    std::vector<Real> table_;
};

} // namespace detail

/// S(m,n,F) = sum_{i=1}^{m-n} C(m-1,i-1) F^(i-1) (1-F)^(m-i).
/// This is the bracket sum whose sharp 1/0 step at F = alpha drives the
/// asymptotic thinned density.
template <class Real>
Real binomial_tail_sum_t(std::int64_t m, std::int64_t n, Real F) {
    if (n < 1 || n > m) throw std::domain_error("binomial_tail_sum: requires 1 <= n <= m");
    if (m > kMaxSampleSize)
        throw std::length_error("binomial_tail_sum: m exceeds the 1e6 evaluation guard");
    if (!(F >= Real(0) && F <= Real(1)))
        throw std::domain_error("binomial_tail_sum: F must lie in [0,1]");
    if (n == m) return Real(0);
    if (F == Real(0)) return Real(1); // only the i=1 term survives
    if (F == Real(1)) return Real(0);

    const detail::LogFactorials<Real> lf(m - 1);
    const Real log_f = std::log(F);
    const Real log_1mf = std::log1p(-F);
    CompensatedSum<Real> acc;
    for (std::int64_t i = 1; i <= m - n; ++i) {
        const Real lt = lf.log_choose(m - 1, i - 1) +
                        static_cast<Real>(i - 1) * log_f +
                        static_cast<Real>(m - i) * log_1mf;
        acc.add(std::exp(lt));
    }
    const Real s = acc.value();
    return s < Real(0) ? Real(0) : (s > Real(1) ? Real(1) : s);
}

inline double binomial_tail_sum(std::int64_t m, std::int64_t n, double F) {
    return binomial_tail_sum_t<double>(m, n, F);
}

/// P(x_(i) < x) as a function of F(x): sum_{j=i}^m C(m,j) F^j (1-F)^(m-j).
template <class Real>
Real order_statistic_cdf(std::int64_t m, std::int64_t i, Real F) {
    if (i < 1 || i > m) throw std::domain_error("order_statistic_cdf: requires 1 <= i <= m");
    if (m > kMaxSampleSize)
        throw std::length_error("order_statistic_cdf: m exceeds the 1e6 evaluation guard");
    if (!(F >= Real(0) && F <= Real(1)))
        throw std::domain_error("order_statistic_cdf: F must lie in [0,1]");
    if (F == Real(0)) return Real(0);
    if (F == Real(1)) return Real(1);

    const detail::LogFactorials<Real> lf(m);
    const Real log_f = std::log(F);
    const Real log_1mf = std::log1p(-F);
    CompensatedSum<Real> acc;
    for (std::int64_t j = i; j <= m; ++j) {
        const Real lt = lf.log_choose(m, j) + static_cast<Real>(j) * log_f +
                        static_cast<Real>(m - j) * log_1mf;
        acc.add(std::exp(lt));
    }
    const Real s = acc.value();
    return s < Real(0) ? Real(0) : (s > Real(1) ? Real(1) : s);
}

/// Thinned CDF of the n largest of m as a function of F(x). Swapping the
/// double sum gives a single weighted pass:
///   (1/n) sum_{j=m-n+1}^{m} (j-m+n) C(m,j) F^j (1-F)^(m-j).
template <class Real>
Real thinned_cdf_from_cdf_value(std::int64_t m, std::int64_t n, Real F) {
    validate(ThinSpec{m, n});
    if (!(F >= Real(0) && F <= Real(1)))
        throw std::domain_error("thinned_cdf: F must lie in [0,1]");
    if (F == Real(0)) return Real(0);
    if (F == Real(1)) return Real(1);

    const detail::LogFactorials<Real> lf(m);
    const Real log_f = std::log(F);
    const Real log_1mf = std::log1p(-F);
    CompensatedSum<Real> acc;
    for (std::int64_t j = m - n + 1; j <= m; ++j) {
        const Real lt = lf.log_choose(m, j) + static_cast<Real>(j) * log_f +
                        static_cast<Real>(m - j) * log_1mf;
        acc.add(static_cast<Real>(j - m + n) * std::exp(lt));
    }
    const Real s = acc.value() / static_cast<Real>(n);
    return s < Real(0) ? Real(0) : (s > Real(1) ? Real(1) : s);
}

inline double order_cdf_iid(const ParentLaw& law, std::int64_t m, std::int64_t i, double x) {
    return order_statistic_cdf<double>(m, i, law.cdf(x));
}

inline double thinned_cdf_finite(const ThinSpec& spec, const ParentLaw& law, double x) {
    return thinned_cdf_from_cdf_value<double>(spec.m, spec.n, law.cdf(x));
}

inline double thinned_pdf_finite(const ThinSpec& spec, const ParentLaw& law, double x) {
    validate(spec);
    const double p = law.pdf(x);
    if (p == 0.0) return 0.0;
    const double bracket = 1.0 - binomial_tail_sum(spec.m, spec.n, law.cdf(x));
    const double v = spec.k() * p * bracket;
    return v < 0.0 ? 0.0 : v;
}

/// max(0, k F - (k-1)); the one expression shared by the asymptotic thinned
/// CDF, the free max law and the POT dictionary, so the cross-module
/// identities hold to the last bit.
inline double truncated_cdf_value(double F, double k) {
    const double v = k * F - (k - 1.0);
    return v > 0.0 ? v : 0.0;
}

inline double thinned_cdf_asymptotic(const ParentLaw& law, double k, double x) {
    if (!(k >= 1.0)) throw std::domain_error("thinned_cdf_asymptotic: requires k >= 1");
    return truncated_cdf_value(law.cdf(x), k);
}

inline double thinned_cdf_asymptotic(const AsymptoticThinned& t, double x) {
    return thinned_cdf_asymptotic(t.law, t.k, x);
}

/// k p(x) theta(F(x) - alpha) with the right-closed convention theta(0) = 1.
inline double thinned_pdf_asymptotic(const ParentLaw& law, double k, double x) {
    if (!(k >= 1.0)) throw std::domain_error("thinned_pdf_asymptotic: requires k >= 1");
    const double alpha = (k - 1.0) / k;
    if (law.cdf(x) < alpha) return 0.0;
    return k * law.pdf(x);
}

inline double thinned_pdf_asymptotic(const AsymptoticThinned& t, double x) {
    return thinned_pdf_asymptotic(t.law, t.k, x);
}

struct FiniteThinningDistance {
    std::int64_t m;
    std::int64_t n;
    double k_effective;
    double sup_distance;
};

/// Sup-distance between the finite-m thinned CDF and its m -> inf limit on
/// a grid, one row per requested m. Witnesses the limit numerically; the
/// monotone-in-m trend is asserted by the callers, not here.
inline std::vector<FiniteThinningDistance> finite_to_asymptotic_convergence(
    const ParentLaw& law, double k, std::span<const std::int64_t> m_list,
    std::span<const double> grid) {
    if (grid.empty())
        throw std::domain_error("finite_to_asymptotic_convergence: empty grid");
    std::vector<FiniteThinningDistance> rows;
    rows.reserve(m_list.size());
    for (const std::int64_t m : m_list) {
        const ThinSpec spec = make_thin_spec(m, k);
        const double k_eff = spec.k();
        double sup = 0.0;
        for (const double x : grid) {
            const double gap = std::abs(thinned_cdf_finite(spec, law, x) -
                                        thinned_cdf_asymptotic(law, k_eff, x));
            if (gap > sup) sup = gap;
        }
        rows.push_back({spec.m, spec.n, k_eff, sup});
    }
    return rows;
}

} // namespace thinex

#endif // THINEX_ORDER_STATS_HPP
