#ifndef THINEX_ENSEMBLES_HPP
#define THINEX_ENSEMBLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thinex/distributions.hpp"
#include "thinex/rng.hpp"
#include "thinex/tridiagonal.hpp"

// Random-matrix spectrum samplers. Production path: the Dumitriu-Edelman
// tridiagonal (Hermite) / bidiagonal (Laguerre) beta = 2 models, which have
// exactly the GUE / complex-Wishart joint eigenvalue law at O(N) storage.
// A dense sampler (full Hermitian matrix + Householder tridiagonalization)
// is kept for cross-validation at small N.

namespace thinex {

struct EnsembleSpec {
    enum class Kind { gue, wishart };

    Kind kind;
    int N;
    double r = 0.0; // Wishart rectangularity target

    static EnsembleSpec gue(int N) {
        if (N < 2) throw std::invalid_argument("EnsembleSpec: N must be >= 2");
        return {Kind::gue, N, 0.0};
    }
    static EnsembleSpec wishart(int N, double r) {
        if (N < 2) throw std::invalid_argument("EnsembleSpec: N must be >= 2");
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("EnsembleSpec: rectangularity must lie in (0,1)");
        return {Kind::wishart, N, r};
    }

    /// Number of columns of the underlying N x M Gaussian block.
    std::int64_t wishart_columns() const {
        return std::llround(static_cast<double>(N) / r);
    }
    /// Rectangularity actually realized after rounding M.
    double realized_r() const {
        return static_cast<double>(N) / static_cast<double>(wishart_columns());
    }
    /// The N -> inf spectral law at this normalization.
    ParentLaw limit_law() const {
        return kind == Kind::gue ? ParentLaw::semicircle()
                                 : ParentLaw::marchenko_pastur(realized_r());
    }
};

/// GUE(N) eigenvalues at the exp(-(N/2) Tr H^2) normalization (semicircle
/// support [-2,2] as N -> inf), via the beta = 2 tridiagonal model.
inline std::vector<double> sample_gue_spectrum(int N, std::uint64_t seed) {
    if (N < 2) throw std::invalid_argument("sample_gue_spectrum: N must be >= 2");
    RandomStream rs(seed);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(N));
    const double off_scale = 1.0 / std::sqrt(2.0 * N);
    std::vector<double> d(static_cast<std::size_t>(N));
    std::vector<double> e(static_cast<std::size_t>(N) - 1);
    for (int i = 0; i < N; ++i) d[static_cast<std::size_t>(i)] = rs.normal() * inv_sqrt_n;
    for (int i = 0; i + 1 < N; ++i)
        e[static_cast<std::size_t>(i)] = rs.chi(2.0 * (N - 1 - i)) * off_scale;
    return tridiagonal_eigenvalues(d, e);
}

/// Complex Wishart eigenvalues of (1/M) X X^dag, X an N x M standard complex
/// Gaussian block with M = round(N/r); Marchenko-Pastur support as N -> inf.
/// Uses the beta = 2 bidiagonal model B with T = B B^T.
inline std::vector<double> sample_wishart_spectrum(int N, double r, std::uint64_t seed) {
    const EnsembleSpec spec = EnsembleSpec::wishart(N, r);
    const std::int64_t M = spec.wishart_columns();
    RandomStream rs(seed);
    std::vector<double> x(static_cast<std::size_t>(N));
    std::vector<double> y(static_cast<std::size_t>(N) - 1);
    for (int i = 0; i < N; ++i)
        x[static_cast<std::size_t>(i)] = rs.chi(2.0 * static_cast<double>(M - i));
    for (int i = 0; i + 1 < N; ++i)
        y[static_cast<std::size_t>(i)] = rs.chi(2.0 * (N - 1 - i));

    std::vector<double> d(static_cast<std::size_t>(N));
    std::vector<double> e(static_cast<std::size_t>(N) - 1);
    for (int i = 0; i < N; ++i) {
        double v = x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        if (i > 0) v += y[static_cast<std::size_t>(i) - 1] * y[static_cast<std::size_t>(i) - 1];
        d[static_cast<std::size_t>(i)] = v;
    }
    for (int i = 0; i + 1 < N; ++i)
        e[static_cast<std::size_t>(i)] =
            x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];

    std::vector<double> eigs = tridiagonal_eigenvalues(d, e);
    const double scale = 1.0 / (2.0 * static_cast<double>(M));
    for (double& v : eigs) v *= scale;
    return eigs;
}

inline std::vector<double> sample_spectrum(const EnsembleSpec& spec, std::uint64_t seed) {
    return spec.kind == EnsembleSpec::Kind::gue
               ? sample_gue_spectrum(spec.N, seed)
               : sample_wishart_spectrum(spec.N, spec.r, seed);
}

namespace detail {

/// Householder reduction of a Hermitian matrix (row-major, n x n) to real
/// symmetric tridiagonal form; returns eigenvalues via Sturm bisection.
inline std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>>& a,
                                                 std::size_t n) {
    using cplx = std::complex<double>;
    const auto at = [&](std::size_t i, std::size_t j) -> cplx& { return a[i * n + j]; };

    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m0 = k + 1;
        double xnorm2 = 0.0;
        for (std::size_t i = m0; i < n; ++i) xnorm2 += std::norm(at(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;

        const cplx a0 = at(m0, k);
        const cplx phase = std::abs(a0) > 0.0 ? a0 / std::abs(a0) : cplx(1.0, 0.0);
        std::vector<cplx> v(n - m0);
        for (std::size_t i = m0; i < n; ++i) v[i - m0] = at(i, k);
        v[0] += phase * xnorm;
        double vnorm2 = 0.0;
        for (const cplx& c : v) vnorm2 += std::norm(c);
        if (vnorm2 == 0.0) continue;
        const double tau = 2.0 / vnorm2;

        // p = tau A22 v ; w = p - (tau/2)(v^dag p) v ; A22 -= v w^dag + w v^dag
        std::vector<cplx> p(n - m0, cplx(0.0, 0.0));
        for (std::size_t i = m0; i < n; ++i) {
            cplx acc(0.0, 0.0);
            for (std::size_t j = m0; j < n; ++j) acc += at(i, j) * v[j - m0];
            p[i - m0] = tau * acc;
        }
        cplx vp(0.0, 0.0);
        for (std::size_t i = 0; i < v.size(); ++i) vp += std::conj(v[i]) * p[i];
        const cplx half = 0.5 * tau * vp;
        std::vector<cplx> w(p);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= half * v[i];
        for (std::size_t i = m0; i < n; ++i)
            for (std::size_t j = m0; j < n; ++j)
                at(i, j) -= v[i - m0] * std::conj(w[j - m0]) + w[i - m0] * std::conj(v[j - m0]);

        at(m0, k) = -phase * xnorm;
        at(k, m0) = std::conj(at(m0, k));
        for (std::size_t i = m0 + 1; i < n; ++i) {
            at(i, k) = cplx(0.0, 0.0);
            at(k, i) = cplx(0.0, 0.0);
        }
    }

    std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i).real();
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(at(i + 1, i));
    return tridiagonal_eigenvalues(d, e);
}

inline constexpr int kDenseMaxN = 64;

} // namespace detail

/// Dense GUE reference sampler (cross-validation only, N <= 64).
inline std::vector<double> sample_gue_spectrum_dense(int N, std::uint64_t seed) {
    if (N < 2 || N > detail::kDenseMaxN)
        throw std::invalid_argument("sample_gue_spectrum_dense: N must be in [2,64]");
    RandomStream rs(seed);
    const std::size_t n = static_cast<std::size_t>(N);
    std::vector<std::complex<double>> a(n * n);
    const double diag_scale = 1.0 / std::sqrt(static_cast<double>(N));
    const double off_scale = 1.0 / std::sqrt(2.0 * N);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = rs.normal() * diag_scale;
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::complex<double> z(rs.normal() * off_scale, rs.normal() * off_scale);
            a[i * n + j] = z;
            a[j * n + i] = std::conj(z);
        }
    }
    return detail::hermitian_eigenvalues(a, n);
}

/// Dense Wishart reference sampler (cross-validation only, N <= 64).
inline std::vector<double> sample_wishart_spectrum_dense(int N, double r, std::uint64_t seed) {
    if (N < 2 || N > detail::kDenseMaxN)
        throw std::invalid_argument("sample_wishart_spectrum_dense: N must be in [2,64]");
    const EnsembleSpec spec = EnsembleSpec::wishart(N, r);
    const std::size_t n = static_cast<std::size_t>(N);
    const std::size_t m = static_cast<std::size_t>(spec.wishart_columns());
    RandomStream rs(seed);
    const double entry_scale = 1.0 / std::sqrt(2.0); // E|X_ij|^2 = 1
    std::vector<std::complex<double>> x(n * m);
    for (std::size_t i = 0; i < n * m; ++i)
        x[i] = std::complex<double>(rs.normal() * entry_scale, rs.normal() * entry_scale);

    std::vector<std::complex<double>> w(n * n);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t t = 0; t < m; ++t) acc += x[i * m + t] * std::conj(x[j * m + t]);
            w[i * n + j] = acc * inv_m;
            w[j * n + i] = std::conj(w[i * n + j]);
        }
    return detail::hermitian_eigenvalues(w, n);
}

} // namespace thinex

#endif // THINEX_ENSEMBLES_HPP
