#ifndef THINEX_TRIDIAGONAL_HPP
#define THINEX_TRIDIAGONAL_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

// Eigenvalues of a symmetric tridiagonal matrix by bisection on Sturm
// sequence counts. No eigenvectors, no deflation; robust and exactly what
// the beta-ensemble samplers need. All N eigenvalue brackets are bisected in
// lockstep so the Sturm recurrence runs as N independent lanes per sweep,
// which the compiler vectorizes.

namespace thinex {

namespace detail {

// counts[j] = #{ eigenvalues < x[j] }, via the signs of the LDL^T pivots
//   q = (d_i - x) - e_{i-1}^2 / q_prev.
inline void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                         std::span<const double> x, std::span<double> q,
                         std::span<int> counts) {
    const std::size_t n = diag.size();
    const std::size_t b = x.size();
    constexpr double kTiny = 1e-290; // zero-pivot replacement, overflow-safe
    for (std::size_t j = 0; j < b; ++j) {
        const double v = diag[0] - x[j];
        q[j] = v == 0.0 ? -kTiny : v;
        counts[j] = q[j] < 0.0 ? 1 : 0;
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double di = diag[i];
        const double e2 = off_sq[i - 1];
        for (std::size_t j = 0; j < b; ++j) {
            double v = di - x[j] - e2 / q[j];
            if (v == 0.0) v = -kTiny;
            q[j] = v;
            counts[j] += v < 0.0 ? 1 : 0;
        }
    }
}

} // namespace detail

/// All eigenvalues, ascending. `off` has size diag.size()-1.
inline std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                                   std::span<const double> off,
                                                   double rel_tol = 1e-12) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (off.size() + 1 != n)
        throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal size mismatch");
    if (n == 1) return {diag[0]};

    std::vector<double> e2(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) e2[i] = off[i] * off[i];

    // Gershgorin bounds
    double glo = diag[0], ghi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                              (i + 1 < n ? std::abs(off[i]) : 0.0);
        glo = std::min(glo, diag[i] - radius);
        ghi = std::max(ghi, diag[i] + radius);
    }
    const double pad = 1e-12 * std::max(1.0, std::max(std::abs(glo), std::abs(ghi)));
    glo -= pad;
    ghi += pad;

    std::vector<double> lo(n, glo), hi(n, ghi), mid(n), q(n);
    std::vector<int> counts(n);
    const double abs_floor = 1e-300;

    for (int iter = 0; iter < 120; ++iter) {
        double widest = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            mid[j] = 0.5 * (lo[j] + hi[j]);
            const double scale = std::max(std::abs(lo[j]), std::abs(hi[j]));
            const double width = hi[j] - lo[j];
            widest = std::max(widest, width - rel_tol * scale);
        }
        if (widest <= abs_floor) break;
        detail::sturm_counts(diag, e2, mid, q, counts);
        for (std::size_t j = 0; j < n; ++j) {
            // eigenvalue j (ascending) is below mid iff at least j+1 are
            if (counts[j] > static_cast<int>(j))
                hi[j] = mid[j];
            else
                lo[j] = mid[j];
        }
    }
    for (std::size_t j = 0; j < n; ++j) mid[j] = 0.5 * (lo[j] + hi[j]);
    std::sort(mid.begin(), mid.end()); // lockstep keeps order; sort guards ties
    return mid;
}

} // namespace thinex

#endif // THINEX_TRIDIAGONAL_HPP
