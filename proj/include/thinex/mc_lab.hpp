#ifndef THINEX_MC_LAB_HPP
#define THINEX_MC_LAB_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "thinex/ensembles.hpp"
#include "thinex/free_max.hpp"
#include "thinex/order_stats.hpp"

// Monte Carlo laboratory: pooled-top-N matrix maxima, empirical CDFs and
// their Kolmogorov-Smirnov distance to the analytic truncated laws.

namespace thinex {

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Right-continuous empirical CDF over a sorted sample.
class EmpiricalCDF {
public:
    explicit EmpiricalCDF(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("EmpiricalCDF: empty sample");
        std::sort(values_.begin(), values_.end());
    }

    double operator()(double x) const {
        const auto it = std::upper_bound(values_.begin(), values_.end(), x);
        return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
    }

    std::size_t size() const { return values_.size(); }
    const std::vector<double>& sorted_values() const { return values_; }

private:
    std::vector<double> values_;
};

/// View an empirical CDF as a spectral CDF (copies the sorted sample).
inline SpectralCDF to_spectral(EmpiricalCDF e) {
    return SpectralCDF(std::function<double(double)>(
        [e = std::move(e)](double x) { return e(x); }));
}

/// sup_x |E(x+-) - F(x)| over the sample points, both one-sided empirical
/// values per point.
inline double ks_distance(const EmpiricalCDF& e, const std::function<double(double)>& analytic) {
    const std::vector<double>& v = e.sorted_values();
    const double n = static_cast<double>(v.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double f = analytic(v[i]);
        worst = std::max(worst, f - static_cast<double>(i) / n);
        worst = std::max(worst, static_cast<double>(i + 1) / n - f);
    }
    return worst;
}

/// A batch of spectra drawn from one ensemble under one base seed; matrix
/// j of draw g is seeded by derive_seed(seed, g, j).
struct SampleBatch {
    EnsembleSpec spec;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> eigenvalues; // one sorted array per draw
};

inline SampleBatch sample_batch(const EnsembleSpec& spec, int count, std::uint64_t seed,
                                std::uint64_t draw_index = 0) {
    if (count < 1) throw std::invalid_argument("sample_batch: count must be >= 1");
    SampleBatch batch{spec, seed, {}};
    batch.eigenvalues.resize(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        batch.eigenvalues[static_cast<std::size_t>(j)] =
            sample_spectrum(spec, derive_seed(seed, draw_index, static_cast<std::uint64_t>(j)));
    return batch;
}

/// The N largest of the pooled k*N eigenvalues, ascending. This is the
/// spectrum of the spectral max of k same-size matrices.
inline std::vector<double> matrix_max(const std::vector<std::vector<double>>& batches) {
    if (batches.empty()) throw std::invalid_argument("matrix_max: no batches");
    const std::size_t n = batches.front().size();
    for (const auto& b : batches)
        if (b.size() != n) throw std::invalid_argument("matrix_max: size mismatch");
    std::vector<double> pool;
    pool.reserve(n * batches.size());
    for (const auto& b : batches) pool.insert(pool.end(), b.begin(), b.end());
    std::nth_element(pool.begin(), pool.end() - static_cast<std::ptrdiff_t>(n), pool.end());
    std::vector<double> top(pool.end() - static_cast<std::ptrdiff_t>(n), pool.end());
    std::sort(top.begin(), top.end());
    return top;
}

struct HistogramBin {
    double lo;
    double hi;
    double empirical_density;
    double analytic_density;
};

struct MaxSimReport {
    EnsembleSpec spec;
    int k = 1;
    int draws = 0;
    std::uint64_t seed = 0;
    double realized_r = 0.0;   // Wishart only
    double x_star = 0.0;       // analytic truncation point (k > 1)
    double upper_edge = 0.0;   // analytic upper support edge
    double ks_distance = 0.0;  // empirical max-spectrum vs truncated law
    double edge_mass = 0.0;    // empirical fraction strictly above the edge
    bool edge_deviation = false;
    double min_value = 0.0;
    double max_value = 0.0;
    std::vector<HistogramBin> histogram;
    std::vector<double> pooled; // sorted pooled max-spectrum sample
};

inline int resolve_thread_count(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("THINEX_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Simulate `draws` independent k-fold matrix maxima, pool their spectra
/// and compare against max(0, kF - (k-1)). Matrix draw (g, j) is seeded by
/// derive_seed(seed, g, j): the result is a pure function of
/// (spec, k, draws, seed) independent of the thread count.
inline MaxSimReport empirical_vs_analytic(const EnsembleSpec& spec, int k, int draws,
                                          std::uint64_t seed, int threads = 0,
                                          int histogram_bins = 60,
                                          double budget = 1e8) {
    if (k < 1) throw std::invalid_argument("empirical_vs_analytic: k must be >= 1");
    if (draws < 1) throw std::invalid_argument("empirical_vs_analytic: draws must be >= 1");
    const double cost = static_cast<double>(spec.N) * k * draws;
    if (cost > budget)
        throw resource_limit_error("empirical_vs_analytic: N*k*draws = " +
                                   std::to_string(cost) + " exceeds budget " +
                                   std::to_string(budget));

    std::vector<std::vector<double>> groups(static_cast<std::size_t>(draws));
    const int nthreads = std::min(resolve_thread_count(threads), draws);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int g = next.fetch_add(1);
            if (g >= draws) break;
            SampleBatch batch =
                sample_batch(spec, k, seed, static_cast<std::uint64_t>(g));
            groups[static_cast<std::size_t>(g)] =
                k == 1 ? std::move(batch.eigenvalues.front())
                       : matrix_max(batch.eigenvalues);
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<double> pooled;
    pooled.reserve(static_cast<std::size_t>(draws) * static_cast<std::size_t>(spec.N));
    for (auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());

    MaxSimReport rep;
    rep.spec = spec;
    rep.k = k;
    rep.draws = draws;
    rep.seed = seed;

    const ParentLaw law = spec.limit_law();
    const double kk = static_cast<double>(k);
    rep.realized_r = spec.kind == EnsembleSpec::Kind::wishart ? spec.realized_r() : 0.0;
    rep.upper_edge = law.support().hi;
    rep.x_star = k > 1 ? truncation_point(law, kk).x_star : law.support().lo;

    EmpiricalCDF ecdf(std::move(pooled));
    rep.ks_distance =
        ks_distance(ecdf, [&](double x) { return thinned_cdf_asymptotic(law, kk, x); });
    const std::vector<double>& sorted = ecdf.sorted_values();
    rep.min_value = sorted.front();
    rep.max_value = sorted.back();
    const auto above = std::upper_bound(sorted.begin(), sorted.end(), rep.upper_edge);
    rep.edge_mass = static_cast<double>(sorted.end() - above) / static_cast<double>(sorted.size());
    rep.edge_deviation = rep.edge_mass > 0.0;

    if (histogram_bins > 0) {
        const double lo = std::min(rep.x_star, rep.min_value);
        const double hi = std::max(rep.upper_edge, rep.max_value);
        const double width = (hi - lo) / histogram_bins;
        rep.histogram.resize(static_cast<std::size_t>(histogram_bins));
        const double inv_mass = 1.0 / (width * static_cast<double>(sorted.size()));
        for (int b = 0; b < histogram_bins; ++b) {
            HistogramBin& bin = rep.histogram[static_cast<std::size_t>(b)];
            bin.lo = lo + b * width;
            bin.hi = bin.lo + width;
            const auto first = std::lower_bound(sorted.begin(), sorted.end(), bin.lo);
            const auto last = b + 1 == histogram_bins
                                  ? std::upper_bound(sorted.begin(), sorted.end(), bin.hi)
                                  : std::lower_bound(sorted.begin(), sorted.end(), bin.hi);
            bin.empirical_density = static_cast<double>(last - first) * inv_mass;
            bin.analytic_density = max_density(law, kk, 0.5 * (bin.lo + bin.hi));
        }
    }
    rep.pooled = sorted;
    return rep;
}

} // namespace thinex

#endif // THINEX_MC_LAB_HPP
