#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "thinex/pot.hpp"

using namespace thinex;

namespace {

std::vector<ParentLaw> catalog() {
    return {ParentLaw::semicircle(),   ParentLaw::marchenko_pastur(0.25),
            ParentLaw::arcsine(),      ParentLaw::free_cauchy(),
            ParentLaw::levy_smirnov(), ParentLaw::gaussian(),
            ParentLaw::exponential()};
}

std::vector<double> excess_grid(const ParentLaw& law, double u, int n) {
    const double span = law.quantile(1.0 - 1e-8) - u;
    std::vector<double> ts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ts[i] = span * i / (n - 1);
    return ts;
}

} // namespace

TEST_CASE("exceedance distribution basics", "[pot]") {
    const ParentLaw expo = ParentLaw::exponential();
    CHECK(exceedance_cdf(expo, 2.0, 2.0) == 0.0);
    CHECK(exceedance_cdf(expo, 2.0, 60.0) == Catch::Approx(1.0).margin(1e-15));
    // memorylessness: F_[u](u + s) = 1 - e^{-s}
    CHECK(exceedance_cdf(expo, 2.0, 3.0) ==
          Catch::Approx(-std::expm1(-1.0)).margin(1e-14));
    CHECK(exceedance_cdf(ParentLaw::semicircle(), 1.0, 2.0) == 1.0);
    CHECK_THROWS_AS(exceedance_cdf(expo, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(exceedance_cdf(ParentLaw::semicircle(), 2.0, 2.5), std::domain_error);
}

TEST_CASE("excess distribution basics", "[pot]") {
    const ParentLaw expo = ParentLaw::exponential();
    CHECK(excess_cdf(expo, 1.0, 0.0) == 0.0);
    for (double u : {0.0, 1.0, 5.0})
        for (double t : {0.25, 1.0, 3.0})
            CHECK(excess_cdf(expo, u, t) == Catch::Approx(-std::expm1(-t)).margin(1e-13));
    CHECK(excess_cdf(ParentLaw::semicircle(), 1.5, 0.2) ==
          Catch::Approx(thinned_cdf_asymptotic(
              ParentLaw::semicircle(), k_from_threshold(ParentLaw::semicircle(), 1.5),
              1.7)).margin(1e-14));
    CHECK_THROWS_AS(excess_cdf(expo, 1.0, -0.1), std::domain_error);
}

TEST_CASE("threshold to fraction dictionary", "[pot]") {
    const ParentLaw expo = ParentLaw::exponential();
    // F(u) = 0.9 -> k = 10
    CHECK(k_from_threshold(expo, expo.quantile(0.9)) == Catch::Approx(10.0).epsilon(1e-12));
    CHECK(threshold_from_k(expo, 10.0) == Catch::Approx(std::log(10.0)).epsilon(1e-13));
    CHECK_THROWS_AS(threshold_from_k(expo, 1.0), std::domain_error);
    CHECK_THROWS_AS(k_from_threshold(ParentLaw::semicircle(), 2.0), std::domain_error);
    CHECK_THROWS_AS(k_from_threshold(ParentLaw::semicircle(), 2.5), std::domain_error);
    CHECK(make_threshold(expo, 1.0).k_of_u == Catch::Approx(M_E).epsilon(1e-14));

    // round trip k -> u -> k
    for (const ParentLaw& law : catalog()) {
        INFO(law.name());
        for (double k : {2.0, 10.0, 1000.0}) {
            const double u = threshold_from_k(law, k);
            CHECK(k_from_threshold(law, u) == Catch::Approx(k).epsilon(1e-10));
        }
    }
}

TEST_CASE("POT equals thinning at k(u)", "[pot]") {
    {
        const ParentLaw sc = ParentLaw::semicircle();
        CHECK(pot_thinning_identity_check(sc, 1.0, excess_grid(sc, 1.0, 100)) <= 1e-14);
    }
    {
        const ParentLaw fc = ParentLaw::free_cauchy();
        CHECK(pot_thinning_identity_check(fc, 5.0, excess_grid(fc, 5.0, 100)) <= 1e-14);
    }
    {
        // u = 0 on the exponential: k(0) = 1 and both sides are 1 - e^{-t}
        const ParentLaw expo = ParentLaw::exponential();
        const auto ts = excess_grid(expo, 0.0, 100);
        CHECK(pot_thinning_identity_check(expo, 0.0, ts) <= 1e-14);
        for (double t : {0.5, 2.0})
            CHECK(excess_cdf(expo, 0.0, t) == Catch::Approx(-std::expm1(-t)).margin(1e-14));
    }
}

TEST_CASE("excess cdf is a valid cdf in t", "[pot]") {
    for (const ParentLaw& law : catalog()) {
        INFO(law.name());
        for (double q : {0.5, 0.9, 0.99}) {
            const double u = law.quantile(q);
            const auto ts = excess_grid(law, u, 200);
            double prev = -1.0;
            for (double t : ts) {
                const double v = excess_cdf(law, u, t);
                CHECK(v >= prev - 1e-15);
                CHECK((v >= 0.0 && v <= 1.0));
                prev = v;
            }
            CHECK(excess_cdf(law, u, 0.0) == 0.0);
            CHECK(prev == Catch::Approx(1.0).margin(1e-4));
        }
    }
}

TEST_CASE("excess pdf equals the thinned density", "[pot]") {
    // five-point stencil derivative of excess_cdf vs thinned_pdf_asymptotic
    for (const ParentLaw& law :
         {ParentLaw::exponential(), ParentLaw::gaussian(), ParentLaw::semicircle()}) {
        INFO(law.name());
        const double u = law.quantile(0.8);
        const double k = k_from_threshold(law, u);
        const double hi_t = law.quantile(1.0 - 1e-3) - u;
        const double h = 1e-4 * std::max(1.0, hi_t);
        for (int i = 1; i <= 8; ++i) {
            const double t = hi_t * i / 10.0;
            const auto f = [&](double tt) { return excess_cdf(law, u, tt); };
            const double fd =
                (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
            CHECK(fd == Catch::Approx(thinned_pdf_asymptotic(law, k, u + t)).margin(1e-10));
            CHECK(excess_pdf(law, u, t) ==
                  Catch::Approx(law.pdf(u + t) / law.sf(u)).epsilon(1e-14));
        }
    }
}
