#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "thinex/distributions.hpp"
#include "thinex/quadrature.hpp"

using namespace thinex;

namespace {

std::vector<ParentLaw> catalog() {
    return {ParentLaw::semicircle(),   ParentLaw::marchenko_pastur(0.25),
            ParentLaw::arcsine(),      ParentLaw::free_cauchy(),
            ParentLaw::levy_smirnov(), ParentLaw::gaussian(),
            ParentLaw::exponential()};
}

double pdf_mass(const ParentLaw& law) {
    const Interval s = law.support();
    return integrate_interval([&](double x) { return law.pdf(x); }, s.lo, s.hi, 1e-12);
}

} // namespace

TEST_CASE("pdf spot values", "[distributions]") {
    CHECK(ParentLaw::semicircle().pdf(0.0) == Catch::Approx(1.0 / M_PI).epsilon(1e-15));
    CHECK(ParentLaw::semicircle().pdf(3.0) == 0.0);
    CHECK(ParentLaw::semicircle().pdf(-3.0) == 0.0);
    // density vanishes at the MP upper edge x+ = (1 + sqrt r)^2
    CHECK(ParentLaw::marchenko_pastur(0.25).pdf(2.25) == 0.0);
    CHECK(ParentLaw::free_cauchy().pdf(0.0) == Catch::Approx(1.0 / M_PI).epsilon(1e-15));
    CHECK(ParentLaw::exponential().pdf(-0.5) == 0.0);
    CHECK(ParentLaw::levy_smirnov().pdf(0.2) == 0.0);
}

TEST_CASE("cdf spot values", "[distributions]") {
    CHECK(ParentLaw::semicircle().cdf(0.0) == 0.5);
    CHECK(ParentLaw::free_cauchy().cdf(0.0) == 0.5);
    CHECK(ParentLaw::levy_smirnov().cdf(0.25) == 0.0);
    CHECK(ParentLaw::semicircle().cdf(-2.0) == 0.0);
    CHECK(ParentLaw::semicircle().cdf(2.0) == 1.0);
    CHECK(ParentLaw::marchenko_pastur(0.25).cdf(0.25) == 0.0);
    CHECK(ParentLaw::marchenko_pastur(0.25).cdf(2.25) == 1.0);
    CHECK(ParentLaw::arcsine().cdf(0.5) == Catch::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("quantile spot values", "[distributions]") {
    CHECK(ParentLaw::free_cauchy().quantile(0.5) == 0.0);
    CHECK(ParentLaw::exponential().quantile(1.0 - 1.0 / 10.0) ==
          Catch::Approx(std::log(10.0)).epsilon(1e-14));
    CHECK(ParentLaw::semicircle().quantile(0.5) == Catch::Approx(0.0).margin(1e-12));
    CHECK_THROWS_AS(ParentLaw::gaussian().quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(ParentLaw::gaussian().quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(ParentLaw::semicircle().quantile(-0.2), std::domain_error);
}

TEST_CASE("marchenko-pastur parameter validation", "[distributions]") {
    CHECK_THROWS_AS(ParentLaw::marchenko_pastur(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ParentLaw::marchenko_pastur(1.0), std::invalid_argument);
    CHECK_THROWS_AS(ParentLaw::marchenko_pastur(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(ParentLaw::from_name("nope"), std::invalid_argument);
}

TEST_CASE("normalization to 1e-9 for every law", "[distributions]") {
    for (const ParentLaw& law : catalog()) {
        INFO(law.name());
        CHECK(pdf_mass(law) == Catch::Approx(1.0).margin(1e-9));
    }
    CHECK(pdf_mass(ParentLaw::marchenko_pastur(0.5)) == Catch::Approx(1.0).margin(1e-9));
    CHECK(pdf_mass(ParentLaw::marchenko_pastur(0.9)) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("cdf is the antiderivative of pdf on random subintervals", "[distributions]") {
    std::mt19937 gen(20260811u);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    for (const ParentLaw& law : catalog()) {
        INFO(law.name());
        for (int rep = 0; rep < 12; ++rep) {
            double pa = unit(gen), pb = unit(gen);
            if (pa > pb) std::swap(pa, pb);
            if (pb - pa < 1e-3) continue;
            const double a = law.quantile(pa);
            const double b = law.quantile(pb);
            const double integral =
                integrate_finite([&](double x) { return law.pdf(x); }, a, b, 1e-12);
            CHECK(law.cdf(b) - law.cdf(a) == Catch::Approx(integral).margin(1e-9));
        }
    }
}

TEST_CASE("quantile round trips", "[distributions]") {
    for (const ParentLaw& law : catalog()) {
        INFO(law.name());
        for (double p = 0.02; p < 0.999; p += 0.0245) {
            const double x = law.quantile(p);
            CHECK(law.cdf(x) == Catch::Approx(p).margin(1e-12));
        }
        // quantile(cdf(x)) = x on interior points (composed tolerance)
        for (double p : {0.05, 0.2, 0.5, 0.8, 0.95}) {
            const double x = law.quantile(p);
            CHECK(law.quantile(law.cdf(x)) == Catch::Approx(x).margin(1e-9));
        }
    }
}

TEST_CASE("survival function complements the cdf", "[distributions]") {
    for (const ParentLaw& law : catalog()) {
        INFO(law.name());
        for (double p : {0.01, 0.1, 0.5, 0.9, 0.99, 0.9999}) {
            const double x = law.quantile(p);
            CHECK(law.sf(x) + law.cdf(x) == Catch::Approx(1.0).margin(1e-13));
        }
    }
    // tail stability: sf stays accurate where 1 - cdf would cancel
    const ParentLaw g = ParentLaw::gaussian();
    CHECK(g.sf(6.0) == Catch::Approx(0.5 * std::erfc(6.0 / std::sqrt(2.0))).epsilon(1e-14));
    const ParentLaw e = ParentLaw::exponential();
    CHECK(e.sf(40.0) == Catch::Approx(std::exp(-40.0)).epsilon(1e-14));
}

TEST_CASE("MP cdf is continuous and monotone across the bulk", "[distributions]") {
    for (double r : {0.05, 0.25, 0.5, 0.9}) {
        INFO("r = " << r);
        const ParentLaw law = ParentLaw::marchenko_pastur(r);
        const Interval s = law.support();
        double prev = 0.0;
        const int n = 4000;
        for (int i = 1; i < n; ++i) {
            const double x = s.lo + (s.hi - s.lo) * i / n;
            const double f = law.cdf(x);
            CHECK(f >= prev - 1e-14);
            prev = f;
        }
        CHECK(prev == Catch::Approx(1.0).margin(1e-5));
        // derivative of the closed form matches the density
        for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const double x = law.quantile(q);
            const double h = 1e-6;
            const double fd = (law.cdf(x + h) - law.cdf(x - h)) / (2.0 * h);
            CHECK(fd == Catch::Approx(law.pdf(x)).epsilon(1e-7));
        }
    }
}

TEST_CASE("asymptotic quantiles and their convergence", "[distributions]") {
    const ParentLaw sc = ParentLaw::semicircle();
    // x- ~ 2 - (3 pi / (2k))^(2/3)
    CHECK(sc.quantile_asymptotic(100.0) ==
          Catch::Approx(2.0 - std::pow(3.0 * M_PI / 200.0, 2.0 / 3.0)).epsilon(1e-15));
    {
        const double exact = sc.quantile(1.0 - 1e-3);
        const double asym = sc.quantile_asymptotic(1000.0);
        CHECK(std::abs(asym - exact) / std::abs(exact) < 0.02);
    }
    // Levy-Smirnov expansion (2k/pi)^2; at k = pi/2 the printed formula
    // gives exactly 1 (the operation itself guards k >= 2).
    const double ls_formula = std::pow(2.0 * (M_PI / 2.0) / M_PI, 2.0);
    CHECK(ls_formula == 1.0);
    CHECK(ParentLaw::levy_smirnov().quantile_asymptotic(2.0) ==
          Catch::Approx(std::pow(4.0 / M_PI, 2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(ParentLaw::levy_smirnov().quantile_asymptotic(1.5), std::domain_error);
    CHECK_THROWS_AS(ParentLaw::arcsine().quantile_asymptotic(100.0), std::domain_error);
    CHECK_THROWS_AS(ParentLaw::free_cauchy().quantile_asymptotic(100.0), std::domain_error);

    // relative error strictly decreasing over a decade ladder of k
    for (const ParentLaw& law :
         {ParentLaw::semicircle(), ParentLaw::marchenko_pastur(0.25),
          ParentLaw::levy_smirnov(), ParentLaw::gaussian()}) {
        INFO(law.name());
        double prev = 1e300;
        for (double k : {10.0, 100.0, 1000.0, 10000.0}) {
            const double exact = law.quantile(1.0 - 1.0 / k);
            const double rel = std::abs(law.quantile_asymptotic(k) - exact) / std::abs(exact);
            CHECK(rel < prev);
            prev = rel;
        }
    }
    // the exponential "expansion" a_k = ln k is already exact
    for (double k : {10.0, 1000.0}) {
        CHECK(ParentLaw::exponential().quantile_asymptotic(k) ==
              Catch::Approx(ParentLaw::exponential().quantile(1.0 - 1.0 / k)).epsilon(1e-13));
    }
}

TEST_CASE("domain metadata matches the attraction table", "[distributions]") {
    CHECK(ParentLaw::semicircle().domain() == AttractionDomain::weibull);
    CHECK(*ParentLaw::semicircle().tail_index() == 1.5);
    CHECK(ParentLaw::marchenko_pastur(0.25).domain() == AttractionDomain::weibull);
    CHECK(*ParentLaw::marchenko_pastur(0.25).tail_index() == 1.5);
    CHECK(*ParentLaw::arcsine().tail_index() == 0.5);
    CHECK(ParentLaw::free_cauchy().domain() == AttractionDomain::frechet);
    CHECK(*ParentLaw::free_cauchy().tail_index() == 1.0);
    CHECK(*ParentLaw::levy_smirnov().tail_index() == 0.5);
    CHECK(ParentLaw::gaussian().domain() == AttractionDomain::gumbel);
    CHECK(ParentLaw::exponential().domain() == AttractionDomain::gumbel);
    CHECK_FALSE(ParentLaw::gaussian().tail_index().has_value());
}
