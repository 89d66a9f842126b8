#ifndef THINEX_SPECIAL_HPP
#define THINEX_SPECIAL_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

// Scalar helpers shared across the library: compensated summation and a
// full-precision inverse normal CDF (Wichura's AS241, rational
// approximation good to ~1 ulp over the whole open unit interval).

namespace thinex {

/// Neumaier-compensated accumulator.
template <class Real = double>
struct CompensatedSum {
    Real sum{0};
    Real comp{0};

    void add(Real v) {
        const Real t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    Real value() const { return sum + comp; }
};

namespace detail {

// AS241 PPND16 coefficient sets (central / middle / far-tail branches).
inline constexpr double kPpndA[8] = {
    3.3871328727963666080e0,  1.3314166789178437745e2, 1.9715909503065514427e3,
    1.3731693765509461125e4,  4.5921953931549871457e4, 6.7265770927008700853e4,
    3.3430575583588128105e4,  2.5090809287301226727e3};
inline constexpr double kPpndB[8] = {
    1.0,                      4.2313330701600911252e1, 6.8718700749205790830e2,
    5.3941960214247511077e3,  2.1213794301586595867e4, 3.9307895800092710610e4,
    2.8729085735721942674e4,  5.2264952788528545610e3};
inline constexpr double kPpndC[8] = {
    1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
    3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
    2.27238449892691845833e-2, 7.74545014278341407640e-4};
inline constexpr double kPpndD[8] = {
    1.0,                      2.05319162663775882187e0, 1.67638483018380384940e0,
    6.89767334985100004550e-1, 1.48103976427480074590e-1, 1.51986665636164571966e-2,
    5.47593808499534494600e-4, 1.05075007164441684324e-9};
inline constexpr double kPpndE[8] = {
    6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
    2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
inline constexpr double kPpndF[8] = {
    1.0,                      5.99832206555887937690e-1, 1.36929880922735805310e-1,
    1.48753612908506148525e-2, 7.86869131145613259100e-4, 1.84631831751005468180e-5,
    1.42151175831644588870e-7, 2.04426310338993978564e-15};

inline double ppnd_ratio(const double (&num)[8], const double (&den)[8], double r) {
    double p = num[7];
    double q = den[7];
    for (int i = 6; i >= 0; --i) {
        p = p * r + num[i];
        q = q * r + den[i];
    }
    return p / q;
}

} // namespace detail

/// Quantile of the standard normal distribution (AS241).
inline double inv_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("inv_normal_cdf: p must lie in (0,1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * detail::ppnd_ratio(detail::kPpndA, detail::kPpndB, r);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0)
        x = detail::ppnd_ratio(detail::kPpndC, detail::kPpndD, r - 1.6);
    else
        x = detail::ppnd_ratio(detail::kPpndE, detail::kPpndF, r - 5.0);
    return q < 0.0 ? -x : x;
}

/// Inverse error function, z in (-1,1).
inline double erf_inv(double z) {
    if (!(z > -1.0 && z < 1.0))
        throw std::domain_error("erf_inv: argument must lie in (-1,1)");
    if (z == 0.0) return 0.0;
    // central AS241 branch evaluated directly in z (q = -z/2), which keeps
    // full relative precision for small arguments
    if (std::abs(z) <= 0.85) {
        const double r = 0.180625 - 0.25 * z * z;
        return z * detail::ppnd_ratio(detail::kPpndA, detail::kPpndB, r) /
               (2.0 * std::sqrt(2.0));
    }
    // tail: (1-z)/2 is well conditioned once |z| > 0.85
    return -inv_normal_cdf(0.5 * (1.0 - z)) / std::sqrt(2.0);
}

/// Inverse complementary error function, q in (0,2).
inline double erfc_inv(double q) {
    if (!(q > 0.0 && q < 2.0))
        throw std::domain_error("erfc_inv: argument must lie in (0,2)");
    return -inv_normal_cdf(0.5 * q) / std::sqrt(2.0);
}

} // namespace thinex

#endif // THINEX_SPECIAL_HPP
