#pragma once

#include <cmath>
#include <complex>

namespace zetalab {
namespace detail {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kLnPi = 1.14472988584940017414;
// Euler-Mascheroni constant
inline constexpr double kEulerGamma = 0.57721566490153286061;

// B_{2k} / (2k)! for 2k = 2..30; the natural coefficients of the
// Euler-Maclaurin correction terms.
inline constexpr double kBernoulliOverFactorial[] = {
    8.3333333333333333333e-02,   // B2/2!
    -1.3888888888888888889e-03,  // B4/4!
    3.3068783068783068783e-05,   // B6/6!
    -8.2671957671957671958e-07,  // B8/8!
    2.0876756987868098979e-08,   // B10/10!
    -5.2841901386874931848e-10,  // B12/12!
    1.3382536530684678833e-11,   // B14/14!
    -3.3896802963225828668e-13,  // B16/16!
    8.5860620562778445641e-15,   // B18/18!
    -2.1748686985580618730e-16,  // B20/20!
    5.5090028283602295152e-18,   // B22/22!
    -1.3954464685812523341e-19,  // B24/24!
    3.5347070396294674716e-21,   // B26/26!
    -8.9535174270375468504e-23,  // B28/28!
    2.2679524523376830603e-24,   // B30/30!
};
inline constexpr int kBernoulliCount = 15;

// B_{2k} / ((2k)(2k-1)) for 2k = 2..20: Stirling-series coefficients.
inline constexpr double kStirlingCoeff[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};
inline constexpr int kStirlingCount = 10;

// sin(pi x) with argument reduction at the nearest integer, so the zeros at
// integers are exact rather than ~1e-16 residue of pi's rounding.
inline double sin_pi(double x) {
    const double k = std::nearbyint(x);
    const double r = x - k;
    const double s = std::sin(kPi * r);
    return (static_cast<long long>(k) % 2 == 0) ? s : -s;
}

inline double cos_pi(double x) {
    const double k = std::nearbyint(x);
    const double r = x - k;
    const double c = std::cos(kPi * r);
    return (static_cast<long long>(k) % 2 == 0) ? c : -c;
}

// sin(pi z) for complex z with the same exactness on the real axis.
inline Cplx sin_pi(Cplx z) {
    const double x = z.real();
    const double y = z.imag();
    // sin(pi(x+iy)) = sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y)
    return Cplx(sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y));
}

// log(sin(pi z)), stable for large |Im z| where sinh/cosh overflow. Only ever
// fed to exp(), so the branch of the imaginary part is free modulo 2*pi.
inline Cplx log_sin_pi(Cplx z) {
    const double y = z.imag();
    if (std::abs(y) <= 16.0) {
        return std::log(sin_pi(z));
    }
    const Cplx i(0.0, 1.0);
    if (y > 0.0) {
        // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i),  |e^{2 i pi z}| << 1
        const Cplx small = std::exp(2.0 * i * kPi * z);
        return -i * kPi * z + std::log((small - 1.0) / (2.0 * i));
    }
    const Cplx small = std::exp(-2.0 * i * kPi * z);
    return i * kPi * z + std::log((1.0 - small) / (2.0 * i));
}

// log1p(x) - x for complex x, accurate near 0 where the direct difference
// cancels. Series for |x| < 0.5, direct otherwise.
inline Cplx log1p_minus_x(Cplx x) {
    if (std::abs(x) >= 0.5) {
        return std::log(1.0 + x) - x;
    }
    // sum_{j>=2} (-1)^{j+1} x^j / j
    Cplx acc(0.0, 0.0);
    Cplx p = x * x;
    double sign = -1.0;
    for (int j = 2; j <= 64; ++j) {
        const Cplx term = sign * p / static_cast<double>(j);
        acc += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
        p *= x;
        sign = -sign;
    }
    return acc;
}

}  // namespace detail
}  // namespace zetalab
