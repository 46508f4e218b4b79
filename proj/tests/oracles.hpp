#pragma once

// Independent reference machinery for the test suite. Everything here is
// deliberately primitive: plain partial sums, dense fixed-step walks, and
// constants frozen from a high-precision bignum run. None of it shares code
// with the library's adaptive evaluators, so agreement is meaningful.

#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "zetalab/types.hpp"

namespace oracle {

using zetalab::Cplx;

inline constexpr double kPiSqOver6 = 1.6449340668482264;
inline constexpr double kPi4Over90 = 1.0823232337111382;
inline constexpr double kXiHalf = 0.49712077818831411;

// Imaginary parts of the first ten nontrivial zeta zeros.
inline constexpr std::array<double, 10> kZeroOrdinates = {
    14.134725141734694, 21.022039638771555, 25.010857580145689,
    30.424876125859513, 32.93506158773919,  37.586178158825671,
    40.918719012147495, 43.327073280915,    48.00515088116716,
    49.773832477672302,
};

struct RefValue {
    double sigma;
    double t;
    double re;
    double im;
    Cplx s() const { return {sigma, t}; }
    Cplx value() const { return {re, im}; }
};

// zeta at scattered points, 17 significant digits.
inline constexpr std::array<RefValue, 9> kZetaRef = {{
    {2, 0, 1.6449340668482264, 0.0},
    {4, 0, 1.0823232337111382, 0.0},
    {0.5, 14.0, 0.022241142609993589, -0.10325812326645006},
    {-1.5, 22.2, 2.809183244148684, 10.848439675749663},
    {0.75, 3.2, 0.5925038808395834, -0.057965515799341487},
    {3.0, -7.7, 1.0534144217633065, -0.082962079413053633},
    {0.25, 45.0, 3.3048268925123742, 2.6760532157836881},
    {-6.5, 12.0, 103.14485163237178, 83.342810120399896},
    {1.0, 30.0, 0.42426477808417825, -0.48082945406920911},
}};

// principal-branch log Gamma.
inline constexpr std::array<RefValue, 6> kLogGammaRef = {{
    {0.5, 0, 0.57236494292470009, 0.0},
    {5.0, 0, 3.1780538303479456, 0.0},
    {-2.5, 3.0, -7.478236042050315, -5.7261042719103868},
    {0.25, 16.0, -24.906919339831901, 27.969371552903242},
    {10.0, -4.0, 11.983649413409498, -9.1191194180313969},
    {0.5, 10.0, -14.789024734744293, 13.03002003491109},
}};

inline constexpr std::array<RefValue, 5> kXiRef = {{
    {0.5, 0, 0.49712077818831411, 0.0},
    {0.3, 7.0, 0.15200945338940678, -0.010817164613535754},
    {2.0, 10.0, 0.02745147998953798, 0.032590930262050748},
    {-4.0, 1.0, 0.75583193333896269, -0.15472572211637515},
    {0.5, 21.0, -3.9774919877827035e-7, -2.2533928849352375e-37},
}};

// Brute-force Dirichlet partial sum with the standard integral tail. Only
// valid for sigma > 1; n_terms is the caller's problem.
inline Cplx dirichlet_partial(Cplx s, int n_terms) {
    Cplx sum{0.0, 0.0};
    for (int n = n_terms; n >= 1; --n) {  // small terms first
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    }
    const double dn = static_cast<double>(n_terms);
    sum += std::exp((1.0 - s) * std::log(dn)) / (s - 1.0);
    return sum;
}

// Fixed-step argument walk along the straight segment [a, b]. No adaptivity,
// no branch bookkeeping beyond summing principal-value quotient angles; the
// step must already be fine enough that every angle increment is small.
inline double dense_im_log_delta(const std::function<Cplx(Cplx)>& f, Cplx a,
                                 Cplx b, double step) {
    const double len = std::abs(b - a);
    const long n = std::max(1L, std::lround(std::ceil(len / step)));
    double total = 0.0;
    Cplx prev = f(a);
    for (long i = 1; i <= n; ++i) {
        const double tau = static_cast<double>(i) / static_cast<double>(n);
        const Cplx cur = f(a + tau * (b - a));
        total += std::arg(cur * std::conj(prev));
        prev = cur;
    }
    return total;
}

struct DenseWinding {
    long count;
    double residual;
};

inline DenseWinding dense_winding_rectangle(const std::function<Cplx(Cplx)>& f,
                                            double sigma_min, double sigma_max,
                                            double t_min, double t_max,
                                            double step) {
    const Cplx bl{sigma_min, t_min};
    const Cplx br{sigma_max, t_min};
    const Cplx tr{sigma_max, t_max};
    const Cplx tl{sigma_min, t_max};
    const double total = dense_im_log_delta(f, bl, br, step) +
                         dense_im_log_delta(f, br, tr, step) +
                         dense_im_log_delta(f, tr, tl, step) +
                         dense_im_log_delta(f, tl, bl, step);
    const double turns = total / (2.0 * 3.14159265358979323846);
    const long rounded = std::lround(turns);
    return {rounded, std::abs(turns - static_cast<double>(rounded))};
}

}  // namespace oracle
