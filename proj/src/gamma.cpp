#include "zetalab/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail_math.hpp"
#include "zetalab/kahan.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

using detail::kEulerGamma;
using detail::kLn2;
using detail::kLnPi;
using detail::kPi;

constexpr double kEps = std::numeric_limits<double>::epsilon();

void guard_gamma_pole(Cplx s, double radius, const char* who) {
    if (s.real() > 0.25) return;
    const double nearest = std::nearbyint(s.real());
    if (nearest <= 0.0 &&
        std::hypot(s.real() - nearest, s.imag()) <= radius) {
        throw PoleError(std::string(who) + ": pole at a non-positive integer");
    }
}

// Hurwitz-style tail sum_{n>N} n^-j for integer j >= 2, via the first few
// Euler-Maclaurin corrections about N. Accurate to ~1e-16 relative for
// N >= 64.
double zeta_tail(int j, double N) {
    const double jd = static_cast<double>(j);
    const double npj = std::pow(N, -jd);
    double tail = npj * N / (jd - 1.0) - 0.5 * npj + jd / 12.0 * npj / N;
    const double j3 = jd * (jd + 1.0) * (jd + 2.0);
    tail -= j3 / 720.0 * npj / (N * N * N);
    tail += j3 * (jd + 3.0) * (jd + 4.0) / 30240.0 * npj / (N * N * N * N * N);
    return tail;
}

}  // namespace

Cplx log_gamma(Cplx s) {
    guard_gamma_pole(s, 1e-12, "log_gamma");

    // Shift into Re >= 10 where the asymptotic series is reliable.
    Cplx shift_log = 0.0;
    int shifts = 0;
    while (s.real() < 10.0) {
        shift_log += std::log(s);
        s += 1.0;
        if (++shifts > 64) {
            throw DomainError("log_gamma: argument too far left of the cut");
        }
    }

    const Cplx ls = std::log(s);
    Cplx series = 0.0;
    const Cplx inv2 = 1.0 / (s * s);
    Cplx invp = 1.0 / s;  // s^-(2k-1)
    for (int k = 0; k < detail::kStirlingCount; ++k) {
        series += detail::kStirlingCoeff[k] * invp;
        invp *= inv2;
    }
    const Cplx direct =
        (s - 0.5) * ls - s + 0.5 * (kLn2 + kLnPi) + series;
    return direct - shift_log;
}

GammaResult gamma_stirling(ComplexPoint sp, const PrecisionPolicy& policy) {
    policy.validate();
    guard_gamma_pole(sp.value(), policy.pole_guard_radius, "gamma_stirling");
    return {log_gamma(sp.value()), GammaMethod::stirling_asymptotic};
}

GammaResult gamma_weierstrass(ComplexPoint sp, const PrecisionPolicy& policy) {
    policy.validate();
    const Cplx s = sp.value();
    guard_gamma_pole(s, policy.pole_guard_radius, "gamma_weierstrass");

    const double mag = std::abs(s);
    const std::int64_t n_factors = std::max<std::int64_t>(
        64, static_cast<std::int64_t>(std::ceil(8.0 * mag)));
    if (n_factors > policy.max_terms) {
        throw BudgetExceeded("gamma_weierstrass: factor count exceeds max_terms");
    }

    // log(1/Gamma) = log s + g0 s + sum_n [log(1 + s/n) - s/n]; the factors
    // beyond n_factors contribute sum_{j>=2} (-1)^(j+1) s^j / j * tail_j
    // with tail_j the remainder of sum n^-j, which converges fast because
    // |s|/n_factors <= 1/8.
    CompensatedSum<Cplx> log_inv;
    log_inv.add(std::log(s));
    log_inv.add(kEulerGamma * s);
    for (std::int64_t n = 1; n <= n_factors; ++n) {
        const Cplx x = s / static_cast<double>(n);
        log_inv.add(detail::log1p_minus_x(x));
    }

    const double N = static_cast<double>(n_factors);
    Cplx spow = s * s;  // s^j
    double sign = -1.0;
    CompensatedSum<Cplx> tail_sum;
    for (int j = 2; j <= 64; ++j) {
        const Cplx term = sign * spow / static_cast<double>(j) * zeta_tail(j, N);
        tail_sum.add(term);
        if (std::abs(term) < 0.25 * kEps * (1.0 + std::abs(log_inv.value()))) {
            break;
        }
        spow *= s;
        sign = -sign;
    }
    log_inv.add(tail_sum.value());

    return {-log_inv.value(), GammaMethod::weierstrass_product};
}

namespace {

// sin(x)/x by series; only used for |x| < 0.1 where five terms give
// full double accuracy.
Cplx sinc_small(Cplx x) {
    const Cplx x2 = x * x;
    return 1.0 + x2 * (-1.0 / 6.0 + x2 * (1.0 / 120.0 +
           x2 * (-1.0 / 5040.0 + x2 * (1.0 / 362880.0))));
}

Cplx xi_prefactor_log(Cplx s) {
    return -0.5 * s * kLnPi + log_gamma(0.5 * s + 1.0);
}

}  // namespace

EvalResult xi(ComplexPoint sp, const PrecisionPolicy& policy) {
    policy.validate();
    const Cplx s = sp.value();

    // Collisions between the Gamma(s/2+1) poles and the zeta zeros at
    // s = -2m are rewritten so both factors stay finite: shift the Gamma
    // argument past the pole and trade the zeta zero for sin(pi u/2) with
    // u = s + 2m, evaluated as a sinc so u = 0 is exact.
    const long m = std::lround(-0.5 * sp.sigma());
    const Cplx u = s + 2.0 * static_cast<double>(m);
    if (m >= 1 && std::abs(u) < 0.05) {
        const EvalResult zr = zeta(ComplexPoint::from(1.0 - s), policy);
        Cplx log_main = -0.5 * s * kLnPi +
                        log_gamma(0.5 * s + 1.0 + static_cast<double>(m)) +
                        s * kLn2 + (s - 1.0) * kLnPi + log_gamma(1.0 - s);
        Cplx denom = 1.0;
        for (long j = 1; j < m; ++j) {
            denom *= 0.5 * s + static_cast<double>(j);
        }
        const double parity = (m % 2 == 0) ? 1.0 : -1.0;
        const Cplx value = std::exp(log_main) * (s - 1.0) * parity * kPi *
                           sinc_small(0.5 * kPi * u) * zr.value / denom;
        const double rel_z = zr.err_estimate / std::max(std::abs(zr.value), 1e-300);
        const double err = std::abs(value) * (rel_z + 16.0 * kEps);
        return {value, err, zr.terms_used, zr.method};
    }

    // Pole of zeta at s=1: fold (s-1) into the evaluation itself so the
    // product is smooth through the point.
    if (std::abs(s - 1.0) < 0.25) {
        const Cplx zpart = zeta_times_s_minus_one(sp, policy);
        const Cplx value = std::exp(xi_prefactor_log(s)) * zpart;
        const double err = std::abs(value) * (policy.rel_tol + 16.0 * kEps);
        return {value, err, 0, Method::euler_maclaurin};
    }

    EvalResult zr;
    try {
        zr = zeta(sp, policy);
    } catch (const PrefactorSingular&) {
        zr = zeta_euler_maclaurin(sp, policy);
    }
    const Cplx value = std::exp(xi_prefactor_log(s)) * (s - 1.0) * zr.value;
    const double rel_z = zr.err_estimate / std::max(std::abs(zr.value), 1e-300);
    const double err = std::abs(value) * (rel_z + 16.0 * kEps);
    return {value, err, zr.terms_used, zr.method};
}

std::function<Cplx(Cplx)> make_xi(const PrecisionPolicy& policy) {
    return [policy](Cplx z) { return xi(ComplexPoint::from(z), policy).value; };
}

}  // namespace zetalab
