#include "zetalab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "detail_math.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/kahan.hpp"

namespace zetalab {

namespace {

using detail::kLn2;
using detail::kLnPi;
using detail::kPi;

constexpr double kEps = std::numeric_limits<double>::epsilon();

Cplx pow_int_minus_s(double n, Cplx s) {
    return std::exp(-s * std::log(n));
}

double effective_tol(const PrecisionPolicy& policy, double scale) {
    return std::max(policy.abs_tol, policy.rel_tol * scale);
}

struct EmCore {
    Cplx regular;   // partial sum + half term + Bernoulli corrections
    Cplx integral;  // N^(1-s); the full term is integral/(s-1)
    double err = 0.0;
    std::int64_t terms = 0;
};

// Euler-Maclaurin machinery shared by the plain and pole-fused entry points:
//   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//           + sum_k B_{2k}/(2k)! (s)(s+1)...(s+2k-2) N^(1-s-2k) + R.
// The remainder of the truncated correction series is estimated from its
// first omitted term with the classical |s+2K+1|/(sigma+2K+1) safety factor.
EmCore em_core(Cplx s, const PrecisionPolicy& policy) {
    const double sigma = s.real();
    const double abs_t = std::abs(s.imag());

    int n_points = std::max(14, static_cast<int>(std::ceil(0.55 * abs_t)) + 14);
    for (int attempt = 0;; ++attempt) {
        const int N = n_points;
        if (static_cast<std::int64_t>(N) + detail::kBernoulliCount > policy.max_terms) {
            throw BudgetExceeded("zeta_euler_maclaurin: abscissa exceeds max_terms");
        }

        CompensatedSum<Cplx> acc;
        double cond = 0.0;
        for (int n = 1; n < N; ++n) {
            const Cplx p = pow_int_minus_s(static_cast<double>(n), s);
            acc.add(p);
            cond += std::abs(p);
        }

        const double lnN = std::log(static_cast<double>(N));
        const Cplx n_pow_1ms = std::exp((1.0 - s) * lnN);  // N^(1-s)
        const Cplx n_pow_ms = n_pow_1ms / static_cast<double>(N);
        acc.add(0.5 * n_pow_ms);

        // Correction terms; poch = s(s+1)...(s+2k-2), npow = N^(1-s-2k).
        Cplx poch = s;
        Cplx npow = n_pow_1ms / static_cast<double>(N) / static_cast<double>(N);
        const double n2 = static_cast<double>(N) * static_cast<double>(N);
        double prev_mag = std::numeric_limits<double>::infinity();
        double trunc = std::numeric_limits<double>::infinity();
        int k_used = 0;
        const double pole_mag = std::abs(s - 1.0) > 1e-300
                                    ? std::abs(n_pow_1ms) / std::abs(s - 1.0)
                                    : 0.0;
        const double tol_target =
            0.1 * effective_tol(policy, std::abs(acc.value()) + pole_mag);
        for (int k = 1; k <= detail::kBernoulliCount; ++k) {
            if (k > 1) {
                poch *= (s + static_cast<double>(2 * k - 3)) * (s + static_cast<double>(2 * k - 2));
                npow /= n2;
            }
            const Cplx term = detail::kBernoulliOverFactorial[k - 1] * poch * npow;
            const double mag = std::abs(term);
            if (mag > prev_mag) {
                // asymptotic series started diverging; stop at the smallest term
                trunc = prev_mag;
                k_used = k - 1;
                break;
            }
            acc.add(term);
            k_used = k;
            // first-omitted-term bound with the standard safety factor
            const double denom = sigma + 2.0 * k + 1.0;
            const double safety = denom > 0.0 ? std::abs(s + (2.0 * k + 1.0)) / denom : 4.0;
            trunc = mag * std::min(safety, 16.0);
            prev_mag = mag;
            if (mag < tol_target) break;
        }

        EmCore out;
        out.regular = acc.value();
        out.integral = n_pow_1ms;
        out.err = trunc + 2.0 * kEps * (cond + std::abs(acc.value()));
        out.terms = N + k_used;

        const double scale = std::abs(out.regular) + pole_mag;
        if (out.err <= effective_tol(policy, scale) || attempt >= 3) {
            return out;
        }
        n_points *= 2;
    }
}

// log of the reflection factor chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s),
// assembled in log space so large |t| cannot overflow intermediates. The
// sin factor keeps exact zeros at negative even integers.
Cplx log_reflection_factor(Cplx s) {
    return s * kLn2 + (s - 1.0) * kLnPi + detail::log_sin_pi(0.5 * s) + log_gamma(1.0 - s);
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::dirichlet: return "dirichlet";
        case Method::global_sum: return "global_sum";
        case Method::euler_maclaurin: return "euler_maclaurin";
    }
    return "unknown";
}

std::string to_string(GammaMethod m) {
    switch (m) {
        case GammaMethod::weierstrass_product: return "weierstrass_product";
        case GammaMethod::stirling_asymptotic: return "stirling_asymptotic";
    }
    return "unknown";
}

EvalResult zeta_dirichlet(ComplexPoint sp, const PrecisionPolicy& policy) {
    policy.validate();
    const double sigma = sp.sigma();
    if (!(sigma > 1.0)) {
        throw DomainError("zeta_dirichlet: requires sigma > 1");
    }
    const Cplx s = sp.value();

    // Residual after the tail correction is ~ N^-sigma/2; solve for N, then
    // verify against the relative target once the magnitude is known.
    const double tol0 = effective_tol(policy, 1.0);
    double n_guess = std::pow(2.0 * tol0, -1.0 / sigma);
    std::int64_t N = std::min<std::int64_t>(
        policy.max_terms, static_cast<std::int64_t>(std::ceil(n_guess)) + 2);
    N = std::max<std::int64_t>(N, 8);

    for (int attempt = 0;; ++attempt) {
        CompensatedSum<Cplx> acc;
        double cond = 0.0;
        for (std::int64_t n = 1; n <= N; ++n) {
            const Cplx p = pow_int_minus_s(static_cast<double>(n), s);
            acc.add(p);
            cond += std::abs(p);
        }
        const double dN = static_cast<double>(N);
        const Cplx tail = std::exp((1.0 - s) * std::log(dN)) / (s - 1.0);
        const Cplx value = acc.value() + tail;

        const double resid = 0.5 * std::pow(dN, -sigma) +
                             std::abs(s) * std::pow(dN, -sigma - 1.0) / 12.0;
        const double err = resid + 2.0 * kEps * cond;
        const double target = effective_tol(policy, std::abs(value));
        if (err <= target) {
            return {value, err, N, Method::dirichlet};
        }
        if (N >= policy.max_terms || attempt >= 2) {
            throw BudgetExceeded(
                "zeta_dirichlet: tail bound exceeds tolerance at max_terms");
        }
        const double grow = std::pow(err / target, 1.0 / sigma);
        N = std::min<std::int64_t>(
            policy.max_terms,
            static_cast<std::int64_t>(std::ceil(dN * std::max(2.0, grow))) + 2);
    }
}

EvalResult zeta_global(ComplexPoint sp, const PrecisionPolicy& policy) {
    policy.validate();
    const Cplx s = sp.value();

    // Zeros of 1 - 2^(1-s) sit at s = 1 + 2*pi*i*k/ln 2. k = 0 is the pole of
    // zeta itself; the others make the prefactor blow up without an actual
    // singularity of zeta, so evaluation there is refused instead of wrong.
    const double spacing = 2.0 * kPi / kLn2;
    const double k_near = std::nearbyint(sp.t() / spacing);
    const double dist = std::hypot(sp.sigma() - 1.0, sp.t() - k_near * spacing);
    if (dist <= policy.pole_guard_radius) {
        if (k_near == 0.0) {
            throw PoleError("zeta_global: pole at s=1");
        }
        throw PrefactorSingular(
            "zeta_global: prefactor zero near s = 1 + 2*pi*i*k/ln 2");
    }

    const Cplx two_pow = std::exp((1.0 - s) * kLn2);
    const Cplx prefactor = 1.0 / (1.0 - two_pow);

    // The rows suffer heavy cancellation: their summands peak around
    // 2^-(n+1) C(n, n/2) (k+1)^-sigma, which for sigma < 0 and t ~ 50 puts
    // the plain-double rounding floor right at the stop threshold. Extended
    // precision in the row pipeline keeps the floor three orders below it.
    using CplxL = std::complex<long double>;
    const CplxL sl(static_cast<long double>(sp.sigma()),
                   static_cast<long double>(sp.t()));

    const std::int64_t row_cap = std::min<std::int64_t>(policy.max_terms, 4000);
    std::vector<CplxL> powers;  // powers[k] = (k+1)^-s
    powers.reserve(128);

    CompensatedSum<CplxL> total;
    double cond = 0.0;
    double window_max = 0.0;
    int consecutive_small = 0;
    std::int64_t rows = 0;
    bool converged = false;

    for (std::int64_t n = 0; n < row_cap; ++n) {
        if (static_cast<std::int64_t>(powers.size()) <= n) {
            powers.push_back(std::exp(-sl * std::log(static_cast<long double>(n + 1))));
        }
        // row(n,k) = row(n,k-1) * (n-k+1)/k * (-1), seeded with the 2^-(n+1)
        // weight so the largest coefficient stays below 1/2 for every n.
        long double coef = ldexpl(1.0L, static_cast<int>(-(n + 1)));
        CompensatedSum<CplxL> row;
        double row_cond = 0.0;
        for (std::int64_t k = 0; k <= n; ++k) {
            if (k > 0) {
                coef *= -static_cast<long double>(n - k + 1) / static_cast<long double>(k);
            }
            row.add(coef * powers[static_cast<std::size_t>(k)]);
            row_cond += static_cast<double>(fabsl(coef) * std::abs(powers[static_cast<std::size_t>(k)]));
        }
        total.add(row.value());
        cond += row_cond;
        rows = n + 1;

        const double row_mag = static_cast<double>(std::abs(row.value()));
        if (row_mag < policy.abs_tol) {
            window_max = (consecutive_small == 0) ? row_mag : std::max(window_max, row_mag);
            if (++consecutive_small >= 5) {
                converged = true;
                break;
            }
        } else {
            consecutive_small = 0;
        }
    }
    if (!converged) {
        throw BudgetExceeded("zeta_global: rows did not stabilize within budget");
    }

    const Cplx value = prefactor * Cplx(static_cast<double>(total.value().real()),
                                        static_cast<double>(total.value().imag()));
    // tail of the stabilized outer sum + rounding, both scaled by the prefactor
    constexpr double kEpsL = 5.5e-20;  // extended-precision unit roundoff
    const double pref_abs = std::abs(prefactor);
    const double pref_cond = kEps * std::abs(two_pow) * pref_abs;  // relative
    double err = pref_abs * (2.0 * window_max + 2.0 * kEpsL * cond) +
                 pref_cond * std::abs(value) + policy.abs_tol * pref_abs +
                 2.0 * kEps * std::abs(value);
    return {value, err, rows, Method::global_sum};
}

EvalResult zeta_euler_maclaurin(ComplexPoint sp, const PrecisionPolicy& policy) {
    policy.validate();
    const Cplx s = sp.value();
    if (s == Cplx(1.0, 0.0)) {
        throw PoleError("zeta_euler_maclaurin: pole at s=1");
    }

    if (sp.sigma() >= -3.0) {
        const EmCore core = em_core(s, policy);
        const Cplx value = core.regular + core.integral / (s - 1.0);
        double err = core.err;
        if (std::abs(s - 1.0) < 1.0) {
            err += kEps * std::abs(core.integral / (s - 1.0));
        }
        return {value, err, core.terms, Method::euler_maclaurin};
    }

    // sigma < -3: evaluate at 1-s (well conditioned) and reflect back.
    const Cplx reflected = 1.0 - s;
    const EmCore core = em_core(reflected, policy);
    const Cplx zeta_ref = core.regular + core.integral / (reflected - 1.0);
    const Cplx log_chi = log_reflection_factor(s);
    const Cplx value = std::exp(log_chi) * zeta_ref;
    const double rel_core =
        std::abs(zeta_ref) > 0.0 ? core.err / std::abs(zeta_ref) : 0.0;
    const double err =
        std::abs(value) * (rel_core + 8.0 * kEps * (1.0 + std::abs(log_chi)));
    return {value, err, core.terms, Method::euler_maclaurin};
}

EvalResult zeta(ComplexPoint s, const PrecisionPolicy& policy) {
    if (s.sigma() >= 2.0) {
        return zeta_dirichlet(s, policy);
    }
    // Left of sigma = -2 the alternating rows pass through values so large
    // that their rounding floor sits above any workable stop threshold, so
    // the reflected summation route takes over there.
    if (s.sigma() >= -2.0 && std::abs(s.t()) <= 100.0) {
        return zeta_global(s, policy);
    }
    return zeta_euler_maclaurin(s, policy);
}

Cplx zeta_times_s_minus_one(ComplexPoint sp, const PrecisionPolicy& policy) {
    policy.validate();
    const Cplx s = sp.value();
    const EmCore core = em_core(s, policy);
    // (s-1) * [regular + N^(1-s)/(s-1)] with the pole term multiplied through
    return (s - 1.0) * core.regular + core.integral;
}

std::function<Cplx(Cplx)> make_zeta(const PrecisionPolicy& policy) {
    return [policy](Cplx z) -> Cplx {
        const ComplexPoint p = ComplexPoint::from(z);
        try {
            return zeta(p, policy).value;
        } catch (const PrefactorSingular&) {
            return zeta_euler_maclaurin(p, policy).value;
        }
    };
}

}  // namespace zetalab
