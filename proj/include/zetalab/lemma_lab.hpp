#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetalab/contour.hpp"
#include "zetalab/types.hpp"

namespace zetalab {

// Maximum of |f| over the circle |w - center| = r: n_samples equispaced
// boundary points followed by golden-section sharpening around the best
// sample. Returns the maximum and writes the argmax location.
double boundary_max(const FnHandle& f, Cplx center, double r,
                    std::int64_t n_samples, Cplx* argmax = nullptr);

// Checks M(r1) <= (2 r1 / (r0 - r1)) * M(r0) for f analytic on |s| <= r0
// with f(0) = 0 (growth transfer between concentric circles about the
// origin). Requires 0 < r1 < r0; |f(0)| >= abs_tol is a PreconditionError.
CheckReport borel_caratheodory_check(const FnHandle& f, double r0, double r1,
                                     std::int64_t n_samples,
                                     const PrecisionPolicy& policy = PrecisionPolicy{});

// The classical sharper variant of the same transfer: M(r1) <=
// (2 r1 / (r0 - r1)) * max(0, sup Re f on r0). Same preconditions.
CheckReport borel_caratheodory_classical_check(const FnHandle& f, double r0,
                                               double r1, std::int64_t n_samples,
                                               const PrecisionPolicy& policy = PrecisionPolicy{});

// Hadamard convexity of log M(r): M(r) <= M(r1)^a * M(r2)^(1-a) with
// a = log(r2/r)/log(r2/r1), circles about the origin, r1 < r < r2.
CheckReport three_circle_check(const FnHandle& f, double r1, double r,
                               double r2, std::int64_t n_samples);

// Zero-forced growth: if f has m zeros in |z - z0| <= r (m from the winding
// of the circle of radius r) then (R/r)^m <= max_{|z-z0|=R} |f| / |f(z0)|.
CheckReport jensen_growth_check(const FnHandle& f, ComplexPoint z0, double r,
                                double R,
                                const PrecisionPolicy& policy = PrecisionPolicy{});

// A disk with marked interior zeros; the product of the associated
// fractional-linear factors cancels them without changing boundary modulus.
struct BlaschkeSystem {
    ComplexPoint s0;
    double R = 1.0;
    std::vector<ComplexPoint> zeros;  // with multiplicity

    void validate() const;  // every zero strictly inside, R > 0
};

// z_k(s) = (R^2 - conj(s_k - s0) (s - s0)) / (R (s - s_k)) for the k-th
// marked zero (0-based index). Unimodular on |s - s0| = R, modulus > 1
// strictly inside. Pole exactly at s = s_k.
Cplx blaschke_factor(const BlaschkeSystem& sys, std::size_t k, ComplexPoint s);

// Z(s) = zeta(s) * prod_k z_k(s); zero-free on the disk when sys.zeros is
// exactly the zero set of zeta there.
Cplx regularized_zeta(const BlaschkeSystem& sys, ComplexPoint s,
                      const PrecisionPolicy& policy = PrecisionPolicy{});

std::string to_json(const CheckReport& report);

// One full run of the regularized growth-transfer pipeline at height T.
// Geometry: circles about s0 = sigma0 + iT with radii
//   r0 = sigma0 - lambda - eps,  r1 = r0 - eps,  r = r0 - 2 eps,
//   r2 = sigma0 - 1 - delta,
// eps chosen from the minimal separation of the zeta zeros found with
// ordinate in [T-1, T+2] (quarter of the minimum), capped so the radii stay
// ordered, then halved until no zero distance from s0 falls in the band
// [r^2/r0, r0] where a zero (or its circle reflection) would puncture the
// analyticity of log Z on the outer disk.
struct PipelineReport {
    double sigma0 = 0.0, T = 0.0, delta = 0.0, lambda = 0.0;
    double eps = 0.0;
    double r0 = 0.0, r1 = 0.0, r = 0.0, r2 = 0.0;
    int eps_halvings = 0;
    int k_zeros = 0;
    std::vector<Cplx> zeros;
    Cplx log_z_center;               // tracked log Z(s0)
    double max_abs_log_z_inner = 0.0;  // max |log Z| on the innermost circle
    double zero_term_bound = 0.0;      // K log((r + sigma0 - 1 - delta)/delta)
    double measured_offset = 0.0;      // max_abs_log_z_inner - zero_term_bound
    CheckReport growth_transfer;       // concentric-circle transfer (outer pair)
    CheckReport convexity;             // three-circle check on (r2, r, r1)
    double max_log_abs_zeta_mid = 0.0;  // max log|zeta| on the middle circle
    double max_log_abs_z_mid = 0.0;     // max log|Z| on the middle circle
    CheckReport enclosure;              // log|zeta| <= log|Z| on the middle circle
    double implied_exponent = 0.0;      // (convexity rhs + |log Z(s0)|) / log T

    std::string to_json() const;
};

// Runs the pipeline for zeta. Requires 1 < sigma0 <= 3/2, 0 < delta <
// sigma0 - 1, 1/2 <= lambda < 1, T >= 10; throws InfeasibleGeometry when
// lambda >= sigma0 (outer radius would not be positive).
PipelineReport backlund_pipeline(double sigma0, double T, double delta,
                                 double lambda, const PrecisionPolicy& policy,
                                 int threads = 1);

}  // namespace zetalab
