#pragma once

#include <cstdint>
#include <string>

#include "zetalab/types.hpp"

namespace zetalab {

// Parameter pack for the quartic approximants. B drives the oscillation
// scale of A, R the radial growth of the Gamma surrogate; Y and delta are
// the height scale and margin the parameters were synthesized from.
struct PseudoParams {
    double B = 18.0;
    double C = 0.0;
    double R = 10.0;
    double Y = 10.0;
    double delta = 0.5;

    void validate() const;
};

// Builds parameters for a target height: B = 9Y/5, C = (5 delta log Y +
// log 9 - log 5)/(9Y), R = Y. Requires Y >= 10 and 0 < delta < 1.
PseudoParams params_from_height(double Y, double delta);

// Quartic zeta surrogate A(s) = ((u+v)^4 + (u-v)^4)/8 with
// u = B^(-iC(s-1/2)/4) and v its reciprocal. The _expanded variant
// computes the same value through the binomial identity
// (1+z)^4 + (1-z)^4 = 2(1+6z^2+z^4), i.e. A = (w + 6 + 1/w)/4 with w = u^4.
// Throws OverflowError when |C t log B| > 700.
Cplx pseudo_zeta(ComplexPoint s, const PseudoParams& p);
Cplx pseudo_zeta_expanded(ComplexPoint s, const PseudoParams& p);

// Quartic Gamma surrogate with a = R^((s-1/2)/8), b its reciprocal;
// expanded form uses q = a^4. Throws OverflowError when
// |(sigma-1/2) log R / 2| > 700.
Cplx pseudo_gamma(ComplexPoint s, const PseudoParams& p);
Cplx pseudo_gamma_expanded(ComplexPoint s, const PseudoParams& p);

// The t threshold separating the oscillatory regime of A from the
// exponential-growth regime: 2/(C log B).
double case_boundary_t(const PseudoParams& p);

struct ProbeReport {
    double sup = 0.0;
    double argmax_sigma = 0.0;
    double argmax_t = 0.0;
    double grid_step = 0.0;
    double case_boundary_t = 0.0;
    double denom_inf = 0.0;  // smallest |denominator| seen on the grid
    std::int64_t samples = 0;
    PseudoParams params;

    std::string to_json() const;
};

// Grid sup of |zeta(s)/A(s)| over the rectangle. Requires sigma >= 1/2;
// grid nodes inside pole_guard_radius of s = 1 are skipped. Parallel over
// grid rows with a fixed-order reduction, so results are thread-count
// independent.
ProbeReport ratio_probe_zeta(const Rectangle& region, const PseudoParams& p,
                             double grid_step, const PrecisionPolicy& policy,
                             int threads = 1);

// Sup of |Gamma(s/2)/nabla(s)| over n_samples equispaced boundary points
// of the circle. Gamma pole hits propagate as PoleError.
ProbeReport ratio_probe_gamma(const Disk& circle, const PseudoParams& p,
                              std::int64_t n_samples,
                              const PrecisionPolicy& policy, int threads = 1);

}  // namespace zetalab
