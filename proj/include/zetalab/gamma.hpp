#pragma once

#include <functional>

#include "zetalab/types.hpp"

namespace zetalab {

// Principal branch of log Gamma(s), continuous on the cut plane
// C \ (-inf, 0]. Stirling's series after shifting the argument into
// Re(s) >= 10; poles at 0, -1, -2, ... are guarded.
Cplx log_gamma(Cplx s);

// Gamma via the Weierstrass product for its reciprocal,
//   1/Gamma(s) = s e^(g0 s) prod_{n>=1} (1 + s/n) e^(-s/n),
// with the infinite tail of the log-product summed analytically.
// GammaResult.log_value carries log Gamma; exponentiate as needed.
GammaResult gamma_weierstrass(ComplexPoint s, const PrecisionPolicy& policy);

// Gamma via Stirling (thin wrapper over log_gamma with the same report shape).
GammaResult gamma_stirling(ComplexPoint s, const PrecisionPolicy& policy);

// Completed zeta: xi(s) = pi^(-s/2) Gamma(s/2 + 1) (s - 1) zeta(s).
// Entire; satisfies xi(s) = xi(1-s). The pole of zeta at s=1 and the
// trivial-zero/Gamma-pole collisions at s = -2, -4, ... are fused
// internally so the function is smooth there.
EvalResult xi(ComplexPoint s, const PrecisionPolicy& policy);

// Adapter for contour/lemma routines expecting a plain Cplx -> Cplx handle.
std::function<Cplx(Cplx)> make_xi(const PrecisionPolicy& policy);

}  // namespace zetalab
