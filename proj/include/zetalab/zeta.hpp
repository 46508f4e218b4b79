#pragma once

#include <functional>

#include "zetalab/types.hpp"

namespace zetalab {

// Dirichlet series for sigma > 1: partial sum plus the integral tail
// N^(1-s)/(s-1). err_estimate bounds the residual left after the tail
// correction (N^-sigma/2 + |s| N^(-sigma-1)/12) plus rounding conditioning.
// Throws DomainError for sigma <= 1, BudgetExceeded when no N within
// policy.max_terms meets the tolerance.
EvalResult zeta_dirichlet(ComplexPoint s, const PrecisionPolicy& policy);

// Globally convergent double sum
//   zeta(s) = (1 - 2^(1-s))^-1 sum_n 2^-(n+1) sum_k (-1)^k C(n,k) (k+1)^-s.
// Inner rows use the multiplicative binomial recurrence with the 2^-(n+1)
// weight folded into the leading coefficient and Kahan accumulation, carried
// in extended precision: the alternating rows cancel down from peaks several
// orders above their sums, and the extra mantissa bits keep the rounding
// floor of a finished row below the stopping threshold throughout the
// dispatcher's region. The outer sum stops after five consecutive rows below
// abs_tol. The prefactor vanishes at s = 1 + 2*pi*i*k/ln 2: k = 0 is the
// zeta pole (PoleError), the others are guarded by pole_guard_radius
// (PrefactorSingular). BudgetExceeded is raised if stabilization needs more
// than min(max_terms, 4000) rows.
EvalResult zeta_global(ComplexPoint s, const PrecisionPolicy& policy);

// Euler-Maclaurin continuation: partial sum to N plus integral, half-term and
// Bernoulli corrections, with N adapted to |t| and the tolerance. Direct for
// sigma >= -3; deeper left half-plane evaluations reflect across sigma = 1/2
// (the EM core then runs at 1-s, where it is well conditioned). PoleError at
// s = 1 exactly.
EvalResult zeta_euler_maclaurin(ComplexPoint s, const PrecisionPolicy& policy);

// Route chooser: dirichlet for sigma >= 2; global_sum for |t| <= 100 while
// sigma >= -2 (the alternating rows cancel catastrophically further left);
// euler_maclaurin otherwise.
EvalResult zeta(ComplexPoint s, const PrecisionPolicy& policy);

// (s-1)*zeta(s) with the pole removed analytically: the Euler-Maclaurin term
// N^(1-s)/(s-1) is multiplied through before evaluation, so the product is
// smooth at s = 1 (value 1 there).
Cplx zeta_times_s_minus_one(ComplexPoint s, const PrecisionPolicy& policy);

// zeta as a plain function handle; falls back to euler_maclaurin at points the
// dispatcher's preferred route refuses (prefactor-zero guard bands).
std::function<Cplx(Cplx)> make_zeta(const PrecisionPolicy& policy);

}  // namespace zetalab
