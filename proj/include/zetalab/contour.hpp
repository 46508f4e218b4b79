#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetalab/pseudo.hpp"
#include "zetalab/types.hpp"

namespace zetalab {

using FnHandle = std::function<Cplx(Cplx)>;

// Continuous change of arg f along the segment, by adaptive bisection with a
// per-substep cap of pi/2 on the observed argument jump. initial_subdiv sets
// how many equal pieces the segment starts from before refinement; any value
// >= 1 yields the same result for analytic nonzero f (refinement-stability
// property), it only shifts where the work happens.
// Throws ZeroOnPath when |f| at any sampled point drops below policy.abs_tol,
// and DepthExceeded when a substep still jumps too fast at policy.max_depth.
double im_log_delta(const FnHandle& f, const Segment& seg,
                    const PrecisionPolicy& policy, int initial_subdiv = 8);

// Same tracking along the positively oriented boundary circle of a disk.
double im_log_delta_circle(const FnHandle& f, const Disk& disk,
                           const PrecisionPolicy& policy,
                           int initial_subdiv = 8);

// Number of interior points of the segment at which Re f changes sign,
// located on a grid of the given step and sharpened by bisection to width
// 1e-9. Grid semantics: tangencies that do not flip the sign between
// neighbouring nodes are invisible by design.
int sign_change_count(const FnHandle& f, const Segment& seg, double grid_step,
                      const PrecisionPolicy& policy = PrecisionPolicy{});

// Checks |Im log f|_seg| <= (m + 1) pi where m is the Re-sign-change count:
// the argument of an analytic nonzero function cannot turn faster than its
// real part oscillates. Witness is the segment midpoint.
CheckReport lemma21_check(const FnHandle& f, const Segment& seg,
                          const PrecisionPolicy& policy);

// Argument-principle count of zeros inside the rectangle: boundary traversed
// counterclockwise, total argument change divided by 2 pi, rounded. A
// pre-rounding residual above 1e-6 raises NonIntegerWinding (only reachable
// for handles that are not single-valued analytic functions).
WindingReport count_zeros_rectangle(const FnHandle& f, const Rectangle& rect,
                                    const PrecisionPolicy& policy);

// Same count for a disk boundary.
WindingReport count_zeros_disk(const FnHandle& f, const Disk& disk,
                               const PrecisionPolicy& policy);

// Zeros of the completed zeta function with real part in (lambda, 1) and
// imaginary part in (T-E, T+E). Requires 1/2 < lambda < 1, E > 0, T-E > 0.
int density_window(double lambda, double T, double E,
                   const PrecisionPolicy& policy);

// Zero locations inside the rectangle by recursive winding bisection, each
// zero sharpened until the enclosing box is smaller than loc_tol. When a cut
// line lands on a zero (ZeroOnPath), the cut is retried at shifted fractions
// of the box. Returns zeros sorted by imaginary part, then real part.
std::vector<Cplx> find_zeros_rectangle(const FnHandle& f, const Rectangle& rect,
                                       const PrecisionPolicy& policy,
                                       double loc_tol = 1e-6);

std::string to_json(const WindingReport& report);

// Measured decomposition of a zero-count window [lambda,1] x [T-E, T+E] into
// tracked Im-log contributions. x_left = lambda - eps; the four bracketing
// horizontal sweeps run between sigma = 1/2 and sigma = x at heights
// T(x) + eps and T(x) + 4 eps for x in {x_left, 2}, with T(x_left) = T - E
// and T(2) = T + E; the short verticals bridge the two heights at sigma = x.
// "main" tracks zeta(s) Gamma(s/2) / (A(s) nabla(s)); the shift terms track
// A and nabla ratios between heights t +- E; the translate terms compare A
// and nabla against their pullback by s -> 2 - x_left + s.
struct WindowDecomposition {
    double lambda = 0.0;
    double T = 0.0;
    double E = 0.0;
    double eps = 0.0;
    double x_left = 0.0;

    double main_upper_lower_at_2 = 0.0;     // horizontal pair, x = 2
    double main_upper_lower_at_left = 0.0;  // horizontal pair, x = x_left
    double main_bridge = 0.0;               // short verticals, 2 minus left
    double zeta_shift_at_2 = 0.0;
    double zeta_shift_at_left = 0.0;
    double gamma_shift_at_2 = 0.0;
    double gamma_shift_at_left = 0.0;
    double translate_zeta = 0.0;
    double translate_gamma = 0.0;
    double combination = 0.0;

    std::string to_json() const;
};

WindowDecomposition window_decomposition(double lambda, double T, double E,
                                         double eps, const PseudoParams& p,
                                         const PrecisionPolicy& policy);

}  // namespace zetalab
