#pragma once

#include <string>
#include <vector>

#include "zetalab/types.hpp"

namespace zetalab {

// Samples |zeta(sigma + it)| on the half-open t-grid
// t_k = t_min + k * step, k = 0 .. floor((t_max - t_min)/step) - 1,
// in ascending t. Requires 3 <= t_min <= t_max <= 500 and step > 0;
// t_min == t_max yields an empty list. Evaluation goes through the route
// dispatcher; grid points that land on an alternating-sum prefactor zero
// fall back to the direct summation route.
std::vector<GrowthSample> scan_line(double sigma, double t_min, double t_max,
                                    double step, const PrecisionPolicy& policy,
                                    int threads = 1);

// Sup and argmax of log|zeta|/log t over the scan, plus the smallest
// constant c with |zeta| <= c * t^((1-sigma)/2) on the grid. Requires a
// non-empty grid (t_min < t_max).
MuEstimate mu_estimate(double sigma, double t_min, double t_max, double step,
                       const PrecisionPolicy& policy, int threads = 1);

// Measures the two growth constants of the vertical-strip bound: lhs is the
// smallest c with |zeta(sigma+it)| <= c * t^((1-delta)/2) over sigma in
// [delta, 1] (five rows), t in [3, t_max] at step 0.05; rhs is the smallest
// c' with |zeta(3/2+it)| <= c' * log t on the same t-grid. holds means both
// came out finite; witness is the argmax of the strip constant.
CheckReport bound_check_zetaupd(double delta, double t_max,
                                const PrecisionPolicy& policy,
                                int threads = 1);

// CSV with header t,sigma,re_zeta,im_zeta,log_abs,ratio; 17 significant
// digits per field, one row per sample.
std::string to_csv(const std::vector<GrowthSample>& samples);

// Self-contained SVG polyline of log|zeta| against t.
std::string svg_line_plot(const std::vector<GrowthSample>& samples);

}  // namespace zetalab
