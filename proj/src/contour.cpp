#include "zetalab/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "detail_math.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/json_writer.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

using detail::kPi;

using Path = std::function<Cplx(double)>;

struct TrackStats {
    double min_mod = std::numeric_limits<double>::infinity();
    int max_depth = 0;
    std::int64_t leaves = 0;
};

Cplx probe(const FnHandle& f, const Path& path, double tau,
           const PrecisionPolicy& policy, TrackStats& stats) {
    const Cplx v = f(path(tau));
    const double mod = std::abs(v);
    stats.min_mod = std::min(stats.min_mod, mod);
    if (!(mod > policy.abs_tol)) {
        throw ZeroOnPath("argument tracking: |f| fell below abs_tol on the path");
    }
    return v;
}

double track(const FnHandle& f, const Path& path, double a, double b, Cplx fa,
             Cplx fb, int depth, const PrecisionPolicy& policy,
             TrackStats& stats) {
    const double mid = 0.5 * (a + b);
    const double dphi = std::arg(fb * std::conj(fa));
    if (std::abs(dphi) <= 0.5 * kPi) {
        // A small endpoint quotient can hide a full extra turn, so confirm
        // against the midpoint before believing it.
        const Cplx fm = probe(f, path, mid, policy, stats);
        const double d1 = std::arg(fm * std::conj(fa));
        const double d2 = std::arg(fb * std::conj(fm));
        if (std::abs(d1) <= 0.5 * kPi && std::abs(d2) <= 0.5 * kPi &&
            std::abs(d1 + d2 - dphi) <= 1e-9) {
            stats.max_depth = std::max(stats.max_depth, depth);
            ++stats.leaves;
            return d1 + d2;
        }
        if (depth >= policy.max_depth) {
            throw DepthExceeded("argument tracking: refinement depth exhausted");
        }
        return track(f, path, a, mid, fa, fm, depth + 1, policy, stats) +
               track(f, path, mid, b, fm, fb, depth + 1, policy, stats);
    }
    if (depth >= policy.max_depth) {
        throw DepthExceeded("argument tracking: refinement depth exhausted");
    }
    const Cplx fm = probe(f, path, mid, policy, stats);
    return track(f, path, a, mid, fa, fm, depth + 1, policy, stats) +
           track(f, path, mid, b, fm, fb, depth + 1, policy, stats);
}

double track_path(const FnHandle& f, const Path& path, int initial_subdiv,
                  const PrecisionPolicy& policy, TrackStats& stats) {
    const int n = std::max(1, initial_subdiv);
    double total = 0.0;
    Cplx prev = probe(f, path, 0.0, policy, stats);
    for (int i = 1; i <= n; ++i) {
        const double tau = static_cast<double>(i) / static_cast<double>(n);
        const Cplx cur = probe(f, path, tau, policy, stats);
        total += track(f, path, static_cast<double>(i - 1) / n, tau, prev, cur,
                       0, policy, stats);
        prev = cur;
    }
    return total;
}

WindingReport finish_winding(double total_arg, const TrackStats& stats) {
    const double raw = total_arg / (2.0 * kPi);
    const long rounded = std::lround(raw);
    const double residual = std::abs(raw - static_cast<double>(rounded));
    if (residual > 1e-6) {
        throw NonIntegerWinding(
            "winding: boundary argument change is not an integer multiple of 2 pi");
    }
    WindingReport rep;
    rep.winding = static_cast<int>(rounded);
    rep.residual = residual;
    rep.min_boundary_modulus = stats.min_mod;
    rep.max_refinement_depth = stats.max_depth;
    rep.segments_evaluated = stats.leaves;
    return rep;
}

}  // namespace

double im_log_delta(const FnHandle& f, const Segment& seg,
                    const PrecisionPolicy& policy, int initial_subdiv) {
    policy.validate();
    TrackStats stats;
    const Path path = [&seg](double tau) { return seg.at(tau); };
    return track_path(f, path, initial_subdiv, policy, stats);
}

double im_log_delta_circle(const FnHandle& f, const Disk& disk,
                           const PrecisionPolicy& policy, int initial_subdiv) {
    policy.validate();
    if (!(disk.radius() > 0.0)) {
        throw DomainError("im_log_delta_circle: radius must be positive");
    }
    TrackStats stats;
    const Cplx c = disk.center().value();
    const double r = disk.radius();
    const Path path = [c, r](double tau) {
        const double th = 2.0 * kPi * tau;
        return c + r * Cplx(std::cos(th), std::sin(th));
    };
    return track_path(f, path, std::max(8, initial_subdiv), policy, stats);
}

int sign_change_count(const FnHandle& f, const Segment& seg, double grid_step,
                      const PrecisionPolicy& policy) {
    policy.validate();
    if (!(grid_step > 0.0) || !std::isfinite(grid_step)) {
        throw DomainError("sign_change_count: grid_step must be positive");
    }
    const double len = seg.length();
    const std::int64_t n = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil(len / grid_step)));

    const auto re_at = [&](double tau) {
        const Cplx v = f(seg.at(tau));
        if (!(std::abs(v) > policy.abs_tol)) {
            throw ZeroOnPath("sign_change_count: |f| fell below abs_tol");
        }
        return v.real();
    };

    int count = 0;
    double prev_tau = 0.0;
    double prev_re = re_at(0.0);
    for (std::int64_t k = 1; k <= n; ++k) {
        const double tau = static_cast<double>(k) / static_cast<double>(n);
        const double re = re_at(tau);
        if (prev_re == 0.0) {
            // grid node exactly on a zero of Re f; already counted below via
            // the bracket on the previous step, skip double counting
            prev_tau = tau;
            prev_re = re;
            continue;
        }
        if (re == 0.0 || prev_re * re < 0.0) {
            // bracketed crossing; sharpen by bisection to width 1e-9
            double lo = prev_tau;
            double hi = tau;
            double flo = prev_re;
            while ((hi - lo) * len > 1e-9) {
                const double mid = 0.5 * (lo + hi);
                const double fm = re_at(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            const double root = 0.5 * (lo + hi);
            if (root > 0.0 && root < 1.0) {
                ++count;
            }
        }
        prev_tau = tau;
        prev_re = re;
    }
    return count;
}

CheckReport lemma21_check(const FnHandle& f, const Segment& seg,
                          const PrecisionPolicy& policy) {
    // A missed crossing only shrinks the right-hand side, so an undercount
    // makes the check stricter, never falsely green; 256 nodes keep the grid
    // far below the argument's turning scale while the tracked side stays
    // exact.
    const double step = std::max(seg.length() / 256.0, 1e-9);
    const int m = sign_change_count(f, seg, step, policy);
    const double delta = im_log_delta(f, seg, policy);
    return CheckReport::make(std::abs(delta),
                             (static_cast<double>(m) + 1.0) * kPi,
                             ComplexPoint::from(seg.at(0.5)));
}

WindingReport count_zeros_rectangle(const FnHandle& f, const Rectangle& rect,
                                    const PrecisionPolicy& policy) {
    policy.validate();
    TrackStats stats;
    const Cplx bl{rect.sigma_min(), rect.t_min()};
    const Cplx br{rect.sigma_max(), rect.t_min()};
    const Cplx tr{rect.sigma_max(), rect.t_max()};
    const Cplx tl{rect.sigma_min(), rect.t_max()};
    const Cplx corners[5] = {bl, br, tr, tl, bl};
    double total = 0.0;
    for (int i = 0; i < 4; ++i) {
        const Cplx a = corners[i];
        const Cplx b = corners[i + 1];
        const Path path = [a, b](double tau) { return a + tau * (b - a); };
        // Seed the subdivision with the edge length so long edges start below
        // the scale at which endpoint quotients can wrap unnoticed.
        const int subdiv =
            std::max(8, static_cast<int>(std::ceil(2.0 * std::abs(b - a))));
        total += track_path(f, path, subdiv, policy, stats);
    }
    return finish_winding(total, stats);
}

WindingReport count_zeros_disk(const FnHandle& f, const Disk& disk,
                               const PrecisionPolicy& policy) {
    policy.validate();
    if (!(disk.radius() > 0.0)) {
        throw DomainError("count_zeros_disk: radius must be positive");
    }
    TrackStats stats;
    const Cplx c = disk.center().value();
    const double r = disk.radius();
    const Path path = [c, r](double tau) {
        const double th = 2.0 * kPi * tau;
        return c + r * Cplx(std::cos(th), std::sin(th));
    };
    const int subdiv =
        std::max(16, static_cast<int>(std::ceil(4.0 * kPi * r)));
    const double total = track_path(f, path, subdiv, policy, stats);
    return finish_winding(total, stats);
}

int density_window(double lambda, double T, double E,
                   const PrecisionPolicy& policy) {
    policy.validate();
    if (!(E > 0.0) || !std::isfinite(E)) {
        throw DomainError("density_window: E must be positive");
    }
    if (!(lambda > 0.5) || !(lambda < 1.0)) {
        throw DomainError("density_window: lambda must lie in (1/2, 1)");
    }
    if (!(T - E > 0.0)) {
        throw DomainError("density_window: window must stay above the real axis");
    }
    const Rectangle rect(lambda, 1.0, T - E, T + E);
    return count_zeros_rectangle(make_xi(policy), rect, policy).winding;
}

namespace {

constexpr double kCutShift[6] = {0.5, 0.53, 0.47, 0.57, 0.43, 0.61};

void locate(const FnHandle& f, const Rectangle& rect,
            const PrecisionPolicy& policy, double loc_tol,
            std::vector<Cplx>& out, int carried_count) {
    const double w = rect.sigma_max() - rect.sigma_min();
    const double h = rect.t_max() - rect.t_min();

    int count = carried_count;
    if (count < 0) {
        count = count_zeros_rectangle(f, rect, policy).winding;
    }
    if (count == 0) return;
    if (std::max(w, h) < loc_tol) {
        const Cplx center{rect.sigma_min() + 0.5 * w, rect.t_min() + 0.5 * h};
        for (int i = 0; i < count; ++i) out.push_back(center);
        return;
    }

    const bool vertical_cut = w >= h;  // cut the longer dimension
    for (int attempt = 0; attempt < 6; ++attempt) {
        const double frac = kCutShift[attempt];
        Rectangle first = vertical_cut
                              ? Rectangle(rect.sigma_min(),
                                          rect.sigma_min() + frac * w,
                                          rect.t_min(), rect.t_max())
                              : Rectangle(rect.sigma_min(), rect.sigma_max(),
                                          rect.t_min(), rect.t_min() + frac * h);
        Rectangle second = vertical_cut
                               ? Rectangle(rect.sigma_min() + frac * w,
                                           rect.sigma_max(), rect.t_min(),
                                           rect.t_max())
                               : Rectangle(rect.sigma_min(), rect.sigma_max(),
                                           rect.t_min() + frac * h,
                                           rect.t_max());
        int c1 = 0;
        try {
            c1 = count_zeros_rectangle(f, first, policy).winding;
        } catch (const ZeroOnPath&) {
            if (attempt == 5) throw;
            continue;  // the cut grazed a zero; shift it
        } catch (const DepthExceeded&) {
            // A cut passing close to a zero spins the argument faster than
            // the refinement budget as well; treat it like a graze.
            if (attempt == 5) throw;
            continue;
        }
        locate(f, first, policy, loc_tol, out, c1);
        locate(f, second, policy, loc_tol, out, count - c1);
        return;
    }
}

}  // namespace

std::vector<Cplx> find_zeros_rectangle(const FnHandle& f, const Rectangle& rect,
                                       const PrecisionPolicy& policy,
                                       double loc_tol) {
    policy.validate();
    if (!(loc_tol > 0.0)) {
        throw DomainError("find_zeros_rectangle: loc_tol must be positive");
    }
    std::vector<Cplx> zeros;
    locate(f, rect, policy, loc_tol, zeros, -1);
    std::sort(zeros.begin(), zeros.end(), [](Cplx a, Cplx b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    return zeros;
}

std::string to_json(const WindingReport& report) {
    JsonWriter w;
    w.begin_object();
    w.key("winding");
    w.value(static_cast<std::int64_t>(report.winding));
    w.key("residual");
    w.value(report.residual);
    w.key("min_boundary_modulus");
    w.value(report.min_boundary_modulus);
    w.key("max_refinement_depth");
    w.value(static_cast<std::int64_t>(report.max_refinement_depth));
    w.key("segments_evaluated");
    w.value(report.segments_evaluated);
    w.end_object();
    return w.take();
}

std::string WindowDecomposition::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("lambda");
    w.value(lambda);
    w.key("T");
    w.value(T);
    w.key("E");
    w.value(E);
    w.key("eps");
    w.value(eps);
    w.key("x_left");
    w.value(x_left);
    w.key("main_upper_lower_at_2");
    w.value(main_upper_lower_at_2);
    w.key("main_upper_lower_at_left");
    w.value(main_upper_lower_at_left);
    w.key("main_bridge");
    w.value(main_bridge);
    w.key("zeta_shift_at_2");
    w.value(zeta_shift_at_2);
    w.key("zeta_shift_at_left");
    w.value(zeta_shift_at_left);
    w.key("gamma_shift_at_2");
    w.value(gamma_shift_at_2);
    w.key("gamma_shift_at_left");
    w.value(gamma_shift_at_left);
    w.key("translate_zeta");
    w.value(translate_zeta);
    w.key("translate_gamma");
    w.value(translate_gamma);
    w.key("combination");
    w.value(combination);
    w.end_object();
    return w.take();
}

WindowDecomposition window_decomposition(double lambda, double T, double E,
                                         double eps, const PseudoParams& p,
                                         const PrecisionPolicy& policy) {
    policy.validate();
    p.validate();
    if (!(lambda > 0.5) || !(lambda < 1.0)) {
        throw DomainError("window_decomposition: lambda must lie in (1/2, 1)");
    }
    if (!(E > 0.0) || !(T - E > 0.0)) {
        throw DomainError("window_decomposition: need E > 0 and T - E > 0");
    }
    if (!(eps > 0.0) || !(eps < lambda - 0.5)) {
        throw DomainError("window_decomposition: need 0 < eps < lambda - 1/2");
    }

    const double x_left = lambda - eps;
    const auto zf = make_zeta(policy);

    const FnHandle main_ratio = [&](Cplx s) {
        const Cplx g = std::exp(log_gamma(0.5 * s));
        const Cplx a = pseudo_zeta(ComplexPoint::from(s), p);
        const Cplx n = pseudo_gamma(ComplexPoint::from(s), p);
        return zf(s) * g / (a * n);
    };
    const FnHandle zeta_shift = [&](Cplx s) {
        return pseudo_zeta(ComplexPoint::from(s + Cplx(0.0, E)), p) /
               pseudo_zeta(ComplexPoint::from(s - Cplx(0.0, E)), p);
    };
    const FnHandle gamma_shift = [&](Cplx s) {
        return pseudo_gamma(ComplexPoint::from(s + Cplx(0.0, E)), p) /
               pseudo_gamma(ComplexPoint::from(s - Cplx(0.0, E)), p);
    };
    const FnHandle translate_a = [&](Cplx s) {
        return pseudo_zeta(ComplexPoint::from(s + (2.0 - x_left)), p) /
               pseudo_zeta(ComplexPoint::from(s), p);
    };
    const FnHandle translate_n = [&](Cplx s) {
        return pseudo_gamma(ComplexPoint::from(s + (2.0 - x_left)), p) /
               pseudo_gamma(ComplexPoint::from(s), p);
    };

    // heights: T(x) + eps and T(x) + 4 eps with T(x_left) = T - E, T(2) = T + E
    const auto lower_sweep = [&](double x, double Tx) {
        return Segment(ComplexPoint(0.5, Tx + eps), ComplexPoint(x, Tx + eps));
    };
    const auto upper_sweep = [&](double x, double Tx) {
        return Segment(ComplexPoint(x, Tx + 4.0 * eps),
                       ComplexPoint(0.5, Tx + 4.0 * eps));
    };
    const auto bridge = [&](double x, double Tx) {
        return Segment(ComplexPoint(x, Tx + eps), ComplexPoint(x, Tx + 4.0 * eps));
    };

    WindowDecomposition d;
    d.lambda = lambda;
    d.T = T;
    d.E = E;
    d.eps = eps;
    d.x_left = x_left;

    // The main ratio decays like |Gamma(s/2)| ~ exp(-pi t / 4) along the
    // sweeps, so a fixed zero-detection threshold would misread its ordinary
    // smallness as a zero on the path. Floor it far below that scale.
    PrecisionPolicy track_policy = policy;
    track_policy.abs_tol = std::min(policy.abs_tol, 1e-25);

    const auto pair_delta = [&](const FnHandle& fn, double x, double Tx) {
        return im_log_delta(fn, upper_sweep(x, Tx), track_policy) -
               im_log_delta(fn, lower_sweep(x, Tx), track_policy);
    };

    d.main_upper_lower_at_2 = pair_delta(main_ratio, 2.0, T + E);
    d.main_upper_lower_at_left = pair_delta(main_ratio, x_left, T - E);
    d.main_bridge = im_log_delta(main_ratio, bridge(2.0, T + E), track_policy) -
                    im_log_delta(main_ratio, bridge(x_left, T - E), track_policy);
    d.zeta_shift_at_2 = pair_delta(zeta_shift, 2.0, T + E);
    d.zeta_shift_at_left = pair_delta(zeta_shift, x_left, T - E);
    d.gamma_shift_at_2 = pair_delta(gamma_shift, 2.0, T + E);
    d.gamma_shift_at_left = pair_delta(gamma_shift, x_left, T - E);
    d.translate_zeta =
        im_log_delta(translate_a, bridge(x_left, T - E), track_policy);
    d.translate_gamma =
        im_log_delta(translate_n, bridge(x_left, T - E), track_policy);

    d.combination = d.main_upper_lower_at_2 - d.main_upper_lower_at_left +
                    d.main_bridge - (d.zeta_shift_at_2 - d.zeta_shift_at_left) -
                    (d.gamma_shift_at_2 - d.gamma_shift_at_left) +
                    d.translate_zeta + d.translate_gamma;
    return d;
}

}  // namespace zetalab
