#include "zetalab/pseudo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "detail_math.hpp"
#include "zetalab/json_writer.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/zeta.hpp"
#include "zetalab/gamma.hpp"

namespace zetalab {

namespace {

constexpr double kExpGuard = 700.0;
constexpr Cplx kI{0.0, 1.0};

Cplx quartic_pair(Cplx u, Cplx v) {
    const Cplx a = u + v;
    const Cplx b = u - v;
    const Cplx a2 = a * a;
    const Cplx b2 = b * b;
    return 0.125 * (a2 * a2 + b2 * b2);
}

void params_json(JsonWriter& w, const PseudoParams& p) {
    w.key("params");
    w.begin_object();
    w.key("B");
    w.value(p.B);
    w.key("C");
    w.value(p.C);
    w.key("R");
    w.value(p.R);
    w.key("Y");
    w.value(p.Y);
    w.key("delta");
    w.value(p.delta);
    w.end_object();
}

}  // namespace

void PseudoParams::validate() const {
    if (!std::isfinite(B) || !std::isfinite(C) || !std::isfinite(R) ||
        !std::isfinite(Y) || !std::isfinite(delta)) {
        throw DomainError("PseudoParams: members must be finite");
    }
    if (!(B > 1.0) || !(C > 0.0) || !(R > 1.0) || !(Y > 0.0) || !(delta > 0.0)) {
        throw DomainError("PseudoParams: require B > 1, C > 0, R > 1, Y > 0, delta > 0");
    }
    if (!(C * std::log(B) > 0.0)) {
        throw DomainError("PseudoParams: require C log B > 0");
    }
}

PseudoParams params_from_height(double Y, double delta) {
    if (!(Y >= 10.0) || !std::isfinite(Y)) {
        throw DomainError("params_from_height: require Y >= 10");
    }
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw DomainError("params_from_height: require 0 < delta < 1");
    }
    PseudoParams p;
    p.Y = Y;
    p.delta = delta;
    p.B = 9.0 * Y / 5.0;
    p.C = (5.0 * delta * std::log(Y) + std::log(9.0) - std::log(5.0)) / (9.0 * Y);
    p.R = Y;
    p.validate();
    return p;
}

Cplx pseudo_zeta(ComplexPoint sp, const PseudoParams& p) {
    p.validate();
    const Cplx s = sp.value();
    const double logB = std::log(p.B);
    if (std::abs(p.C * sp.t() * logB) > kExpGuard) {
        throw OverflowError("pseudo_zeta: |C t log B| exceeds exp range");
    }
    const Cplx e = -kI * p.C * (s - 0.5) * logB / 4.0;
    const Cplx u = std::exp(e);
    const Cplx v = std::exp(-e);
    return quartic_pair(u, v);
}

Cplx pseudo_zeta_expanded(ComplexPoint sp, const PseudoParams& p) {
    p.validate();
    const Cplx s = sp.value();
    const double logB = std::log(p.B);
    if (std::abs(p.C * sp.t() * logB) > kExpGuard) {
        throw OverflowError("pseudo_zeta_expanded: |C t log B| exceeds exp range");
    }
    const Cplx w = std::exp(-kI * p.C * (s - 0.5) * logB);
    return (w + 6.0 + 1.0 / w) / 4.0;
}

Cplx pseudo_gamma(ComplexPoint sp, const PseudoParams& p) {
    p.validate();
    const Cplx s = sp.value();
    const double logR = std::log(p.R);
    if (std::abs((sp.sigma() - 0.5) * logR / 2.0) > kExpGuard) {
        throw OverflowError("pseudo_gamma: |(sigma-1/2) log R / 2| exceeds exp range");
    }
    const Cplx e = (s - 0.5) * logR / 8.0;
    const Cplx a = std::exp(e);
    const Cplx b = std::exp(-e);
    return quartic_pair(a, b);
}

Cplx pseudo_gamma_expanded(ComplexPoint sp, const PseudoParams& p) {
    p.validate();
    const Cplx s = sp.value();
    const double logR = std::log(p.R);
    if (std::abs((sp.sigma() - 0.5) * logR / 2.0) > kExpGuard) {
        throw OverflowError("pseudo_gamma_expanded: |(sigma-1/2) log R / 2| exceeds exp range");
    }
    const Cplx q = std::exp((s - 0.5) * logR / 2.0);
    return (q + 6.0 + 1.0 / q) / 4.0;
}

double case_boundary_t(const PseudoParams& p) {
    p.validate();
    return 2.0 / (p.C * std::log(p.B));
}

std::string ProbeReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("sup");
    w.value(sup);
    w.key("argmax_sigma");
    w.value(argmax_sigma);
    w.key("argmax_t");
    w.value(argmax_t);
    w.key("grid_step");
    w.value(grid_step);
    w.key("case_boundary_t");
    w.value(case_boundary_t);
    w.key("denom_inf");
    w.value(denom_inf);
    w.key("samples");
    w.value(samples);
    params_json(w, params);
    w.end_object();
    return w.take();
}

ProbeReport ratio_probe_zeta(const Rectangle& region, const PseudoParams& p,
                             double grid_step, const PrecisionPolicy& policy,
                             int threads) {
    p.validate();
    policy.validate();
    if (!(grid_step > 0.0) || !std::isfinite(grid_step)) {
        throw DomainError("ratio_probe_zeta: grid_step must be positive");
    }
    if (region.sigma_min() < 0.5 - 1e-12) {
        throw DomainError("ratio_probe_zeta: region must lie in sigma >= 1/2");
    }

    const std::int64_t ns = static_cast<std::int64_t>(
                                std::floor((region.sigma_max() - region.sigma_min()) / grid_step + 1e-9)) + 1;
    const std::int64_t nt = static_cast<std::int64_t>(
                                std::floor((region.t_max() - region.t_min()) / grid_step + 1e-9)) + 1;

    struct Cell {
        double ratio = -1.0;  // skipped cells stay negative
        double amag = std::numeric_limits<double>::infinity();
    };
    std::vector<Cell> cells(static_cast<std::size_t>(ns * nt));

    parallel_for(ns * nt, threads, [&](std::int64_t idx) {
        const std::int64_t i = idx / nt;
        const std::int64_t j = idx % nt;
        const double sigma = std::min(region.sigma_min() + static_cast<double>(i) * grid_step,
                                      region.sigma_max());
        const double t = std::min(region.t_min() + static_cast<double>(j) * grid_step,
                                  region.t_max());
        if (std::hypot(sigma - 1.0, t) <= policy.pole_guard_radius) {
            return;  // zeta pole; leave the cell skipped
        }
        const ComplexPoint s{sigma, t};
        const Cplx a = pseudo_zeta(s, p);
        Cplx z;
        try {
            z = zeta(s, policy).value;
        } catch (const PrefactorSingular&) {
            z = zeta_euler_maclaurin(s, policy).value;
        }
        Cell& c = cells[static_cast<std::size_t>(idx)];
        c.amag = std::abs(a);
        c.ratio = std::abs(z) / c.amag;
    });

    ProbeReport rep;
    rep.grid_step = grid_step;
    rep.case_boundary_t = case_boundary_t(p);
    rep.params = p;
    rep.sup = -std::numeric_limits<double>::infinity();
    rep.denom_inf = std::numeric_limits<double>::infinity();
    for (std::int64_t idx = 0; idx < ns * nt; ++idx) {
        const Cell& c = cells[static_cast<std::size_t>(idx)];
        if (c.ratio < 0.0) continue;
        ++rep.samples;
        rep.denom_inf = std::min(rep.denom_inf, c.amag);
        if (c.ratio > rep.sup) {
            rep.sup = c.ratio;
            const std::int64_t i = idx / nt;
            const std::int64_t j = idx % nt;
            rep.argmax_sigma = std::min(region.sigma_min() + static_cast<double>(i) * grid_step,
                                        region.sigma_max());
            rep.argmax_t = std::min(region.t_min() + static_cast<double>(j) * grid_step,
                                    region.t_max());
        }
    }
    if (rep.samples == 0) {
        throw DomainError("ratio_probe_zeta: every grid node fell in the pole guard");
    }
    return rep;
}

ProbeReport ratio_probe_gamma(const Disk& circle, const PseudoParams& p,
                              std::int64_t n_samples,
                              const PrecisionPolicy& policy, int threads) {
    p.validate();
    policy.validate();
    if (n_samples < 1) {
        throw DomainError("ratio_probe_gamma: need at least one sample");
    }

    struct Cell {
        double ratio = 0.0;
        double dmag = 0.0;
        double sigma = 0.0;
        double t = 0.0;
    };
    std::vector<Cell> cells(static_cast<std::size_t>(n_samples));

    parallel_for(n_samples, threads, [&](std::int64_t k) {
        const double theta = 2.0 * detail::kPi * static_cast<double>(k) /
                             static_cast<double>(n_samples);
        const Cplx s = circle.center().value() +
                       circle.radius() * Cplx(std::cos(theta), std::sin(theta));
        const Cplx g = std::exp(log_gamma(0.5 * s));
        const Cplx d = pseudo_gamma(ComplexPoint::from(s), p);
        Cell& c = cells[static_cast<std::size_t>(k)];
        c.dmag = std::abs(d);
        c.ratio = std::abs(g) / c.dmag;
        c.sigma = s.real();
        c.t = s.imag();
    });

    ProbeReport rep;
    rep.grid_step = 2.0 * detail::kPi / static_cast<double>(n_samples);
    rep.case_boundary_t = case_boundary_t(p);
    rep.params = p;
    rep.samples = n_samples;
    rep.sup = -std::numeric_limits<double>::infinity();
    rep.denom_inf = std::numeric_limits<double>::infinity();
    for (const Cell& c : cells) {
        rep.denom_inf = std::min(rep.denom_inf, c.dmag);
        if (c.ratio > rep.sup) {
            rep.sup = c.ratio;
            rep.argmax_sigma = c.sigma;
            rep.argmax_t = c.t;
        }
    }
    return rep;
}

}  // namespace zetalab
