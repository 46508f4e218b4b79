#include "zetalab/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "detail_math.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/json_writer.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

using detail::kPi;

Cplx circle_point(Cplx center, double r, double theta) {
    return center + r * Cplx(std::cos(theta), std::sin(theta));
}

// Golden-section sharpening of g over [lo, hi] assuming the sampled max is
// near a smooth local max.
double golden_refine(const std::function<double(double)>& g, double lo,
                     double hi, double glo_best) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    double best = glo_best;
    for (int it = 0; it < 80; ++it) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + kInvPhi * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - kInvPhi * (b - a);
            g1 = g(x1);
        }
        best = std::max(best, std::max(g1, g2));
    }
    return best;
}

}  // namespace

double boundary_max(const FnHandle& f, Cplx center, double r,
                    std::int64_t n_samples, Cplx* argmax) {
    if (n_samples < 1) {
        throw DomainError("boundary_max: need at least one sample");
    }
    if (r == 0.0) {
        if (argmax) *argmax = center;
        return std::abs(f(center));
    }

    double best = -1.0;
    double best_theta = 0.0;
    for (std::int64_t j = 0; j < n_samples; ++j) {
        const double theta = 2.0 * kPi * static_cast<double>(j) /
                             static_cast<double>(n_samples);
        const double v = std::abs(f(circle_point(center, r, theta)));
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    }
    const double h = 2.0 * kPi / static_cast<double>(n_samples);
    const auto g = [&](double theta) {
        return std::abs(f(circle_point(center, r, theta)));
    };
    best = golden_refine(g, best_theta - h, best_theta + h, best);
    if (argmax) *argmax = circle_point(center, r, best_theta);
    return best;
}

namespace {

// Max of Re f on the circle, same sampling scheme as boundary_max.
double boundary_max_re(const FnHandle& f, Cplx center, double r,
                       std::int64_t n_samples) {
    double best = -std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (std::int64_t j = 0; j < n_samples; ++j) {
        const double theta = 2.0 * kPi * static_cast<double>(j) /
                             static_cast<double>(n_samples);
        const double v = f(circle_point(center, r, theta)).real();
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    }
    const double h = 2.0 * kPi / static_cast<double>(n_samples);
    const auto g = [&](double theta) {
        return f(circle_point(center, r, theta)).real();
    };
    return golden_refine(g, best_theta - h, best_theta + h, best);
}

}  // namespace

CheckReport borel_caratheodory_check(const FnHandle& f, double r0, double r1,
                                     std::int64_t n_samples,
                                     const PrecisionPolicy& policy) {
    policy.validate();
    if (!(r1 > 0.0) || !(r1 < r0) || !std::isfinite(r0)) {
        throw DomainError("borel_caratheodory_check: need 0 < r1 < r0");
    }
    if (!(std::abs(f(Cplx{0.0, 0.0})) < policy.abs_tol)) {
        throw PreconditionError("borel_caratheodory_check: f(0) must vanish");
    }
    Cplx witness;
    const double m1 = boundary_max(f, Cplx{0.0, 0.0}, r1, n_samples, &witness);
    const double m0 = boundary_max(f, Cplx{0.0, 0.0}, r0, n_samples);
    const double rhs = 2.0 * r1 / (r0 - r1) * m0;
    return CheckReport::make(m1, rhs, ComplexPoint::from(witness));
}

CheckReport borel_caratheodory_classical_check(const FnHandle& f, double r0,
                                               double r1,
                                               std::int64_t n_samples,
                                               const PrecisionPolicy& policy) {
    policy.validate();
    if (!(r1 > 0.0) || !(r1 < r0) || !std::isfinite(r0)) {
        throw DomainError("borel_caratheodory_classical_check: need 0 < r1 < r0");
    }
    if (!(std::abs(f(Cplx{0.0, 0.0})) < policy.abs_tol)) {
        throw PreconditionError(
            "borel_caratheodory_classical_check: f(0) must vanish");
    }
    Cplx witness;
    const double m1 = boundary_max(f, Cplx{0.0, 0.0}, r1, n_samples, &witness);
    const double a0 =
        std::max(0.0, boundary_max_re(f, Cplx{0.0, 0.0}, r0, n_samples));
    const double rhs = 2.0 * r1 / (r0 - r1) * a0;
    return CheckReport::make(m1, rhs, ComplexPoint::from(witness));
}

CheckReport three_circle_check(const FnHandle& f, double r1, double r,
                               double r2, std::int64_t n_samples) {
    if (!(r1 > 0.0) || !(r1 < r) || !(r < r2) || !std::isfinite(r2)) {
        throw DomainError("three_circle_check: need 0 < r1 < r < r2");
    }
    Cplx witness;
    const double m1 = boundary_max(f, Cplx{0.0, 0.0}, r1, n_samples);
    const double m = boundary_max(f, Cplx{0.0, 0.0}, r, n_samples, &witness);
    const double m2 = boundary_max(f, Cplx{0.0, 0.0}, r2, n_samples);
    const double a = std::log(r2 / r) / std::log(r2 / r1);
    const double rhs = std::pow(m1, a) * std::pow(m2, 1.0 - a);
    return CheckReport::make(m, rhs, ComplexPoint::from(witness));
}

CheckReport jensen_growth_check(const FnHandle& f, ComplexPoint z0, double r,
                                double R, const PrecisionPolicy& policy) {
    policy.validate();
    if (!(r > 0.0) || !(r < R) || !std::isfinite(R)) {
        throw DomainError("jensen_growth_check: need 0 < r < R");
    }
    const double f0 = std::abs(f(z0.value()));
    if (!(f0 >= policy.abs_tol)) {
        throw PreconditionError("jensen_growth_check: f(z0) too close to zero");
    }
    const int m = count_zeros_disk(f, Disk(z0, r), policy).winding;
    Cplx witness;
    const double big_m = boundary_max(f, z0.value(), R, 2048, &witness);
    const double lhs = std::pow(R / r, static_cast<double>(m));
    return CheckReport::make(lhs, big_m / f0, ComplexPoint::from(witness));
}

void BlaschkeSystem::validate() const {
    if (!(R > 0.0) || !std::isfinite(R)) {
        throw DomainError("BlaschkeSystem: R must be positive and finite");
    }
    for (const ComplexPoint& z : zeros) {
        if (!(std::abs(z.value() - s0.value()) < R)) {
            throw DomainError("BlaschkeSystem: every zero must lie strictly inside");
        }
    }
}

Cplx blaschke_factor(const BlaschkeSystem& sys, std::size_t k, ComplexPoint s) {
    if (k >= sys.zeros.size()) {
        throw DomainError("blaschke_factor: zero index out of range");
    }
    const Cplx sk = sys.zeros[k].value();
    const Cplx denom = sys.R * (s.value() - sk);
    if (denom == Cplx{0.0, 0.0}) {
        throw PoleError("blaschke_factor: evaluation at the marked zero");
    }
    const Cplx num =
        sys.R * sys.R - std::conj(sk - sys.s0.value()) * (s.value() - sys.s0.value());
    return num / denom;
}

Cplx regularized_zeta(const BlaschkeSystem& sys, ComplexPoint s,
                      const PrecisionPolicy& policy) {
    sys.validate();
    Cplx product{1.0, 0.0};
    for (std::size_t k = 0; k < sys.zeros.size(); ++k) {
        product *= blaschke_factor(sys, k, s);
    }
    return make_zeta(policy)(s.value()) * product;
}

std::string to_json(const CheckReport& report) {
    JsonWriter w;
    w.begin_object();
    w.key("lhs");
    w.value(report.lhs);
    w.key("rhs");
    w.value(report.rhs);
    w.key("holds");
    w.value(report.holds);
    w.key("witness_sigma");
    w.value(report.witness.sigma());
    w.key("witness_t");
    w.value(report.witness.t());
    w.end_object();
    return w.take();
}

namespace {

struct CircleScan {
    std::vector<Cplx> log_values;  // tracked log of the handle at the nodes
    double closure = 0.0;          // total arg change over the full loop
};

// Arc-refined argument step between two circle nodes.
double arc_delta(const FnHandle& g, Cplx center, double r, double th_a,
                 double th_b, Cplx fa, Cplx fb, int depth,
                 const PrecisionPolicy& policy) {
    const double dphi = std::arg(fb * std::conj(fa));
    if (std::abs(dphi) <= 0.5 * kPi) return dphi;
    if (depth >= policy.max_depth) {
        throw DepthExceeded("circle scan: refinement depth exhausted");
    }
    const double mid = 0.5 * (th_a + th_b);
    const Cplx fm = g(circle_point(center, r, mid));
    if (!(std::abs(fm) > policy.abs_tol)) {
        throw ZeroOnPath("circle scan: |f| fell below abs_tol");
    }
    return arc_delta(g, center, r, th_a, mid, fa, fm, depth + 1, policy) +
           arc_delta(g, center, r, mid, th_b, fm, fb, depth + 1, policy);
}

// Walks the circle once, carrying a continuous branch of log g anchored at
// the principal value on the rightmost point (theta = 0). Node values are
// evaluated in parallel slots; the branch accumulation is a serial pass.
CircleScan scan_log_circle(const FnHandle& g, Cplx center, double r, int n,
                           const PrecisionPolicy& policy, int threads) {
    std::vector<Cplx> vals(static_cast<std::size_t>(n) + 1);
    parallel_for(n, threads, [&](std::int64_t j) {
        const double theta = 2.0 * kPi * static_cast<double>(j) / n;
        vals[static_cast<std::size_t>(j)] = g(circle_point(center, r, theta));
    });
    vals[static_cast<std::size_t>(n)] = vals[0];

    for (const Cplx& v : vals) {
        if (!(std::abs(v) > policy.abs_tol)) {
            throw ZeroOnPath("circle scan: |f| fell below abs_tol");
        }
    }

    CircleScan scan;
    scan.log_values.resize(static_cast<std::size_t>(n) + 1);
    double im = std::arg(vals[0]);
    scan.log_values[0] = Cplx(std::log(std::abs(vals[0])), im);
    double total = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double th_a = 2.0 * kPi * static_cast<double>(j - 1) / n;
        const double th_b = 2.0 * kPi * static_cast<double>(j) / n;
        const double d =
            arc_delta(g, center, r, th_a, th_b, vals[static_cast<std::size_t>(j - 1)],
                      vals[static_cast<std::size_t>(j)], 0, policy);
        total += d;
        im += d;
        scan.log_values[static_cast<std::size_t>(j)] =
            Cplx(std::log(std::abs(vals[static_cast<std::size_t>(j)])), im);
    }
    scan.closure = total;
    if (std::abs(total) / (2.0 * kPi) > 1e-6) {
        throw NonIntegerWinding("circle scan: handle is not zero-free inside");
    }
    return scan;
}

double max_abs(const std::vector<Cplx>& v, std::size_t* arg_idx = nullptr) {
    double best = -1.0;
    std::size_t bi = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double m = std::abs(v[i]);
        if (m > best) {
            best = m;
            bi = i;
        }
    }
    if (arg_idx) *arg_idx = bi;
    return best;
}

}  // namespace

std::string PipelineReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("sigma0");
    w.value(sigma0);
    w.key("T");
    w.value(T);
    w.key("delta");
    w.value(delta);
    w.key("lambda");
    w.value(lambda);
    w.key("eps");
    w.value(eps);
    w.key("r0");
    w.value(r0);
    w.key("r1");
    w.value(r1);
    w.key("r");
    w.value(r);
    w.key("r2");
    w.value(r2);
    w.key("eps_halvings");
    w.value(static_cast<std::int64_t>(eps_halvings));
    w.key("k_zeros");
    w.value(static_cast<std::int64_t>(k_zeros));
    w.key("zeros");
    w.begin_array();
    for (const Cplx& z : zeros) {
        w.begin_object();
        w.key("sigma");
        w.value(z.real());
        w.key("t");
        w.value(z.imag());
        w.end_object();
    }
    w.end_array();
    w.key("log_z_center_re");
    w.value(log_z_center.real());
    w.key("log_z_center_im");
    w.value(log_z_center.imag());
    w.key("max_abs_log_z_inner");
    w.value(max_abs_log_z_inner);
    w.key("zero_term_bound");
    w.value(zero_term_bound);
    w.key("measured_offset");
    w.value(measured_offset);
    w.key("growth_transfer");
    w.raw(zetalab::to_json(growth_transfer));
    w.key("convexity");
    w.raw(zetalab::to_json(convexity));
    w.key("max_log_abs_zeta_mid");
    w.value(max_log_abs_zeta_mid);
    w.key("max_log_abs_z_mid");
    w.value(max_log_abs_z_mid);
    w.key("enclosure");
    w.raw(zetalab::to_json(enclosure));
    w.key("implied_exponent");
    w.value(implied_exponent);
    w.end_object();
    return w.take();
}

PipelineReport backlund_pipeline(double sigma0, double T, double delta,
                                 double lambda, const PrecisionPolicy& policy,
                                 int threads) {
    policy.validate();
    if (!(sigma0 - lambda > 0.0)) {
        throw InfeasibleGeometry(
            "backlund_pipeline: outer radius sigma0 - lambda - eps is not positive");
    }
    if (!(sigma0 > 1.0) || !(sigma0 <= 1.5)) {
        throw DomainError("backlund_pipeline: require 1 < sigma0 <= 3/2");
    }
    if (!(delta > 0.0) || !(delta < sigma0 - 1.0)) {
        throw DomainError("backlund_pipeline: require 0 < delta < sigma0 - 1");
    }
    if (!(lambda >= 0.5) || !(lambda < 1.0)) {
        throw DomainError("backlund_pipeline: require 1/2 <= lambda < 1");
    }
    if (!(T >= 10.0)) {
        throw DomainError("backlund_pipeline: require T >= 10");
    }

    const Cplx s0{sigma0, T};

    // Zeros of zeta near the window: the completed function has the same
    // zero set inside the strip and is easier to track. Its modulus decays
    // like exp(-pi t / 4), so the on-path zero threshold is loosened.
    PrecisionPolicy zero_policy = policy;
    zero_policy.abs_tol = std::min(policy.abs_tol, 1e-25);
    const Rectangle window(0.0, 1.0, T - 1.0, T + 2.0);
    const std::vector<Cplx> strip_zeros =
        find_zeros_rectangle(make_xi(policy), window, zero_policy, 1e-6);

    double eps0 = std::min({(1.0 - lambda + delta) / 6.0,
                            (sigma0 - lambda) / 6.0, 0.25});
    if (strip_zeros.size() >= 2) {
        double minsep = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < strip_zeros.size(); ++i) {
            for (std::size_t j = i + 1; j < strip_zeros.size(); ++j) {
                minsep = std::min(minsep, std::abs(strip_zeros[i] - strip_zeros[j]));
            }
        }
        eps0 = std::min(eps0, 0.25 * minsep);
    }

    // Shrink eps until no zero sits where either it or its circle
    // reflection would puncture log Z between the middle and outer circles.
    double eps = eps0;
    int halvings = 0;
    double R0 = 0.0, R1 = 0.0, R = 0.0;
    const double R2 = sigma0 - 1.0 - delta;
    for (;; ++halvings) {
        R0 = sigma0 - lambda - eps;
        R1 = R0 - eps;
        R = R0 - 2.0 * eps;
        bool clean = true;
        for (const Cplx& z : strip_zeros) {
            const double d = std::abs(z - s0);
            if (d >= R * R / R0 - 1e-6 && d <= R0 + 1e-6) {
                clean = false;
                break;
            }
        }
        if (clean) break;
        if (halvings >= 8) {
            throw InfeasibleGeometry(
                "backlund_pipeline: no eps kept the outer annulus zero-free");
        }
        eps *= 0.5;
    }
    if (!(R2 > 0.0) || !(R2 < R)) {
        throw InfeasibleGeometry("backlund_pipeline: inner radius ordering failed");
    }

    const FnHandle zf = make_zeta(policy);
    const WindingReport wind = count_zeros_disk(zf, Disk(ComplexPoint::from(s0), R), policy);

    std::vector<ComplexPoint> inside;
    for (const Cplx& z : strip_zeros) {
        if (std::abs(z - s0) < R) inside.push_back(ComplexPoint::from(z));
    }
    if (static_cast<int>(inside.size()) != wind.winding) {
        throw PreconditionError(
            "backlund_pipeline: winding count disagrees with located zeros");
    }

    BlaschkeSystem sys{ComplexPoint::from(s0), R, inside};
    sys.validate();
    const FnHandle zh = [sys, policy, zf](Cplx s) {
        Cplx product{1.0, 0.0};
        for (std::size_t k = 0; k < sys.zeros.size(); ++k) {
            product *= blaschke_factor(sys, k, ComplexPoint::from(s));
        }
        return zf(s) * product;
    };

    // Branch anchor at the center (sigma0 > 1, principal log is the
    // continued branch there), then one tracked scan per circle.
    Cplx log_center = std::log(zf(s0));
    for (std::size_t k = 0; k < sys.zeros.size(); ++k) {
        log_center += std::log(blaschke_factor(sys, k, ComplexPoint::from(s0)));
    }

    constexpr int kScanNodes = 2048;
    const CircleScan scan_r0 = scan_log_circle(zh, s0, R0, kScanNodes, policy, threads);
    const CircleScan scan_r1 = scan_log_circle(zh, s0, R1, kScanNodes, policy, threads);
    const CircleScan scan_r = scan_log_circle(zh, s0, R, kScanNodes, policy, threads);
    const CircleScan scan_r2 = scan_log_circle(zh, s0, R2, kScanNodes, policy, threads);

    const auto f_values = [&](const CircleScan& scan) {
        std::vector<Cplx> out(scan.log_values.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = scan.log_values[i] - log_center;
        }
        return out;
    };
    const std::vector<Cplx> f_r0 = f_values(scan_r0);
    const std::vector<Cplx> f_r1 = f_values(scan_r1);
    const std::vector<Cplx> f_r = f_values(scan_r);
    const std::vector<Cplx> f_r2 = f_values(scan_r2);

    PipelineReport rep;
    rep.sigma0 = sigma0;
    rep.T = T;
    rep.delta = delta;
    rep.lambda = lambda;
    rep.eps = eps;
    rep.r0 = R0;
    rep.r1 = R1;
    rep.r = R;
    rep.r2 = R2;
    rep.eps_halvings = halvings;
    rep.k_zeros = wind.winding;
    for (const ComplexPoint& z : inside) rep.zeros.push_back(z.value());
    rep.log_z_center = log_center;
    rep.max_abs_log_z_inner = max_abs(scan_r2.log_values);
    rep.zero_term_bound = static_cast<double>(wind.winding) *
                          std::log((R + sigma0 - 1.0 - delta) / delta);
    rep.measured_offset = rep.max_abs_log_z_inner - rep.zero_term_bound;

    // Growth transfer between the two outermost circles for f = log(Z/Z(s0)).
    {
        std::size_t arg_idx = 0;
        const double m1 = max_abs(f_r1, &arg_idx);
        const double m0 = max_abs(f_r0);
        const double theta = 2.0 * kPi * static_cast<double>(arg_idx) / kScanNodes;
        rep.growth_transfer = CheckReport::make(
            m1, 2.0 * R1 / (R0 - R1) * m0,
            ComplexPoint::from(circle_point(s0, R1, theta)));
    }

    // Convexity of the max modulus across (r2, r, r1).
    {
        std::size_t arg_idx = 0;
        const double m_inner = max_abs(f_r2);
        const double m_mid = max_abs(f_r, &arg_idx);
        const double m_outer = max_abs(f_r1);
        const double a = std::log(R1 / R) / std::log(R1 / R2);
        const double theta = 2.0 * kPi * static_cast<double>(arg_idx) / kScanNodes;
        rep.convexity = CheckReport::make(
            m_mid, std::pow(m_inner, a) * std::pow(m_outer, 1.0 - a),
            ComplexPoint::from(circle_point(s0, R, theta)));
    }

    // Enclosure: |zeta| <= |Z| pointwise on the middle circle, because every
    // regularizing factor has modulus > 1 strictly inside the outer disk.
    {
        std::vector<double> zeta_log(kScanNodes);
        parallel_for(kScanNodes, threads, [&](std::int64_t j) {
            const double theta = 2.0 * kPi * static_cast<double>(j) / kScanNodes;
            zeta_log[static_cast<std::size_t>(j)] =
                std::log(std::abs(zf(circle_point(s0, R, theta))));
        });
        double max_zeta = -std::numeric_limits<double>::infinity();
        std::size_t arg_idx = 0;
        for (std::size_t j = 0; j < zeta_log.size(); ++j) {
            if (zeta_log[j] > max_zeta) {
                max_zeta = zeta_log[j];
                arg_idx = j;
            }
        }
        double max_z = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < kScanNodes; ++j) {
            max_z = std::max(max_z, scan_r.log_values[static_cast<std::size_t>(j)].real());
        }
        rep.max_log_abs_zeta_mid = max_zeta;
        rep.max_log_abs_z_mid = max_z;
        const double theta = 2.0 * kPi * static_cast<double>(arg_idx) / kScanNodes;
        // Compare the moduli rather than their logs: the report formula's
        // relative slack only reads correctly for positive quantities, and
        // with K = 0 the two sides coincide exactly.
        rep.enclosure = CheckReport::make(
            std::exp(max_zeta), std::exp(max_z),
            ComplexPoint::from(circle_point(s0, R, theta)));
    }

    rep.implied_exponent =
        (rep.convexity.rhs + std::abs(log_center)) / std::log(T);
    return rep;
}

}  // namespace zetalab
