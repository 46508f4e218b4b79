// Acceptance gate: one line per criterion, [PASS]/[FAIL] with the measured
// quantity against its pinned threshold. Exit code is the number of failed
// criteria. Every sweep is seeded, so reruns are bit-stable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "zetalab/contour.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/growth.hpp"
#include "zetalab/lemma_lab.hpp"
#include "zetalab/pseudo.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/types.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const char* what, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %s (%s)\n", ok ? "PASS" : "FAIL", idx, what,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

void run(int idx, const char* what,
         const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [ok, detail] = body();
        report(idx, what, ok, detail);
    } catch (const std::exception& e) {
        report(idx, what, false, std::string("exception: ") + e.what());
    }
}

// ------------------------------------------------------------------------

std::pair<bool, std::string> criterion_classical_values() {
    PrecisionPolicy pol;
    pol.abs_tol = 1e-11;
    pol.rel_tol = 1e-11;
    pol.max_terms = 1000000;
    const double targets[2] = {M_PI * M_PI / 6.0, std::pow(M_PI, 4) / 90.0};
    const double ss[2] = {2.0, 4.0};
    double worst_err = 0.0, worst_time = 0.0;
    using Route = EvalResult (*)(ComplexPoint, const PrecisionPolicy&);
    const Route routes[3] = {&zeta_dirichlet, &zeta_global, &zeta_euler_maclaurin};
    for (int i = 0; i < 2; ++i) {
        for (const Route r : routes) {
            const auto t0 = Clock::now();
            const EvalResult v = r(ComplexPoint(ss[i], 0.0), pol);
            worst_time = std::max(worst_time, seconds_since(t0));
            worst_err = std::max(worst_err, std::abs(v.value - targets[i]));
        }
    }
    const bool ok = worst_err < 1e-10 && worst_time < 1.0;
    return {ok, fmt("max |error| %.3g vs 1e-10, slowest route %.3fs vs 1s",
                    worst_err, worst_time)};
}

std::pair<bool, std::string> criterion_cross_method() {
    const PrecisionPolicy pol;
    Rng rng(424242);
    const auto t0 = Clock::now();
    double worst_ratio = 0.0;
    int done = 0;
    while (done < 200) {
        const double sigma = rng.uniform(-2.0, 3.0);
        const double t = rng.uniform(-50.0, 50.0);
        if (std::hypot(sigma - 1.0, t) <= 0.1) continue;
        const ComplexPoint s(sigma, t);
        EvalResult a;
        try {
            a = zeta_global(s, pol);
        } catch (const PrefactorSingular&) {
            continue;  // inside the alternating-sum prefactor guard band
        }
        const EvalResult b = zeta_euler_maclaurin(s, pol);
        const double allowed = 10.0 * (a.err_estimate + b.err_estimate);
        worst_ratio = std::max(worst_ratio, std::abs(a.value - b.value) / allowed);
        ++done;
    }
    const double elapsed = seconds_since(t0);
    const bool ok = worst_ratio <= 1.0 && elapsed < 30.0;
    return {ok, fmt("200 points, worst |diff|/(10*(err_a+err_b)) %.3g vs 1, %.2fs vs 30s",
                    worst_ratio, elapsed)};
}

std::pair<bool, std::string> criterion_trivial_zeros() {
    const PrecisionPolicy pol;
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        worst = std::max(worst, std::abs(zeta(ComplexPoint(-2.0 * n, 0.0), pol).value));
    }
    return {worst < 1e-10, fmt("max |zeta(-2n)| for n=1..5: %.3g vs 1e-10", worst)};
}

std::pair<bool, std::string> criterion_xi_symmetry() {
    const PrecisionPolicy pol;
    Rng rng(777);
    double worst_sym = 0.0, worst_conj = 0.0;
    for (int i = 0; i < 1000; ++i) {
        // uniform over the disk |s| <= 30 by rejection from the square
        double x, y;
        do {
            x = rng.uniform(-30.0, 30.0);
            y = rng.uniform(-30.0, 30.0);
        } while (x * x + y * y > 900.0);
        const ComplexPoint s(x, y);
        const Cplx v = xi(s, pol).value;
        const Cplx v_ref = xi(ComplexPoint(1.0 - x, -y), pol).value;
        const Cplx v_conj = xi(ComplexPoint(x, -y), pol).value;
        const double scale = 1.0 + std::abs(v);
        worst_sym = std::max(worst_sym, std::abs(v_ref - v) / scale);
        worst_conj = std::max(worst_conj, std::abs(v_conj - std::conj(v)) / scale);
    }
    double worst_line = 0.0;
    for (int k = 0; k <= 500; ++k) {
        const Cplx v = xi(ComplexPoint(0.5, 0.1 * k), pol).value;
        worst_line = std::max(worst_line, std::abs(v.imag()) / (1.0 + std::abs(v)));
    }
    const bool ok = worst_sym < 1e-9 && worst_conj < 1e-9 && worst_line < 1e-9;
    return {ok, fmt("reflection %.3g, conjugation %.3g, line Im %.3g, all vs 1e-9",
                    worst_sym, worst_conj, worst_line)};
}

std::pair<bool, std::string> criterion_zero_counts() {
    const PrecisionPolicy pol;
    auto f = make_xi(pol);
    const auto t30 = Clock::now();
    const WindingReport r30 = count_zeros_rectangle(f, Rectangle(0, 1, 0, 30), pol);
    const double e30 = seconds_since(t30);
    PrecisionPolicy track = pol;
    track.abs_tol = 1e-20;  // boundary samples pass close to the upper zeros
    const auto t50 = Clock::now();
    const WindingReport r50 = count_zeros_rectangle(f, Rectangle(0, 1, 0, 50), track);
    const double e50 = seconds_since(t50);
    const bool ok = r30.winding == 3 && r50.winding == 10 && e30 < 60.0 && e50 < 60.0;
    return {ok, fmt("[0,1]x[0,30] -> %d vs 3 in %.2fs; [0,1]x[0,50] -> %d vs 10 in %.2fs; each vs 60s",
                    r30.winding, e30, r50.winding, e50)};
}

std::pair<bool, std::string> criterion_density_windows() {
    const PrecisionPolicy pol;
    const int a = density_window(0.9, 20.0, 5.0, pol);
    const int b = density_window(0.6, 14.1, 0.5, pol);
    return {a == 0 && b == 0,
            fmt("(0.9,20,5) -> %d vs 0; (0.6,14.1,0.5) -> %d vs 0", a, b)};
}

std::pair<bool, std::string> criterion_lemma_sweeps() {
    const PrecisionPolicy pol;
    int viol = 0;
    long done_bc = 0, done_tc = 0, done_j = 0;

    Rng rng_bc(101);
    while (done_bc < 1000) {
        const Cplx c1(rng_bc.uniform(-2.0, 2.0), rng_bc.uniform(-2.0, 2.0));
        const Cplx c2(rng_bc.uniform(-1.0, 1.0), rng_bc.uniform(-1.0, 1.0));
        const Cplx c3(rng_bc.uniform(-0.5, 0.5), rng_bc.uniform(-0.5, 0.5));
        FnHandle f = [=](Cplx s) { return c1 * s + c2 * s * s + c3 * s * s * s; };
        const double r0 = rng_bc.uniform(0.5, 4.0);
        const double r1 = rng_bc.uniform(0.1, 0.9) * r0;
        if (!borel_caratheodory_check(f, r0, r1, 128, pol).holds) ++viol;
        ++done_bc;
    }

    Rng rng_tc(202);
    while (done_tc < 1000) {
        const Cplx c0(rng_tc.uniform(-2.0, 2.0), rng_tc.uniform(-2.0, 2.0));
        const Cplx c1(rng_tc.uniform(-2.0, 2.0), rng_tc.uniform(-2.0, 2.0));
        const Cplx c2(rng_tc.uniform(-1.0, 1.0), rng_tc.uniform(-1.0, 1.0));
        FnHandle f = [=](Cplx s) { return c0 + c1 * s + c2 * s * s * s; };
        double radii[3] = {rng_tc.uniform(0.2, 5.0), rng_tc.uniform(0.2, 5.0),
                           rng_tc.uniform(0.2, 5.0)};
        std::sort(radii, radii + 3);
        if (radii[1] - radii[0] < 1e-6 || radii[2] - radii[1] < 1e-6) continue;
        if (!three_circle_check(f, radii[0], radii[1], radii[2], 128).holds) ++viol;
        ++done_tc;
    }

    Rng rng_j(303);
    while (done_j < 1000) {
        const int deg = rng_j.uniform_int(1, 4);
        std::vector<Cplx> roots;
        for (int k = 0; k < deg; ++k) {
            const double rho = rng_j.uniform(0.0, 0.9);
            const double th = rng_j.uniform(0.0, 2.0 * M_PI);
            roots.emplace_back(rho * std::cos(th), rho * std::sin(th));
        }
        const double r = rng_j.uniform(1.0, 1.5);
        const double R = rng_j.uniform(2.0, 6.0);
        bool usable = true;
        for (const Cplx& root : roots) {
            if (std::abs(std::abs(root) - r) < 1e-3 || std::abs(root) < 1e-3) {
                usable = false;
            }
        }
        if (!usable) continue;
        FnHandle f = [roots](Cplx z) {
            Cplx v(1.0, 0.0);
            for (const Cplx& root : roots) v *= (z - root);
            return v;
        };
        if (!jensen_growth_check(f, ComplexPoint(0.0, 0.0), r, R, pol).holds) ++viol;
        ++done_j;
    }

    double worst_eq = 0.0;  // monomials make the convexity bound an identity
    for (int m = 1; m <= 4; ++m) {
        FnHandle mono = [m](Cplx s) { return std::pow(s, m); };
        const CheckReport rep = three_circle_check(mono, 1.0, 2.0, 4.0, 256);
        worst_eq = std::max(worst_eq, std::abs(rep.lhs - rep.rhs) / rep.rhs);
    }

    const bool ok = viol == 0 && worst_eq <= 1e-12;
    return {ok, fmt("3x1000 instances, %d violations vs 0; monomial identity gap %.3g vs 1e-12",
                    viol, worst_eq)};
}

std::pair<bool, std::string> criterion_argument_cap() {
    // The inequality has order-1 margins, so the handle runs at a relaxed
    // evaluation tolerance; the tracked side keeps a zero threshold far below
    // the exponentially decaying modulus floor on these segments.
    PrecisionPolicy eval_pol;
    eval_pol.abs_tol = 1e-10;
    eval_pol.rel_tol = 1e-8;
    PrecisionPolicy track = eval_pol;
    track.abs_tol = 1e-18;
    auto f = make_xi(eval_pol);
    Rng rng(4040);
    int viol = 0;
    const auto t0 = Clock::now();
    for (int i = 0; i < 1000; ++i) {
        const double sigma = rng.uniform(1.5, 3.0);
        const double start = rng.uniform(0.0, 40.0);
        const double len = rng.uniform(0.5, 8.0);
        const Segment seg(ComplexPoint(sigma, start), ComplexPoint(sigma, start + len));
        if (!lemma21_check(f, seg, track).holds) ++viol;
    }
    return {viol == 0, fmt("1000 zero-free segments, %d violations vs 0, %.1fs",
                           viol, seconds_since(t0))};
}

std::pair<bool, std::string> criterion_surrogates() {
    const PseudoParams p = params_from_height(50.0, 0.5);

    const ComplexPoint half(0.5, 0.0);
    const double at_half = std::max(std::abs(pseudo_zeta(half, p) - 2.0),
                                    std::abs(pseudo_gamma(half, p) - 2.0));

    Rng rng(606060);
    double worst_dual = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const ComplexPoint s(rng.uniform(-10.0, 10.0), rng.uniform(-50.0, 50.0));
        const Cplx a1 = pseudo_zeta(s, p), a2 = pseudo_zeta_expanded(s, p);
        const Cplx g1 = pseudo_gamma(s, p), g2 = pseudo_gamma_expanded(s, p);
        worst_dual = std::max(worst_dual, std::abs(a1 - a2) / std::abs(a1));
        worst_dual = std::max(worst_dual, std::abs(g1 - g2) / std::abs(g1));
    }

    double floor_gap = 0.0;  // A on the real axis stays >= 1
    for (double sigma = -10.0; sigma <= 10.0 + 1e-12; sigma += 0.01) {
        const double a = pseudo_zeta(ComplexPoint(sigma, 0.0), p).real();
        floor_gap = std::max(floor_gap, 1.0 - a);
    }

    // oscillatory-regime lower bound |A| >= 1/3, sampled over its region
    const double cb = case_boundary_t(p);
    const PrecisionPolicy pol;
    const ProbeReport probe =
        ratio_probe_zeta(Rectangle(0.5, 2.0, 0.0, cb * (1.0 - 1e-12)), p, 0.05, pol);
    const double min_a = probe.denom_inf;

    const bool ok = at_half <= 1e-12 && worst_dual <= 1e-12 &&
                    floor_gap <= 1e-12 && min_a >= 1.0 / 3.0;
    return {ok, fmt("|A,grad at 1/2 - 2| %.3g vs 1e-12; dual-path %.3g vs 1e-12; "
                    "axis floor gap %.3g vs 1e-12; min |A| %.3f vs 1/3",
                    at_half, worst_dual, floor_gap, min_a)};
}

std::pair<bool, std::string> criterion_pipeline() {
    const PrecisionPolicy pol;
    const auto t0 = Clock::now();
    const PipelineReport rep = backlund_pipeline(1.25, 30.0, 0.1, 0.5, pol);
    const double elapsed = seconds_since(t0);

    // independent recount of the marked zeros over the same disk
    auto fz = make_zeta(pol);
    const WindingReport recount =
        count_zeros_disk(fz, Disk(ComplexPoint(1.25, 30.0), rep.r0), pol);

    const bool ok = rep.k_zeros == recount.winding && rep.growth_transfer.holds &&
                    rep.convexity.holds && rep.enclosure.holds && elapsed < 120.0;
    return {ok, fmt("K %d vs recount %d; transfer/convexity/enclosure %d/%d/%d; %.2fs vs 120s",
                    rep.k_zeros, recount.winding, int(rep.growth_transfer.holds),
                    int(rep.convexity.holds), int(rep.enclosure.holds), elapsed)};
}

struct CliRun {
    int rc = -1;
    std::string out;
};

CliRun run_cli(const std::string& exe, const std::string& args) {
    const std::string cmd = exe + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    CliRun r;
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::pair<bool, std::string> criterion_thread_determinism() {
    const char* exe = std::getenv("ZETALAB_CLI");
    if (!exe) return {false, "ZETALAB_CLI not set"};
    const std::vector<std::string> invocations = {
        "eval --s 2+0i",
        "eval --s 4+0i",
        "eval --s -1.3+37.2i --method global-sum",
        "eval --s -1.3+37.2i --method euler-maclaurin",
        "eval --s -4+0i",
        "eval --function xi --s 0.3+20i",
        "zeros --rect 0,1,0,30",
        "zeros --rect 0,1,0,50",
        "density --lambda 0.9 --T 20 --E 5",
        "density --lambda 0.6 --T 14.1 --E 0.5",
        "verify --suite all --n 25",
        "probe --kind zeta --rect 0.5,2,0,19 --step 0.1 --Y 50 --delta 0.5",
        "probe --kind gamma --center 0.5+0i --radius 5 --samples 256 --Y 50 --delta 0.5",
        "growth --sigma 0.5 --t-min 3 --t-max 40 --step 0.1 --format json",
        "backlund --sigma0 1.25 --T 30 --delta 0.1 --lambda 0.5",
    };
    int mismatches = 0;
    for (const std::string& inv : invocations) {
        const CliRun one = run_cli(exe, inv + " --threads 1");
        const CliRun eight = run_cli(exe, inv + " --threads 8");
        if (one.rc != eight.rc || one.out != eight.out || one.rc != 0) ++mismatches;
    }
    return {mismatches == 0, fmt("%zu invocations x {1,8} threads, %d mismatches vs 0",
                                 invocations.size(), mismatches)};
}

}  // namespace

int main() {
    run(1, "classical values via every route", criterion_classical_values);
    run(2, "cross-method agreement in the strip", criterion_cross_method);
    run(3, "trivial zeros vanish", criterion_trivial_zeros);
    run(4, "completed-function symmetries", criterion_xi_symmetry);
    run(5, "strip zero counts", criterion_zero_counts);
    run(6, "empty density windows", criterion_density_windows);
    run(7, "growth/convexity/zero-forced sweeps", criterion_lemma_sweeps);
    run(8, "argument cap on zero-free segments", criterion_argument_cap);
    run(9, "quartic surrogate suite", criterion_surrogates);
    run(10, "regularized growth-transfer pipeline", criterion_pipeline);
    run(11, "thread-count determinism via the cli", criterion_thread_determinism);

    std::printf("%d of 11 criteria failed\n", g_failures);
    return g_failures;
}
