#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "zetalab/contour.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

const PrecisionPolicy kPolicy{};

FnHandle cubic() {
    return [](Cplx z) { return (z - Cplx(0.3, 0.4)) * (z - Cplx(-0.2, 0.9)) * (z + Cplx(0.5, 0.5)); };
}

}  // namespace

TEST_CASE("argument tracking matches a dense fixed-step walk") {
    auto f = cubic();
    const Segment seg(ComplexPoint(1.0, -1.0), ComplexPoint(-2.0, 2.0));
    const double mine = im_log_delta(f, seg, kPolicy);
    const double ref = oracle::dense_im_log_delta(f, seg.start().value(),
                                                  seg.end().value(), 1e-4);
    CHECK(std::abs(mine - ref) < 1e-8);
}

TEST_CASE("tracking is antisymmetric under path reversal") {
    auto f = cubic();
    const Segment fwd(ComplexPoint(1.0, -1.0), ComplexPoint(-2.0, 2.0));
    const Segment bwd(ComplexPoint(-2.0, 2.0), ComplexPoint(1.0, -1.0));
    const double a = im_log_delta(f, fwd, kPolicy);
    const double b = im_log_delta(f, bwd, kPolicy);
    CHECK(std::abs(a + b) < 1e-12);
}

TEST_CASE("tracking is stable against the initial slicing") {
    auto f = make_xi(kPolicy);
    const Segment seg(ComplexPoint(1.5, 0.0), ComplexPoint(1.5, 20.0));
    const double d8 = im_log_delta(f, seg, kPolicy);
    for (int subdiv : {1, 3, 16, 64}) {
        CHECK(std::abs(im_log_delta(f, seg, kPolicy, subdiv) - d8) < 1e-9);
    }
}

TEST_CASE("completed-function argument change against the dense oracle") {
    PrecisionPolicy pol = kPolicy;
    pol.rel_tol = 1e-7;  // the oracle walks 30001 evaluations; keep each one cheap
    auto f = make_xi(pol);
    const Segment seg(ComplexPoint(2.0, 0.0), ComplexPoint(2.0, 30.0));
    const double mine = im_log_delta(f, seg, pol);
    const double ref = oracle::dense_im_log_delta(f, Cplx(2.0, 0.0), Cplx(2.0, 30.0), 1e-3);
    CHECK(std::abs(mine - ref) < 1e-6);
}

TEST_CASE("zero or grazing samples on the path are refused") {
    FnHandle ident = [](Cplx z) { return z; };
    // the subdivision lands a node exactly on the zero
    CHECK_THROWS_AS(
        im_log_delta(ident, Segment(ComplexPoint(-1.0, 0.0), ComplexPoint(1.0, 0.0)), kPolicy),
        ZeroOnPath);
}

TEST_CASE("refinement depth is capped when the jump cannot shrink") {
    // A zero off the dyadic subdivision lattice: the arg flips by pi inside
    // an interval no refinement level can straddle tightly enough.
    FnHandle f = [](Cplx z) { return z - Cplx(0.3, 0.0); };
    PrecisionPolicy pol = kPolicy;
    pol.abs_tol = 1e-200;  // keep the zero tolerance out of the way
    const Segment seg(ComplexPoint(-1.0, 0.0), ComplexPoint(1.0, 0.0));
    CHECK_THROWS_AS(im_log_delta(f, seg, pol), DepthExceeded);
}

TEST_CASE("sign changes of the real part along a segment") {
    FnHandle f = [](Cplx z) { return z * z - 2.0; };
    const Segment seg(ComplexPoint(-2.0, 0.0), ComplexPoint(2.0, 0.0));
    CHECK(sign_change_count(f, seg, 1e-3) == 2);
    FnHandle g = [](Cplx z) { return std::exp(z); };
    const Segment vert(ComplexPoint(1.0, 0.0), ComplexPoint(1.0, 3.0));
    CHECK(sign_change_count(g, vert, 1e-3) == 1);  // Re e^z flips at t = pi/2
}

TEST_CASE("argument change is bounded by the sign-change count") {
    FnHandle g = [](Cplx z) { return std::exp(z); };
    const Segment vert(ComplexPoint(1.0, 0.0), ComplexPoint(1.0, 3.0));
    const CheckReport r = lemma21_check(g, vert, kPolicy);
    CHECK(r.holds);
    CHECK(r.lhs == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(2.0 * M_PI).epsilon(1e-12));

    // zero-free vertical segments right of the critical strip
    auto f = make_xi(kPolicy);
    Rng rng(808);
    for (int i = 0; i < 25; ++i) {
        const double sigma = rng.uniform(1.5, 3.0);
        const double t0 = rng.uniform(0.0, 40.0);
        const double len = rng.uniform(0.5, 8.0);
        const CheckReport rep = lemma21_check(
            f, Segment(ComplexPoint(sigma, t0), ComplexPoint(sigma, t0 + len)), kPolicy);
        CHECK(rep.holds);
    }
}

TEST_CASE("winding counts for the completed function") {
    auto f = make_xi(kPolicy);
    const WindingReport r30 = count_zeros_rectangle(f, Rectangle(0.0, 1.0, 0.0, 30.0), kPolicy);
    CHECK(r30.winding == 3);
    CHECK(r30.residual < 1e-6);
    CHECK(r30.min_boundary_modulus > 0.0);

    // additive under a horizontal split
    const WindingReport lo = count_zeros_rectangle(f, Rectangle(0.0, 1.0, 0.0, 20.0), kPolicy);
    const WindingReport hi = count_zeros_rectangle(f, Rectangle(0.0, 1.0, 20.0, 30.0), kPolicy);
    CHECK(lo.winding == 1);
    CHECK(hi.winding == 2);
    CHECK(lo.winding + hi.winding == r30.winding);

    // a disk hugging the first zero sees exactly that zero
    const WindingReport d = count_zeros_disk(
        f, Disk(ComplexPoint(0.5, oracle::kZeroOrdinates[0]), 1.0), kPolicy);
    CHECK(d.winding == 1);

    // reflected rectangle counts the conjugate zeros identically
    const WindingReport neg =
        count_zeros_rectangle(f, Rectangle(0.0, 1.0, -30.0, 0.0 - 1e-9), kPolicy);
    CHECK(neg.winding == 3);
}

TEST_CASE("empty regions count zero") {
    auto f = make_xi(kPolicy);
    CHECK(count_zeros_rectangle(f, Rectangle(0.0, 1.0, 1.0, 13.0), kPolicy).winding == 0);
    CHECK(count_zeros_disk(f, Disk(ComplexPoint(2.0, 10.0), 0.5), kPolicy).winding == 0);
}

TEST_CASE("off-line density windows come back empty") {
    CHECK(density_window(0.9, 20.0, 5.0, kPolicy) == 0);
    CHECK(density_window(0.6, 14.1, 0.5, kPolicy) == 0);
}

TEST_CASE("density window validates its geometry") {
    CHECK_THROWS_AS(density_window(0.4, 20.0, 5.0, kPolicy), DomainError);
    CHECK_THROWS_AS(density_window(1.0, 20.0, 5.0, kPolicy), DomainError);
    CHECK_THROWS_AS(density_window(0.9, 20.0, 0.0, kPolicy), DomainError);
    CHECK_THROWS_AS(density_window(0.9, 3.0, 5.0, kPolicy), DomainError);
}

TEST_CASE("zero search pins the first three ordinates") {
    auto f = make_xi(kPolicy);
    // the location bisection cuts pass arbitrarily close to the zeros they
    // corner, so tracking needs a zero tolerance far below the target values
    PrecisionPolicy track = kPolicy;
    track.abs_tol = 1e-20;
    const auto zeros = find_zeros_rectangle(f, Rectangle(0.0, 1.0, 0.0, 30.0), track, 1e-6);
    REQUIRE(zeros.size() == 3);
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        CHECK(std::abs(zeros[k] - Cplx(0.5, oracle::kZeroOrdinates[k])) < 1e-5);
    }
    // sorted by height
    CHECK(zeros[0].imag() < zeros[1].imag());
    CHECK(zeros[1].imag() < zeros[2].imag());
}

TEST_CASE("winding report serialization carries the count") {
    auto f = cubic();
    const WindingReport r = count_zeros_rectangle(f, Rectangle(-1.0, 1.0, -1.0, 1.0), kPolicy);
    CHECK(r.winding == 3);
    const std::string js = to_json(r);
    CHECK(js.find("\"winding\":3") != std::string::npos);
    CHECK(js.find("\"residual\"") != std::string::npos);
}

TEST_CASE("window decomposition validates and produces finite parts") {
    const PseudoParams p = params_from_height(50.0, 0.5);
    CHECK_THROWS_AS(window_decomposition(0.4, 30.0, 2.0, 0.05, p, kPolicy), DomainError);
    CHECK_THROWS_AS(window_decomposition(0.75, 30.0, 2.0, 0.0, p, kPolicy), DomainError);
    CHECK_THROWS_AS(window_decomposition(0.75, 30.0, 0.0, 0.05, p, kPolicy), DomainError);

    const WindowDecomposition w = window_decomposition(0.75, 30.0, 2.0, 0.05, p, kPolicy);
    CHECK(w.x_left == doctest::Approx(0.70).epsilon(1e-15));
    for (double part : {w.main_upper_lower_at_2, w.main_upper_lower_at_left, w.main_bridge,
                        w.zeta_shift_at_2, w.zeta_shift_at_left, w.gamma_shift_at_2,
                        w.gamma_shift_at_left, w.translate_zeta, w.translate_gamma,
                        w.combination}) {
        CHECK(std::isfinite(part));
    }
    const std::string js = w.to_json();
    CHECK(js.find("\"combination\"") != std::string::npos);
}
