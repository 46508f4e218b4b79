#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

using Cplx = std::complex<double>;

// A point s = sigma + i*t of the complex plane. Construction validates both
// components, so NaN/Inf never propagate into the evaluators.
class ComplexPoint {
public:
    ComplexPoint() = default;
    ComplexPoint(double sigma, double t) : sigma_(sigma), t_(t) {
        if (!std::isfinite(sigma) || !std::isfinite(t)) {
            throw DomainError("ComplexPoint: components must be finite");
        }
    }
    static ComplexPoint from(Cplx z) { return ComplexPoint(z.real(), z.imag()); }

    double sigma() const { return sigma_; }
    double t() const { return t_; }
    Cplx value() const { return Cplx(sigma_, t_); }

private:
    double sigma_ = 0.0;
    double t_ = 0.0;
};

// Tolerances and budgets shared by every evaluator. abs_tol/rel_tol control
// truncation, max_terms caps series length, pole_guard_radius is the exclusion
// distance around poles and prefactor zeros, max_depth caps adaptive bisection.
struct PrecisionPolicy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::int64_t max_terms = 100000;
    double pole_guard_radius = 1e-3;
    int max_depth = 40;

    void validate() const {
        if (!(abs_tol > 0.0) || !(abs_tol < 1.0) || !std::isfinite(abs_tol)) {
            throw DomainError("PrecisionPolicy: abs_tol must be in (0,1)");
        }
        if (!(rel_tol > 0.0) || !(rel_tol < 1.0) || !std::isfinite(rel_tol)) {
            throw DomainError("PrecisionPolicy: rel_tol must be in (0,1)");
        }
        if (max_terms < 1 || max_terms > 10000000) {
            throw DomainError("PrecisionPolicy: max_terms must be in [1, 1e7]");
        }
        if (!(pole_guard_radius > 0.0) || !std::isfinite(pole_guard_radius)) {
            throw DomainError("PrecisionPolicy: pole_guard_radius must be > 0");
        }
        if (max_depth < 1 || max_depth > 64) {
            throw DomainError("PrecisionPolicy: max_depth must be in [1, 64]");
        }
    }
};

enum class Method {
    dirichlet,
    global_sum,
    euler_maclaurin,
};

std::string to_string(Method m);

// One zeta evaluation: value, an honest error bound (truncation + rounding
// conditioning), the number of terms/rows consumed, and the route taken.
struct EvalResult {
    Cplx value;
    double err_estimate = 0.0;
    std::int64_t terms_used = 0;
    Method method = Method::dirichlet;
};

enum class GammaMethod {
    weierstrass_product,
    stirling_asymptotic,
};

std::string to_string(GammaMethod m);

// log Gamma with a continuously tracked argument; exp(log_value) is the value.
struct GammaResult {
    Cplx log_value;
    GammaMethod method = GammaMethod::weierstrass_product;
};

// Directed straight segment. Degenerate segments are rejected.
class Segment {
public:
    Segment(ComplexPoint start, ComplexPoint end) : start_(start), end_(end) {
        if (start.value() == end.value()) {
            throw DomainError("Segment: start and end coincide");
        }
    }
    ComplexPoint start() const { return start_; }
    ComplexPoint end() const { return end_; }
    double length() const { return std::abs(end_.value() - start_.value()); }
    Cplx at(double tau) const {
        return start_.value() + tau * (end_.value() - start_.value());
    }

private:
    ComplexPoint start_, end_;
};

// Axis-aligned open rectangle (sigma_min, sigma_max) x (t_min, t_max).
class Rectangle {
public:
    Rectangle(double sigma_min, double sigma_max, double t_min, double t_max)
        : sigma_min_(sigma_min), sigma_max_(sigma_max), t_min_(t_min), t_max_(t_max) {
        if (!std::isfinite(sigma_min) || !std::isfinite(sigma_max) ||
            !std::isfinite(t_min) || !std::isfinite(t_max)) {
            throw DomainError("Rectangle: bounds must be finite");
        }
        if (!(sigma_min < sigma_max) || !(t_min < t_max)) {
            throw DomainError("Rectangle: need sigma_min < sigma_max and t_min < t_max");
        }
    }
    double sigma_min() const { return sigma_min_; }
    double sigma_max() const { return sigma_max_; }
    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }

private:
    double sigma_min_, sigma_max_, t_min_, t_max_;
};

// Closed disk. Radius zero is allowed (degenerate single-point probes);
// operations that need interior points enforce positivity themselves.
class Disk {
public:
    Disk(ComplexPoint center, double radius) : center_(center), radius_(radius) {
        if (!std::isfinite(radius) || radius < 0.0) {
            throw DomainError("Disk: radius must be finite and >= 0");
        }
    }
    ComplexPoint center() const { return center_; }
    double radius() const { return radius_; }

private:
    ComplexPoint center_;
    double radius_;
};

// Result of a closed-rectangle argument-principle count.
struct WindingReport {
    int winding = 0;
    double residual = 0.0;  // |raw/2pi - winding| before rounding
    double min_boundary_modulus = 0.0;
    int max_refinement_depth = 0;
    std::int64_t segments_evaluated = 0;
};

// Outcome of one inequality check. holds <=> lhs <= rhs * (1 + 1e-9).
struct CheckReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    ComplexPoint witness;

    static CheckReport make(double lhs, double rhs, ComplexPoint witness) {
        CheckReport r;
        r.lhs = lhs;
        r.rhs = rhs;
        r.holds = lhs <= rhs * (1.0 + 1e-9);
        r.witness = witness;
        return r;
    }
};

// One sample of log|zeta| growth along a horizontal line.
struct GrowthSample {
    double t = 0.0;
    double sigma = 0.0;
    Cplx value;
    double log_abs_zeta = 0.0;
    double ratio = 0.0;  // log|zeta| / log t
};

// Sup of the growth ratio over a scan plus the fitted one-sided constant c
// in |zeta(sigma+it)| <= c * t^((1-sigma)/2).
struct MuEstimate {
    double sigma = 0.0;
    double sup_ratio = 0.0;
    double argmax_t = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    double step = 0.0;
    double fitted_c = 0.0;
};

}  // namespace zetalab
