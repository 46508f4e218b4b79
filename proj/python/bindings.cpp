#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetalab/contour.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/growth.hpp"
#include "zetalab/lemma_lab.hpp"
#include "zetalab/pseudo.hpp"
#include "zetalab/types.hpp"
#include "zetalab/zeta.hpp"

namespace py = pybind11;
using namespace zetalab;

namespace {

py::dict eval_dict(const EvalResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["err_estimate"] = r.err_estimate;
    d["terms_used"] = r.terms_used;
    d["method"] = to_string(r.method);
    return d;
}

py::dict winding_dict(const WindingReport& r) {
    py::dict d;
    d["winding"] = r.winding;
    d["residual"] = r.residual;
    d["min_boundary_modulus"] = r.min_boundary_modulus;
    d["max_refinement_depth"] = r.max_refinement_depth;
    d["segments_evaluated"] = r.segments_evaluated;
    return d;
}

py::dict check_dict(const CheckReport& r) {
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["holds"] = r.holds;
    d["witness"] = r.witness.value();
    return d;
}

py::dict mu_dict(const MuEstimate& m) {
    py::dict d;
    d["sigma"] = m.sigma;
    d["sup_ratio"] = m.sup_ratio;
    d["argmax_t"] = m.argmax_t;
    d["t_min"] = m.t_min;
    d["t_max"] = m.t_max;
    d["step"] = m.step;
    d["fitted_c"] = m.fitted_c;
    return d;
}

}  // namespace

PYBIND11_MODULE(_zetalab, m) {
    m.doc() = "numerical complex-analysis toolkit for the zeta family";

    // Register the base first so the subclasses' translators take precedence.
    py::register_exception<Error>(m, "ZetalabError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ZeroOnPath>(m, "ZeroOnPath", PyExc_RuntimeError);

    py::class_<PrecisionPolicy>(m, "PrecisionPolicy")
        .def(py::init([](double abs_tol, double rel_tol, std::int64_t max_terms,
                         double pole_guard_radius, int max_depth) {
                 PrecisionPolicy p;
                 p.abs_tol = abs_tol;
                 p.rel_tol = rel_tol;
                 p.max_terms = max_terms;
                 p.pole_guard_radius = pole_guard_radius;
                 p.max_depth = max_depth;
                 p.validate();
                 return p;
             }),
             py::arg("abs_tol") = 1e-12, py::arg("rel_tol") = 1e-10,
             py::arg("max_terms") = 100000, py::arg("pole_guard_radius") = 1e-3,
             py::arg("max_depth") = 40)
        .def_readwrite("abs_tol", &PrecisionPolicy::abs_tol)
        .def_readwrite("rel_tol", &PrecisionPolicy::rel_tol)
        .def_readwrite("max_terms", &PrecisionPolicy::max_terms)
        .def_readwrite("pole_guard_radius", &PrecisionPolicy::pole_guard_radius)
        .def_readwrite("max_depth", &PrecisionPolicy::max_depth)
        .def("validate", &PrecisionPolicy::validate);

    py::class_<PseudoParams>(m, "PseudoParams")
        .def_readonly("B", &PseudoParams::B)
        .def_readonly("C", &PseudoParams::C)
        .def_readonly("R", &PseudoParams::R)
        .def_readonly("Y", &PseudoParams::Y)
        .def_readonly("delta", &PseudoParams::delta);

    const PrecisionPolicy default_policy{};

    m.def(
        "zeta",
        [](std::complex<double> s, const PrecisionPolicy& p) {
            return eval_dict(zeta(ComplexPoint::from(s), p));
        },
        py::arg("s"), py::arg("policy") = default_policy,
        "route-dispatched zeta evaluation with an error estimate");
    m.def(
        "zeta_dirichlet",
        [](std::complex<double> s, const PrecisionPolicy& p) {
            return eval_dict(zeta_dirichlet(ComplexPoint::from(s), p));
        },
        py::arg("s"), py::arg("policy") = default_policy);
    m.def(
        "zeta_global",
        [](std::complex<double> s, const PrecisionPolicy& p) {
            return eval_dict(zeta_global(ComplexPoint::from(s), p));
        },
        py::arg("s"), py::arg("policy") = default_policy);
    m.def(
        "zeta_euler_maclaurin",
        [](std::complex<double> s, const PrecisionPolicy& p) {
            return eval_dict(zeta_euler_maclaurin(ComplexPoint::from(s), p));
        },
        py::arg("s"), py::arg("policy") = default_policy);
    m.def(
        "xi",
        [](std::complex<double> s, const PrecisionPolicy& p) {
            return eval_dict(xi(ComplexPoint::from(s), p));
        },
        py::arg("s"), py::arg("policy") = default_policy,
        "completed, symmetric form: entire, invariant under s -> 1-s");
    m.def(
        "log_gamma", [](std::complex<double> s) { return log_gamma(s); },
        py::arg("s"), "principal-branch-continuous log of the Gamma function");

    m.def("params_from_height", &params_from_height, py::arg("Y"), py::arg("delta"));
    m.def(
        "pseudo_zeta",
        [](std::complex<double> s, const PseudoParams& p) {
            return pseudo_zeta(ComplexPoint::from(s), p);
        },
        py::arg("s"), py::arg("params"));
    m.def(
        "pseudo_zeta_expanded",
        [](std::complex<double> s, const PseudoParams& p) {
            return pseudo_zeta_expanded(ComplexPoint::from(s), p);
        },
        py::arg("s"), py::arg("params"));
    m.def(
        "pseudo_gamma",
        [](std::complex<double> s, const PseudoParams& p) {
            return pseudo_gamma(ComplexPoint::from(s), p);
        },
        py::arg("s"), py::arg("params"));
    m.def(
        "pseudo_gamma_expanded",
        [](std::complex<double> s, const PseudoParams& p) {
            return pseudo_gamma_expanded(ComplexPoint::from(s), p);
        },
        py::arg("s"), py::arg("params"));
    m.def("case_boundary_t", &case_boundary_t, py::arg("params"));

    m.def(
        "im_log_delta",
        [](const std::function<Cplx(Cplx)>& f, std::complex<double> a,
           std::complex<double> b, const PrecisionPolicy& p) {
            return im_log_delta(f, Segment(ComplexPoint::from(a), ComplexPoint::from(b)), p);
        },
        py::arg("f"), py::arg("start"), py::arg("end"),
        py::arg("policy") = default_policy,
        "continuous change of arg f along the segment");
    m.def(
        "count_zeros_rectangle",
        [](const std::function<Cplx(Cplx)>& f, double sigma_min, double sigma_max,
           double t_min, double t_max, const PrecisionPolicy& p) {
            return winding_dict(count_zeros_rectangle(
                f, Rectangle(sigma_min, sigma_max, t_min, t_max), p));
        },
        py::arg("f"), py::arg("sigma_min"), py::arg("sigma_max"), py::arg("t_min"),
        py::arg("t_max"), py::arg("policy") = default_policy,
        "argument-principle zero count for an arbitrary callable");
    m.def(
        "count_xi_zeros",
        [](double sigma_min, double sigma_max, double t_min, double t_max,
           const PrecisionPolicy& p) {
            // native handle; boundary tracking gets the deep zero threshold
            // since the completed function decays exponentially in height
            PrecisionPolicy track = p;
            track.abs_tol = std::min(p.abs_tol, 1e-20);
            return winding_dict(count_zeros_rectangle(
                make_xi(p), Rectangle(sigma_min, sigma_max, t_min, t_max), track));
        },
        py::arg("sigma_min"), py::arg("sigma_max"), py::arg("t_min"), py::arg("t_max"),
        py::arg("policy") = default_policy,
        "zero count of the completed function over a strip rectangle");
    m.def("density_window", &density_window, py::arg("lmbda"), py::arg("T"),
          py::arg("E"), py::arg("policy") = default_policy,
          "zeros with real part above lmbda in the height window T +/- E");

    m.def(
        "mu_estimate",
        [](double sigma, double t_min, double t_max, double step,
           const PrecisionPolicy& p) {
            return mu_dict(mu_estimate(sigma, t_min, t_max, step, p));
        },
        py::arg("sigma"), py::arg("t_min"), py::arg("t_max"), py::arg("step"),
        py::arg("policy") = default_policy,
        "sup of log|zeta|/log t along a horizontal line plus a fitted envelope");
    m.def(
        "scan_csv",
        [](double sigma, double t_min, double t_max, double step,
           const PrecisionPolicy& p) {
            return to_csv(scan_line(sigma, t_min, t_max, step, p));
        },
        py::arg("sigma"), py::arg("t_min"), py::arg("t_max"), py::arg("step"),
        py::arg("policy") = default_policy);

    m.def(
        "borel_caratheodory_check",
        [](const std::function<Cplx(Cplx)>& f, double r0, double r1,
           std::int64_t n_samples, const PrecisionPolicy& p) {
            return check_dict(borel_caratheodory_check(f, r0, r1, n_samples, p));
        },
        py::arg("f"), py::arg("r0"), py::arg("r1"), py::arg("n_samples") = 128,
        py::arg("policy") = default_policy);
    m.def(
        "three_circle_check",
        [](const std::function<Cplx(Cplx)>& f, double r1, double r, double r2,
           std::int64_t n_samples) {
            return check_dict(three_circle_check(f, r1, r, r2, n_samples));
        },
        py::arg("f"), py::arg("r1"), py::arg("r"), py::arg("r2"),
        py::arg("n_samples") = 128);
    m.def(
        "jensen_growth_check",
        [](const std::function<Cplx(Cplx)>& f, std::complex<double> z0, double r,
           double R, const PrecisionPolicy& p) {
            return check_dict(jensen_growth_check(f, ComplexPoint::from(z0), r, R, p));
        },
        py::arg("f"), py::arg("z0"), py::arg("r"), py::arg("R"),
        py::arg("policy") = default_policy);

    m.def(
        "backlund_pipeline",
        [](double sigma0, double T, double delta, double lambda,
           const PrecisionPolicy& p) {
            const PipelineReport r = backlund_pipeline(sigma0, T, delta, lambda, p);
            py::dict d;
            d["sigma0"] = r.sigma0;
            d["T"] = r.T;
            d["delta"] = r.delta;
            d["lambda"] = r.lambda;
            d["eps"] = r.eps;
            d["eps_halvings"] = r.eps_halvings;
            d["r0"] = r.r0;
            d["r1"] = r.r1;
            d["r"] = r.r;
            d["r2"] = r.r2;
            d["k_zeros"] = r.k_zeros;
            d["zeros"] = r.zeros;
            d["log_z_center"] = r.log_z_center;
            d["max_abs_log_z_inner"] = r.max_abs_log_z_inner;
            d["zero_term_bound"] = r.zero_term_bound;
            d["measured_offset"] = r.measured_offset;
            d["growth_transfer"] = check_dict(r.growth_transfer);
            d["convexity"] = check_dict(r.convexity);
            d["max_log_abs_zeta_mid"] = r.max_log_abs_zeta_mid;
            d["max_log_abs_z_mid"] = r.max_log_abs_z_mid;
            d["enclosure"] = check_dict(r.enclosure);
            d["implied_exponent"] = r.implied_exponent;
            return d;
        },
        py::arg("sigma0"), py::arg("T"), py::arg("delta"), py::arg("lmbda"),
        py::arg("policy") = default_policy,
        "regularized growth-transfer pipeline report as a dict");

    m.attr("__version__") = "0.1.0";
}
