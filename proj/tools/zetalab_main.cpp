// zetalab command-line front end.
//
// Subcommands map one-to-one onto the library surface: eval (zeta / completed
// xi at a point), zeros (argument-principle count over a rectangle), density
// (strip-window zero count), growth (line scans to CSV/SVG, growth-exponent
// fit to JSON), probe (surrogate ratio sups), verify (randomized inequality
// sweeps), backlund (the regularized growth-transfer pipeline).
//
// Exit codes: 0 success, 2 bad arguments / domain violations, 3 numerical
// failures (budgets, overflow, zeros on paths), 4 a verification sweep found
// a violated inequality. Output is deterministic: fixed key order, %.17g
// floats, and thread-count independence for everything parallel.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zetalab/contour.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/growth.hpp"
#include "zetalab/json_writer.hpp"
#include "zetalab/lemma_lab.hpp"
#include "zetalab/pseudo.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/types.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

struct CommonOpts {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::int64_t max_terms = 100000;
    double pole_guard = 1e-3;
    std::uint64_t seed = 1905;
    int threads = 0;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts* o) {
    cmd->add_option("--policy-abs-tol", o->abs_tol, "absolute truncation tolerance");
    cmd->add_option("--policy-rel-tol", o->rel_tol, "relative truncation tolerance");
    cmd->add_option("--policy-max-terms", o->max_terms, "series term budget");
    cmd->add_option("--pole-guard", o->pole_guard, "exclusion radius around poles");
    cmd->add_option("--seed", o->seed, "seed for randomized sweeps");
    cmd->add_option("--threads", o->threads,
                    "worker threads (0 = ZETALAB_THREADS or 1)");
    cmd->add_option("--out", o->out, "write output to this file instead of stdout");
}

PrecisionPolicy policy_of(const CommonOpts& o) {
    PrecisionPolicy p;
    p.abs_tol = o.abs_tol;
    p.rel_tol = o.rel_tol;
    p.max_terms = o.max_terms;
    p.pole_guard_radius = o.pole_guard;
    p.validate();
    return p;
}

int emit(const CommonOpts& o, const std::string& payload) {
    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw DomainError("cannot open output file: " + o.out);
        f << payload << '\n';
        return 0;
    }
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    std::fputc('\n', stdout);
    return 0;
}

Cplx parse_complex(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    const char* p = t.c_str();
    char* end = nullptr;
    const double re = std::strtod(p, &end);
    if (end == p) {
        throw DomainError("parse error: expected a complex literal like 1.5-2i, got '" +
                          text + "'");
    }
    if (*end == '\0') return Cplx(re, 0.0);
    const char* q = end;
    char* end2 = nullptr;
    const double im = std::strtod(q, &end2);
    if (end2 == q || end2[0] != 'i' || end2[1] != '\0') {
        throw DomainError("parse error: expected a complex literal like 1.5-2i, got '" +
                          text + "'");
    }
    return Cplx(re, im);
}

std::vector<double> parse_csv_doubles(const std::string& text, std::size_t want,
                                      const char* what) {
    std::vector<double> v;
    const char* p = text.c_str();
    while (true) {
        char* end = nullptr;
        const double x = std::strtod(p, &end);
        if (end == p) break;
        v.push_back(x);
        p = end;
        if (*p != ',') break;
        ++p;
    }
    if (v.size() != want || *p != '\0') {
        throw DomainError(std::string("parse error: ") + what + " needs " +
                          std::to_string(want) + " comma-separated numbers, got '" +
                          text + "'");
    }
    return v;
}

// ---------------------------------------------------------------- eval ----

struct EvalOpts {
    CommonOpts common;
    std::string s_text;
    std::string function = "zeta";
    std::string method = "auto";
};

int run_eval(const EvalOpts& eo) {
    const PrecisionPolicy pol = policy_of(eo.common);
    const Cplx z = parse_complex(eo.s_text);
    const ComplexPoint s = ComplexPoint::from(z);

    EvalResult r;
    if (eo.function == "xi") {
        if (eo.method != "auto") {
            throw DomainError("--method applies only to --function zeta");
        }
        r = xi(s, pol);
    } else if (eo.method == "auto") {
        r = zeta(s, pol);
    } else if (eo.method == "dirichlet") {
        r = zeta_dirichlet(s, pol);
    } else if (eo.method == "global-sum") {
        r = zeta_global(s, pol);
    } else {
        r = zeta_euler_maclaurin(s, pol);
    }

    JsonWriter w;
    w.begin_object();
    w.key("function").value(eo.function);
    w.key("sigma").value(s.sigma());
    w.key("t").value(s.t());
    w.key("re").value(r.value.real());
    w.key("im").value(r.value.imag());
    w.key("err_estimate").value(r.err_estimate);
    w.key("terms_used").value(r.terms_used);
    w.key("method").value(to_string(r.method));
    w.end_object();
    return emit(eo.common, w.take());
}

// --------------------------------------------------------------- zeros ----

struct ZerosOpts {
    CommonOpts common;
    std::string rect_text;
    bool locate = false;
    double loc_tol = 1e-6;
};

int run_zeros(const ZerosOpts& zo) {
    const PrecisionPolicy pol = policy_of(zo.common);
    const std::vector<double> v =
        parse_csv_doubles(zo.rect_text, 4, "--rect sigma_min,sigma_max,t_min,t_max");
    const Rectangle rect(v[0], v[1], v[2], v[3]);
    auto f = make_xi(pol);

    // The completed function decays exponentially in height, so boundary
    // samples of a tall box dip far below any reasonable truncation
    // tolerance without a zero being anywhere near the path; the tracked zero
    // threshold therefore sits well under the evaluation tolerance. Location
    // bisection needs the same split even harder, since its interior cut
    // lines can pass arbitrarily close to a zero.
    PrecisionPolicy track = pol;
    track.abs_tol = std::min(pol.abs_tol, 1e-20);

    if (zo.locate) {
        const std::vector<Cplx> zs = find_zeros_rectangle(f, rect, track, zo.loc_tol);
        JsonWriter w;
        w.begin_object();
        w.key("count").value(static_cast<std::int64_t>(zs.size()));
        w.key("zeros").begin_array();
        for (const Cplx& z : zs) {
            w.begin_object();
            w.key("sigma").value(z.real());
            w.key("t").value(z.imag());
            w.end_object();
        }
        w.end_array();
        w.end_object();
        return emit(zo.common, w.take());
    }

    const WindingReport rep = count_zeros_rectangle(f, rect, track);
    return emit(zo.common, to_json(rep));
}

// ------------------------------------------------------------- density ----

struct DensityOpts {
    CommonOpts common;
    double lambda = 0.75;
    double T = 20.0;
    double E = 1.0;
};

int run_density(const DensityOpts& d) {
    const PrecisionPolicy pol = policy_of(d.common);
    const int n = density_window(d.lambda, d.T, d.E, pol);
    JsonWriter w;
    w.begin_object();
    w.key("lambda").value(d.lambda);
    w.key("T").value(d.T);
    w.key("E").value(d.E);
    w.key("count").value(n);
    w.end_object();
    return emit(d.common, w.take());
}

// -------------------------------------------------------------- growth ----

struct GrowthOpts {
    CommonOpts common;
    double sigma = 0.5;
    double t_min = 3.0;
    double t_max = 50.0;
    double step = 0.1;
    std::string format = "csv";
};

int run_growth(const GrowthOpts& g) {
    const PrecisionPolicy pol = policy_of(g.common);
    if (g.format == "json") {
        const MuEstimate mu =
            mu_estimate(g.sigma, g.t_min, g.t_max, g.step, pol, g.common.threads);
        JsonWriter w;
        w.begin_object();
        w.key("sigma").value(mu.sigma);
        w.key("sup_ratio").value(mu.sup_ratio);
        w.key("argmax_t").value(mu.argmax_t);
        w.key("t_min").value(mu.t_min);
        w.key("t_max").value(mu.t_max);
        w.key("step").value(mu.step);
        w.key("fitted_c").value(mu.fitted_c);
        w.end_object();
        return emit(g.common, w.take());
    }
    const std::vector<GrowthSample> samples =
        scan_line(g.sigma, g.t_min, g.t_max, g.step, pol, g.common.threads);
    if (g.format == "svg") return emit(g.common, svg_line_plot(samples));
    std::string csv = to_csv(samples);
    if (!csv.empty() && csv.back() == '\n') csv.pop_back();  // emit adds one
    return emit(g.common, csv);
}

// --------------------------------------------------------------- probe ----

struct ProbeOpts {
    CommonOpts common;
    std::string kind = "zeta";
    std::string rect_text = "0.5,2,0,20";
    std::string center_text = "0.5+0i";
    double radius = 5.0;
    std::int64_t samples = 512;
    double step = 0.05;
    double Y = 50.0;
    double delta = 0.5;
};

int run_probe(const ProbeOpts& po) {
    const PrecisionPolicy pol = policy_of(po.common);
    const PseudoParams params = params_from_height(po.Y, po.delta);
    ProbeReport rep;
    if (po.kind == "gamma") {
        const Cplx c = parse_complex(po.center_text);
        const Disk disk(ComplexPoint::from(c), po.radius);
        rep = ratio_probe_gamma(disk, params, po.samples, pol, po.common.threads);
    } else {
        const std::vector<double> v =
            parse_csv_doubles(po.rect_text, 4, "--rect sigma_min,sigma_max,t_min,t_max");
        const Rectangle rect(v[0], v[1], v[2], v[3]);
        rep = ratio_probe_zeta(rect, params, po.step, pol, po.common.threads);
    }
    return emit(po.common, rep.to_json());
}

// -------------------------------------------------------------- verify ----

struct VerifyOpts {
    CommonOpts common;
    std::string suite = "all";
    std::int64_t n = 1000;
};

struct SweepOutcome {
    std::int64_t instances = 0;
    std::int64_t violations = 0;
};

SweepOutcome sweep_growth_transfer(std::uint64_t seed, std::int64_t n,
                                   const PrecisionPolicy& pol) {
    Rng rng(seed, 1);
    SweepOutcome out;
    for (std::int64_t i = 0; i < n; ++i) {
        const Cplx c1(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const Cplx c2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const Cplx c3(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        FnHandle f = [=](Cplx s) { return c1 * s + c2 * s * s + c3 * s * s * s; };
        const double r0 = rng.uniform(0.5, 4.0);
        const double r1 = rng.uniform(0.1, 0.9) * r0;
        ++out.instances;
        if (!borel_caratheodory_check(f, r0, r1, 128, pol).holds) ++out.violations;
    }
    return out;
}

SweepOutcome sweep_convexity(std::uint64_t seed, std::int64_t n) {
    Rng rng(seed, 2);
    SweepOutcome out;
    for (std::int64_t i = 0; i < n; ++i) {
        const Cplx c0(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const Cplx c1(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const Cplx c2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        FnHandle f = [=](Cplx s) { return c0 + c1 * s + c2 * s * s * s; };
        double radii[3] = {rng.uniform(0.2, 5.0), rng.uniform(0.2, 5.0),
                           rng.uniform(0.2, 5.0)};
        std::sort(radii, radii + 3);
        if (radii[1] - radii[0] < 1e-6 || radii[2] - radii[1] < 1e-6) continue;
        ++out.instances;
        if (!three_circle_check(f, radii[0], radii[1], radii[2], 128).holds) {
            ++out.violations;
        }
    }
    return out;
}

SweepOutcome sweep_zero_forced(std::uint64_t seed, std::int64_t n,
                               const PrecisionPolicy& pol) {
    Rng rng(seed, 3);
    SweepOutcome out;
    for (std::int64_t i = 0; i < n; ++i) {
        const int deg = rng.uniform_int(1, 4);
        std::vector<Cplx> roots;
        for (int k = 0; k < deg; ++k) {
            const double rho = rng.uniform(0.0, 0.9);
            const double th = rng.uniform(0.0, 2.0 * M_PI);
            roots.emplace_back(rho * std::cos(th), rho * std::sin(th));
        }
        const double r = rng.uniform(1.0, 1.5);
        const double R = rng.uniform(2.0, 6.0);
        bool usable = true;
        for (const Cplx& root : roots) {
            if (std::abs(std::abs(root) - r) < 1e-3) usable = false;
            if (std::abs(root) < 1e-3) usable = false;
        }
        if (!usable) continue;
        FnHandle f = [roots](Cplx z) {
            Cplx v(1.0, 0.0);
            for (const Cplx& root : roots) v *= (z - root);
            return v;
        };
        ++out.instances;
        if (!jensen_growth_check(f, ComplexPoint(0.0, 0.0), r, R, pol).holds) {
            ++out.violations;
        }
    }
    return out;
}

SweepOutcome sweep_argument_cap(std::uint64_t seed, std::int64_t n,
                                const PrecisionPolicy& pol) {
    // Zero-free vertical segments of the completed function right of the
    // critical strip. The inequality margins here are of order 1, so the
    // handle runs at a relaxed evaluation tolerance (the default one costs
    // ~100x more per point for no extra decision power); the tracked side
    // still gets a zero threshold far below the exponentially decaying
    // modulus floor.
    PrecisionPolicy eval_pol = pol;
    eval_pol.abs_tol = std::max(pol.abs_tol, 1e-10);
    eval_pol.rel_tol = std::max(pol.rel_tol, 1e-8);
    PrecisionPolicy track = eval_pol;
    track.abs_tol = 1e-18;
    auto f = make_xi(eval_pol);
    Rng rng(seed, 4);
    SweepOutcome out;
    for (std::int64_t i = 0; i < n; ++i) {
        const double sigma = rng.uniform(1.5, 3.0);
        const double t0 = rng.uniform(0.0, 40.0);
        const double len = rng.uniform(0.5, 8.0);
        const Segment seg(ComplexPoint(sigma, t0), ComplexPoint(sigma, t0 + len));
        ++out.instances;
        if (!lemma21_check(f, seg, track).holds) ++out.violations;
    }
    return out;
}

int run_verify(const VerifyOpts& vo) {
    const PrecisionPolicy pol = policy_of(vo.common);
    if (vo.n < 1) throw DomainError("--n must be >= 1");

    JsonWriter w;
    w.begin_object();
    w.key("suite").value(vo.suite);
    w.key("seed").value(static_cast<std::int64_t>(vo.common.seed));
    std::int64_t total = 0;
    w.key("sweeps").begin_object();
    auto put = [&](const char* name, const SweepOutcome& o) {
        w.key(name).begin_object();
        w.key("instances").value(o.instances);
        w.key("violations").value(o.violations);
        w.end_object();
        total += o.violations;
    };
    const bool all = vo.suite == "all";
    if (all || vo.suite == "bc") {
        put("growth_transfer", sweep_growth_transfer(vo.common.seed, vo.n, pol));
    }
    if (all || vo.suite == "three-circle") {
        put("convexity", sweep_convexity(vo.common.seed, vo.n));
    }
    if (all || vo.suite == "jensen") {
        put("zero_forced", sweep_zero_forced(vo.common.seed, vo.n, pol));
    }
    if (all || vo.suite == "xi-argument") {
        put("argument_cap", sweep_argument_cap(vo.common.seed, vo.n, pol));
    }
    w.end_object();
    w.key("total_violations").value(total);
    w.key("holds").value(total == 0);
    w.end_object();
    emit(vo.common, w.take());
    return total == 0 ? 0 : 4;
}

// ------------------------------------------------------------ backlund ----

struct BacklundOpts {
    CommonOpts common;
    double sigma0 = 1.25;
    double T = 30.0;
    double delta = 0.1;
    double lambda = 0.5;
};

int run_backlund(const BacklundOpts& b) {
    const PrecisionPolicy pol = policy_of(b.common);
    const PipelineReport rep =
        backlund_pipeline(b.sigma0, b.T, b.delta, b.lambda, pol, b.common.threads);
    return emit(b.common, rep.to_json());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical complex-analysis toolkit for the zeta family"};
    app.require_subcommand(1);

    EvalOpts eo;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate zeta or the completed xi");
    eval_cmd->add_option("--s", eo.s_text, "point, as a complex literal a+bi")->required();
    eval_cmd->add_option("--function", eo.function, "zeta | xi")
        ->check(CLI::IsMember({"zeta", "xi"}));
    eval_cmd->add_option("--method", eo.method,
                         "auto | dirichlet | global-sum | euler-maclaurin")
        ->check(CLI::IsMember({"auto", "dirichlet", "global-sum", "euler-maclaurin"}));
    add_common(eval_cmd, &eo.common);

    ZerosOpts zo;
    CLI::App* zeros_cmd =
        app.add_subcommand("zeros", "count (or locate) completed-xi zeros in a rectangle");
    zeros_cmd->add_option("--rect", zo.rect_text, "sigma_min,sigma_max,t_min,t_max")
        ->required();
    zeros_cmd->add_flag("--locate", zo.locate, "also bisect down to zero locations");
    zeros_cmd->add_option("--loc-tol", zo.loc_tol, "location box tolerance");
    add_common(zeros_cmd, &zo.common);

    DensityOpts dn;
    CLI::App* density_cmd =
        app.add_subcommand("density", "count zeros in a right-strip window");
    density_cmd->add_option("--lambda", dn.lambda, "left edge of the strip")->required();
    density_cmd->add_option("--T", dn.T, "window center height")->required();
    density_cmd->add_option("--E", dn.E, "window half-height")->required();
    add_common(density_cmd, &dn.common);

    GrowthOpts gr;
    CLI::App* growth_cmd =
        app.add_subcommand("growth", "scan |zeta| along a horizontal line");
    growth_cmd->add_option("--sigma", gr.sigma, "real part of the line")->required();
    growth_cmd->add_option("--t-min", gr.t_min, "scan start height");
    growth_cmd->add_option("--t-max", gr.t_max, "scan end height");
    growth_cmd->add_option("--step", gr.step, "grid step");
    growth_cmd->add_option("--format", gr.format, "csv | svg | json")
        ->check(CLI::IsMember({"csv", "svg", "json"}));
    add_common(growth_cmd, &gr.common);

    ProbeOpts po;
    CLI::App* probe_cmd =
        app.add_subcommand("probe", "sup of zeta/Gamma against their quartic surrogates");
    probe_cmd->add_option("--kind", po.kind, "zeta | gamma")
        ->check(CLI::IsMember({"zeta", "gamma"}));
    probe_cmd->add_option("--rect", po.rect_text,
                          "zeta probe region sigma_min,sigma_max,t_min,t_max");
    probe_cmd->add_option("--step", po.step, "zeta probe grid step");
    probe_cmd->add_option("--center", po.center_text, "gamma probe circle center a+bi");
    probe_cmd->add_option("--radius", po.radius, "gamma probe circle radius");
    probe_cmd->add_option("--samples", po.samples, "gamma probe boundary samples");
    probe_cmd->add_option("--Y", po.Y, "surrogate height parameter");
    probe_cmd->add_option("--delta", po.delta, "surrogate margin parameter");
    add_common(probe_cmd, &po.common);

    VerifyOpts vo;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "randomized inequality sweeps; exit 4 on violation");
    verify_cmd->add_option("--suite", vo.suite,
                           "bc | three-circle | jensen | xi-argument | all")
        ->check(CLI::IsMember({"bc", "three-circle", "jensen", "xi-argument", "all"}));
    verify_cmd->add_option("--n", vo.n, "instances per sweep");
    add_common(verify_cmd, &vo.common);

    BacklundOpts bk;
    CLI::App* backlund_cmd =
        app.add_subcommand("backlund", "run the regularized growth-transfer pipeline");
    backlund_cmd->add_option("--sigma0", bk.sigma0, "disk center real part")->required();
    backlund_cmd->add_option("--T", bk.T, "disk center height")->required();
    backlund_cmd->add_option("--delta", bk.delta, "zero-term margin")->required();
    backlund_cmd->add_option("--lambda", bk.lambda, "strip edge")->required();
    add_common(backlund_cmd, &bk.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eo);
        if (zeros_cmd->parsed()) return run_zeros(zo);
        if (density_cmd->parsed()) return run_density(dn);
        if (growth_cmd->parsed()) return run_growth(gr);
        if (probe_cmd->parsed()) return run_probe(po);
        if (verify_cmd->parsed()) return run_verify(vo);
        if (backlund_cmd->parsed()) return run_backlund(bk);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const PoleError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const InfeasibleGeometry& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        // budget, overflow, zero-on-path, depth, winding, prefactor guards
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
