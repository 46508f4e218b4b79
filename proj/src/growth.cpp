#include "zetalab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "zetalab/parallel.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

void validate_range(double t_min, double t_max, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw DomainError("scan_line: step must be positive");
    }
    if (!(t_min >= 3.0) || !(t_max >= t_min) || !(t_max <= 500.0)) {
        throw DomainError("scan_line: require 3 <= t_min <= t_max <= 500");
    }
}

Cplx eval_with_fallback(ComplexPoint s, const PrecisionPolicy& policy) {
    try {
        return zeta(s, policy).value;
    } catch (const PrefactorSingular&) {
        return zeta_euler_maclaurin(s, policy).value;
    }
}

std::string format_row(const GrowthSample& s) {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  s.t, s.sigma, s.value.real(), s.value.imag(), s.log_abs_zeta,
                  s.ratio);
    return buf;
}

}  // namespace

std::vector<GrowthSample> scan_line(double sigma, double t_min, double t_max,
                                    double step, const PrecisionPolicy& policy,
                                    int threads) {
    policy.validate();
    validate_range(t_min, t_max, step);
    const std::int64_t n =
        static_cast<std::int64_t>(std::floor((t_max - t_min) / step + 1e-9));
    std::vector<GrowthSample> samples(static_cast<std::size_t>(n));
    parallel_for(n, threads, [&](std::int64_t k) {
        const double t = t_min + static_cast<double>(k) * step;
        GrowthSample& s = samples[static_cast<std::size_t>(k)];
        s.t = t;
        s.sigma = sigma;
        s.value = eval_with_fallback(ComplexPoint(sigma, t), policy);
        s.log_abs_zeta = std::log(std::abs(s.value));
        s.ratio = s.log_abs_zeta / std::log(t);
    });
    return samples;
}

MuEstimate mu_estimate(double sigma, double t_min, double t_max, double step,
                       const PrecisionPolicy& policy, int threads) {
    const std::vector<GrowthSample> samples =
        scan_line(sigma, t_min, t_max, step, policy, threads);
    if (samples.empty()) {
        throw DomainError("mu_estimate: empty grid (t_min == t_max)");
    }
    MuEstimate est;
    est.sigma = sigma;
    est.t_min = t_min;
    est.t_max = t_max;
    est.step = step;
    est.sup_ratio = -std::numeric_limits<double>::infinity();
    est.fitted_c = 0.0;
    for (const GrowthSample& s : samples) {
        if (s.ratio > est.sup_ratio) {
            est.sup_ratio = s.ratio;
            est.argmax_t = s.t;
        }
        const double c = std::abs(s.value) * std::pow(s.t, -(1.0 - sigma) / 2.0);
        est.fitted_c = std::max(est.fitted_c, c);
    }
    return est;
}

CheckReport bound_check_zetaupd(double delta, double t_max,
                                const PrecisionPolicy& policy, int threads) {
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw DomainError("bound_check_zetaupd: require 0 < delta < 1");
    }
    if (!(t_max >= 3.0)) {
        throw DomainError("bound_check_zetaupd: require t_max >= 3");
    }

    constexpr double kStep = 0.05;
    const double exponent = (1.0 - delta) / 2.0;

    double strip_c = 0.0;
    ComplexPoint witness(delta, 3.0);
    for (int row = 0; row < 5; ++row) {
        const double sigma = delta + (1.0 - delta) * static_cast<double>(row) / 4.0;
        const std::vector<GrowthSample> samples =
            scan_line(sigma, 3.0, t_max, kStep, policy, threads);
        for (const GrowthSample& s : samples) {
            const double c = std::abs(s.value) * std::pow(s.t, -exponent);
            if (c > strip_c) {
                strip_c = c;
                witness = ComplexPoint(sigma, s.t);
            }
        }
    }

    double log_c = 0.0;
    for (const GrowthSample& s :
         scan_line(1.5, 3.0, t_max, kStep, policy, threads)) {
        log_c = std::max(log_c, std::abs(s.value) / std::log(s.t));
    }

    CheckReport rep;
    rep.lhs = strip_c;
    rep.rhs = log_c;
    rep.holds = std::isfinite(strip_c) && std::isfinite(log_c);
    rep.witness = witness;
    return rep;
}

std::string to_csv(const std::vector<GrowthSample>& samples) {
    std::string out = "t,sigma,re_zeta,im_zeta,log_abs,ratio\n";
    for (const GrowthSample& s : samples) {
        out += format_row(s);
    }
    return out;
}

std::string svg_line_plot(const std::vector<GrowthSample>& samples) {
    constexpr int kW = 960;
    constexpr int kH = 400;
    constexpr int kPad = 46;

    double t_lo = 0.0, t_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    if (!samples.empty()) {
        t_lo = samples.front().t;
        t_hi = samples.back().t;
        y_lo = std::numeric_limits<double>::infinity();
        y_hi = -y_lo;
        for (const GrowthSample& s : samples) {
            y_lo = std::min(y_lo, s.log_abs_zeta);
            y_hi = std::max(y_hi, s.log_abs_zeta);
        }
        if (t_hi <= t_lo) t_hi = t_lo + 1.0;
        if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    }

    const auto sx = [&](double t) {
        return kPad + (t - t_lo) / (t_hi - t_lo) * (kW - 2 * kPad);
    };
    const auto sy = [&](double y) {
        return kH - kPad - (y - y_lo) / (y_hi - y_lo) * (kH - 2 * kPad);
    };

    char buf[160];
    std::string svg;
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                  "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  kW, kH, kW, kH);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" "
                  "stroke=\"black\"/>\n",
                  kPad, kH - kPad, kW - kPad, kH - kPad);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" "
                  "stroke=\"black\"/>\n",
                  kPad, kPad, kPad, kH - kPad);
    svg += buf;
    if (!samples.empty()) {
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%d\" y=\"%d\" font-size=\"12\">t in [%.6g, "
                      "%.6g]</text>\n",
                      kPad, kH - kPad + 28, t_lo, t_hi);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"6\" y=\"%d\" font-size=\"12\">log|zeta| in "
                      "[%.6g, %.6g]</text>\n",
                      kPad - 14, y_lo, y_hi);
        svg += buf;
        svg += "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < samples.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%s%.3f,%.3f", i ? " " : "",
                          sx(samples[i].t), sy(samples[i].log_abs_zeta));
            svg += buf;
        }
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace zetalab
