// Generates tests/data/regression.json: values that have no closed form but
// must stay put between builds. Run once, eyeball the numbers, commit the
// file. Tests compare against it with tight tolerances.

#include <cstdio>
#include <string>

#include "zetalab/contour.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/growth.hpp"
#include "zetalab/json_writer.hpp"
#include "zetalab/lemma_lab.hpp"
#include "zetalab/pseudo.hpp"

using namespace zetalab;

int main(int argc, char** argv) {
    const std::string out_path =
        argc > 1 ? argv[1] : "tests/data/regression.json";

    PrecisionPolicy pol;
    const FnHandle fxi = make_xi(pol);

    JsonWriter w;
    w.begin_object();

    {
        const WindingReport r30 =
            count_zeros_rectangle(fxi, Rectangle(0.0, 1.0, 0.0, 30.0), pol);
        PrecisionPolicy track = pol;
        track.abs_tol = 1e-20;  // |xi| ~ 1e-17 near t = 50 is not a zero
        const WindingReport r50 =
            count_zeros_rectangle(fxi, Rectangle(0.0, 1.0, 0.0, 50.0), track);
        w.key("zero_count_box30");
        w.value(static_cast<std::int64_t>(r30.winding));
        w.key("zero_count_box50");
        w.value(static_cast<std::int64_t>(r50.winding));
    }

    {
        const Segment seg(ComplexPoint(0.6, 14.0), ComplexPoint(0.6, 15.0));
        const int sc = sign_change_count(fxi, seg, 1e-3, pol);
        w.key("sign_changes_xi_06_14_15");
        w.value(static_cast<std::int64_t>(sc));
    }

    {
        const PseudoParams p = params_from_height(50.0, 0.5);
        const ProbeReport pr =
            ratio_probe_zeta(Rectangle(0.5, 2.0, 0.0, 20.0), p, 0.05, pol);
        w.key("probe_zeta_sup");
        w.value(pr.sup);
        w.key("probe_zeta_grid_step");
        w.value(pr.grid_step);
    }

    {
        const PseudoParams p = params_from_height(20.0, 0.5);
        const ProbeReport pg =
            ratio_probe_gamma(Disk(ComplexPoint(0.5, 0.0), 5.0), p, 512, pol);
        w.key("probe_gamma_sup");
        w.value(pg.sup);
        w.key("probe_gamma_samples");
        w.value(pg.samples);
    }

    {
        const MuEstimate mu = mu_estimate(1.0, 3.0, 100.0, 0.05, pol);
        w.key("mu_sigma1_sup_ratio");
        w.value(mu.sup_ratio);
        w.key("mu_sigma1_fitted_c");
        w.value(mu.fitted_c);
        w.key("mu_sigma1_argmax_t");
        w.value(mu.argmax_t);
    }

    {
        const CheckReport bc = bound_check_zetaupd(0.5, 100.0, pol);
        w.key("bound_delta05_c");
        w.value(bc.lhs);
        w.key("bound_delta05_c_prime");
        w.value(bc.rhs);
    }

    {
        const PseudoParams p = params_from_height(50.0, 0.5);
        const WindowDecomposition d =
            window_decomposition(0.75, 30.0, 2.0, 0.05, p, pol);
        w.key("window_combination");
        w.value(d.combination);
        w.key("window_main_at_2");
        w.value(d.main_upper_lower_at_2);
    }

    w.end_object();

    FILE* f = std::fopen(out_path.c_str(), "w");
    if (!f) {
        std::fprintf(stderr, "cannot open %s\n", out_path.c_str());
        return 1;
    }
    const std::string text = w.str() + "\n";
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
    std::printf("wrote %s\n%s", out_path.c_str(), text.c_str());
    return 0;
}
