#include "zexplore/figures.hpp"

#include <cmath>

#include "zexplore/argtrack.hpp"
#include "zexplore/complexfn.hpp"
#include "zexplore/counterexample.hpp"
#include "zexplore/csv.hpp"

namespace zexplore {

namespace {

// rho = start + i * step, computed from the index so grids are reproducible
template <class F>
void over_grid(double start, double stop, double step, F&& f) {
    const int n = static_cast<int>(std::lround((stop - start) / step));
    for (int i = 0; i <= n; ++i) f(start + i * step);
}

}  // namespace

void write_figure1(std::ostream& os, const EvalConfig& cfg) {
    const double sigma = 1.0 / 3.0;
    ArgTracker a(AngleKind::Alpha, sigma, cfg), at(AngleKind::AlphaTilde, sigma, cfg);
    CsvWriter w(os, {"rho", "alpha_sum_tracked", "alpha_p_closed", "k", "principal_sum"});
    over_grid(0.05, 30.0, 0.05, [&](double rho) {
        const double sum = a.advance_to(rho) + at.advance_to(rho);
        const ComplexPoint s{sigma, rho};
        const Winding k = winding_k(s, sum);
        w << rho << sum << alpha_p_closed(s, k.k) << k.k << a.principal() + at.principal();
        w.end_row();
    });
}

void write_figure2(std::ostream& os, const EvalConfig& cfg) {
    ArgTracker a(AngleKind::Alpha, 0.5, cfg);
    const int anchor = brent_anchor(cfg);
    CsvWriter w(os, {"rho", "alpha_tracked", "brent_continuous", "brent_principal", "diff_continuous_over_pi",
                     "diff_principal_over_pi"});
    over_grid(10.0, 18.0, 0.01, [&](double rho) {
        const BrentComparison b = brent_compare(rho, a.advance_to(rho), anchor);
        w << rho << b.alpha << b.brent_continuous << b.brent_principal << b.diff_continuous_over_pi
          << b.diff_principal_over_pi;
        w.end_row();
    });
}

double beta_minus_alpha(double rho, const EvalConfig& cfg) {
    ZetaJet j = zeta_jet({0.5, rho}, cfg, 1);
    const double d = wrap_pi(principal_arg(j.d1) - principal_arg(j.z));  // (-pi, pi]
    return d <= -kPi / 2 ? d + 2 * kPi : d;
}

void write_figure3(std::ostream& os, const EvalConfig& cfg) {
    CsvWriter w(os, {"rho", "beta_minus_alpha"});
    over_grid(30.0, 50.0, 0.01, [&](double rho) {
        w << rho << beta_minus_alpha(rho, cfg);
        w.end_row();
    });
}

void write_figure4(std::ostream& os, const EvalConfig& cfg) {
    CsvWriter w(os, {"sigma", "abs_zc", "abs_zc_reflected", "ratio"});
    for (const Fig4Row& r : figure4_data(CounterexampleConfig{}, 201, cfg)) {
        w << r.sigma << r.abs_zc << r.abs_zc_reflected << r.ratio;
        w.end_row();
    }
}

}  // namespace zexplore
