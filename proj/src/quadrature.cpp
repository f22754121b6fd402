#include "zexplore/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace zexplore {

namespace {

struct Panel {
    double a, b, fa, fm, fb, whole;
};

double recurse(const std::function<double(double)>& f, const Panel& p, double tol, int depth,
               QuadResult& out) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
    const double flm = f(lm), frm = f(rm);
    out.evaluations += 2;
    const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
    const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
    const double delta = left + right - p.whole;
    // below roundoff further halving only chases noise
    const double floor = 64.0 * 2.2e-16 * (std::abs(left) + std::abs(right));
    const bool exhausted = depth <= 0 || out.evaluations > 200000;
    if (exhausted || std::abs(delta) <= std::max(15.0 * tol, floor)) {
        if (exhausted && std::abs(delta) > 15.0 * tol) out.converged = false;
        out.error_estimate += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return recurse(f, {p.a, m, p.fa, flm, p.fm, left}, tol / 2.0, depth - 1, out) +
           recurse(f, {m, p.b, p.fm, frm, p.fb, right}, tol / 2.0, depth - 1, out);
}

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double abs_tol, int max_depth) {
    QuadResult out;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    out.evaluations = 3;
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    out.value = recurse(f, {a, b, fa, fm, fb, whole}, abs_tol, max_depth, out);
    return out;
}

}  // namespace zexplore
