#include "zexplore/zeros.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "zexplore/argtrack.hpp"
#include "zexplore/complexfn.hpp"
#include "zexplore/csv.hpp"
#include "zexplore/symbols.hpp"

namespace zexplore {

namespace {

using C = ComplexValue;

constexpr double kScanStep = 0.02;
constexpr double kRefineTol = 1e-11;

double bisect(const std::function<double(double)>& f, double lo, double hi, double flo) {
    while (hi - lo > kRefineTol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Sign changes of f on [a, b] sampled every kScanStep, refined by bisection.
std::vector<double> roots(const std::function<double(double)>& f, double a, double b) {
    std::vector<double> out;
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / kScanStep)));
    double x0 = a, f0 = f(a);
    for (int i = 1; i <= n; ++i) {
        const double x1 = a + (b - a) * i / n, f1 = f(x1);
        if (f0 == 0.0) out.push_back(x0);
        else if ((f0 < 0) != (f1 < 0) && f1 != 0.0) out.push_back(bisect(f, x0, x1, f0));
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) out.push_back(x0);
    return out;
}

// Distance on the doubled-angle unit circle between tan(L) and N/D.
double tan_residual(double L, double N, double D) {
    return std::abs(std::polar(1.0, 2 * L) - std::polar(1.0, 2 * std::atan2(N, D)));
}

ConditionResult scalar_condition(std::string name, double lhs, double rhs, double tol) {
    ConditionResult c{std::move(name), lhs, rhs};
    c.residual = std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    c.holds = c.residual < tol;
    return c;
}

ConditionResult tan_condition(std::string name, double L, double N, double D, double tol) {
    ConditionResult c{std::move(name), std::tan(L), N / D};
    c.residual = tan_residual(L, N, D);
    c.holds = c.residual < tol;
    return c;
}

}  // namespace

const char* zero_kind_name(ZeroKind k) {
    switch (k) {
        case ZeroKind::FULL: return "FULL";
        case ZeroKind::REAL_HALF: return "REAL_HALF";
        case ZeroKind::IMAG_HALF: return "IMAG_HALF";
    }
    return "?";
}

double hardy_z(double t, const EvalConfig& cfg) {
    const double vartheta = log_gamma({0.25, t / 2}).imag() - t / 2 * std::log(kPi);
    return (std::polar(1.0, vartheta) * zeta({0.5, t}, cfg)).real();
}

double approach_residual(double rho0, double delta, const EvalConfig& cfg) {
    auto deviation = [&](double rho) {
        ZetaJet j = zeta_jet({0.5, rho}, cfg, 1);
        return std::remainder(principal_arg(j.z) - principal_arg(j.d1) - kPi / 2, kPi);
    };
    // alpha - beta is smooth mod pi through the zero, so the O(delta) terms cancel
    return std::abs(0.5 * (deviation(rho0 - delta) + deviation(rho0 + delta)));
}

namespace {
void require_finite_range(double rho_min, double rho_max) {
    if (!std::isfinite(rho_min) || !std::isfinite(rho_max))
        throw std::invalid_argument("zero search: rho range must be finite");
}
}  // namespace

std::vector<ZeroRecord> find_zeros(double rho_min, double rho_max, const EvalConfig& cfg) {
    require_finite_range(rho_min, rho_max);
    if (!(rho_max > rho_min)) return {};
    const double lo = std::max(rho_min, 1e-3);
    auto Z = [&](double t) { return hardy_z(t, cfg); };
    std::vector<double> found = roots(Z, lo, rho_max);

    std::vector<ZeroRecord> out;
    const double delta = 1e-4;
    ArgTracker alpha(AngleKind::Alpha, 0.5, cfg), beta(AngleKind::Beta, 0.5, cfg);
    for (double rho0 : found) {
        ZeroRecord r;
        r.rho0 = rho0;
        r.kind = ZeroKind::FULL;
        r.residual_abs_zeta = std::abs(zeta({0.5, rho0}, cfg));
        const double a_before = alpha.advance_to(rho0 - delta);
        const double b_before = beta.advance_to(rho0 - delta);
        r.n = static_cast<int>(std::lround((a_before - b_before) / kPi - 0.5));
        r.beta0 = beta.advance_to(rho0);
        r.criterion_residual = approach_residual(rho0, delta, cfg);
        const std::size_t seen = alpha.trace().jump_events.size();
        const double a_after = alpha.advance_to(rho0 + delta);
        r.alpha_jump_over_pi = static_cast<int>(std::lround((a_after - a_before) / kPi));
        if (alpha.trace().jump_events.size() > seen)
            r.alpha_jump_over_pi = alpha.trace().jump_events.back().jump_over_pi;
        out.push_back(r);
    }
    return out;
}

std::vector<ZeroRecord> find_half_zeros(double rho_min, double rho_max, ZeroKind kind, const EvalConfig& cfg) {
    if (kind == ZeroKind::FULL) throw std::invalid_argument("find_half_zeros: kind must be a half-zero kind");
    require_finite_range(rho_min, rho_max);
    if (!(rho_max > rho_min)) return {};
    const bool real_half = kind == ZeroKind::REAL_HALF;
    auto comp = [&](double t) {
        C z = zeta({0.5, t}, cfg);
        return real_half ? z.real() : z.imag();
    };
    std::vector<ZeroRecord> out;
    ArgTracker alpha(AngleKind::Alpha, 0.5, cfg);
    for (double rho0 : roots(comp, std::max(rho_min, 1e-3), rho_max)) {
        ZetaJet j = zeta_jet({0.5, rho0}, cfg, 1);
        const double other = real_half ? j.z.imag() : j.z.real();
        if (std::abs(other) < 1e-6) continue;  // a full zero, not a half-zero
        ZeroRecord r;
        r.rho0 = rho0;
        r.kind = kind;
        r.residual_abs_zeta = std::abs(real_half ? j.z.real() : j.z.imag());
        const double a = alpha.advance_to(rho0);
        const double offset = real_half ? 0.5 : 0.0;
        r.n = static_cast<int>(std::lround(a / kPi - offset));
        r.criterion_residual = std::abs(a - (r.n + offset) * kPi);
        r.beta0 = principal_arg(j.d1);
        // d zeta_R / d rho = -Im zeta'
        r.anomalous = !real_half && j.z.real() < 0 && -j.d1.imag() > 0;
        out.push_back(r);
    }
    return out;
}

void write_zero_csv(std::ostream& os, const std::vector<ZeroRecord>& zeros) {
    CsvWriter w(os, {"kind", "rho0", "n", "residual", "beta0"});
    for (const auto& z : zeros) {
        w << zero_kind_name(z.kind) << z.rho0 << z.n << z.residual_abs_zeta << z.beta0;
        w.end_row();
    }
}

const ConditionResult* ZeroConditionReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

bool ZeroConditionReport::all_hold() const {
    for (const auto& c : conditions)
        if (!c.holds) return false;
    return !conditions.empty();
}

ZeroConditionReport zero_conditions(ComplexPoint s0, ComplexValue d1, ComplexValue d1_reflected, double tol) {
    const SymbolSet y = build_symbols(s0, ZetaBundle{});
    const double z1r = d1.real(), z1i = d1.imag(), tz1r = d1_reflected.real(), tz1i = d1_reflected.imag();
    const double G2 = y.gamma_abs * y.gamma_abs, ps = y.pi_sigma;
    const double d1sq = std::norm(d1);

    ZeroConditionReport rep;
    rep.s0 = s0;
    auto& c = rep.conditions;
    c.push_back(scalar_condition("Zabs1", d1sq, 2 * (z1i * tz1i - z1r * tz1r) * ps / y.g2, tol));
    c.push_back(scalar_condition("Zabs2", d1sq, -2 * (z1i * tz1r + z1r * tz1i) * ps / y.g1, tol));
    c.push_back(scalar_condition("ZcondR", z1r, -ps * (tz1i * y.g1 + tz1r * y.g2) / (8 * G2 * y.c0), tol));
    c.push_back(scalar_condition("ZcondI", z1i, ps * (tz1i * y.g2 - tz1r * y.g1) / (8 * G2 * y.c0), tol));

    const double be = principal_arg(d1), tbe = principal_arg(d1_reflected);
    c.push_back(tan_condition("tanBetaW", tbe, y.g1 * std::cos(be) - y.g2 * std::sin(be),
                              y.g1 * std::sin(be) + y.g2 * std::cos(be), tol));
    c.push_back(tan_condition("tanBetaWInv", be, y.g1 * std::cos(tbe) - y.g2 * std::sin(tbe),
                              y.g1 * std::sin(tbe) + y.g2 * std::cos(tbe), tol));


    const double a = kPi * s0.sigma / 2, th = std::tanh(kPi * s0.rho / 2), r = -y.rho_theta;
    const double N = -(-std::sin(a) * std::cos(r) * th + std::sin(r) * std::cos(a));
    const double D = std::cos(a) * std::cos(r) + std::sin(a) * std::sin(r) * th;
    c.push_back(tan_condition("BetaCondition", be + tbe, N, D, tol));
    // its right-hand side is also the direction (g1, g2)
    c.push_back(tan_condition("BetaConditionG", std::atan2(N, D), y.g1, y.g2, tol));
    c.push_back(tan_condition("Tan2Beta_Asy_Gen", be + tbe, std::sin(a - r), std::cos(a - r), tol));
    if (std::abs(s0.sigma - 0.5) < 1e-12) {
        // on the line beta~ = beta and tanBetaW becomes a quadratic in tan(beta); keep the root that fits
        const double root = std::hypot(y.g1, y.g2);
        ConditionResult best;
        for (int sign : {+1, -1}) {
            ConditionResult t = tan_condition("tanBeta", be, -y.g2 + sign * root, y.g1, tol);
            if (rep.tan_beta_sign == 0 || t.residual < best.residual) {
                best = t;
                rep.tan_beta_sign = sign;
            }
        }
        c.push_back(best);
        const double N2 = -(-th * std::cos(r) + std::sin(r)), D2 = std::cos(r) + std::sin(r) * th;
        c.push_back(tan_condition("Tan2Beta", 2 * be, N2, D2, tol));
        c.push_back(tan_condition("Tan2Beta_Asy", 2 * be, std::sin(kPi / 4 - r), std::cos(kPi / 4 - r), tol));
    }
    return rep;
}

ZeroConditionReport zero_conditions(ComplexPoint s0, const EvalConfig& cfg, double tol) {
    return zero_conditions(s0, zeta_d1(s0, cfg), zeta_d1(s0.reflected(), cfg), tol);
}

double f_sign_change(double lo, double hi) {
    auto inv_f = [](double rho) { return 1.0 / f_rho(rho); };
    const double flo = inv_f(lo);
    if ((flo < 0) == (inv_f(hi) < 0)) throw std::invalid_argument("f_sign_change: no sign change in bracket");
    return bisect(inv_f, lo, hi, flo);
}

}  // namespace zexplore
