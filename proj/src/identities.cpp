#include "zexplore/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

#include "zexplore/complexfn.hpp"
#include "zexplore/csv.hpp"
#include "zexplore/quadrature.hpp"
#include "zexplore/symbols.hpp"

namespace zexplore {

namespace {

using C = ComplexValue;

constexpr double kGuard = 1e-8;

bool tiny(double v, double scale = 1.0) { return !(std::abs(v) >= kGuard * scale); }

// rho-derivatives on the critical line, Richardson-extrapolated centred differences.
struct LineDerivs {
    double alpha = 0, beta = 0, abs_z = 0, abs_z1 = 0, f = 0;
};

LineDerivs line_derivatives(double rho, const EvalConfig& cfg) {
    const double h = 1e-4;
    const ZetaJet c = zeta_jet({0.5, rho}, cfg, 1);
    const double a0 = principal_arg(c.z), b0 = principal_arg(c.d1);
    struct Sample {
        double a, b, z, z1;
    };
    auto at = [&](double r) {
        ZetaJet j = zeta_jet({0.5, r}, cfg, 1);
        // unwrap locally around the centre value
        return Sample{a0 + wrap_pi(principal_arg(j.z) - a0), b0 + wrap_pi(principal_arg(j.d1) - b0),
                      std::abs(j.z), std::abs(j.d1)};
    };
    const Sample p1 = at(rho + h), m1 = at(rho - h), p2 = at(rho + h / 2), m2 = at(rho - h / 2);
    auto rich = [&](double fp1, double fm1, double fp2, double fm2) {
        const double d1 = (fp1 - fm1) / (2 * h), d2 = (fp2 - fm2) / h;
        return (4 * d2 - d1) / 3;
    };
    LineDerivs d;
    d.alpha = rich(p1.a, m1.a, p2.a, m2.a);
    d.beta = rich(p1.b, m1.b, p2.b, m2.b);
    d.abs_z = rich(p1.z, m1.z, p2.z, m2.z);
    d.abs_z1 = rich(p1.z1, m1.z1, p2.z1, m2.z1);
    d.f = f_rho_derivative(rho);
    return d;
}

struct Ctx {
    ComplexPoint p;
    EvalConfig cfg;
    ZetaBundle z;
    SymbolSet y;
    double al = 0, be = 0, ga = 0, tal = 0, tbe = 0;  // principal arguments
    double theta_t = 0;
    C psi_t;
    std::optional<LineDerivs> ld;

    Ctx(ComplexPoint s, const EvalConfig& c) : p(s), cfg(c) {
        z = build_bundle(s, cfg);
        y = build_symbols(s, z);
        al = principal_arg(z.z());
        be = principal_arg(z.z1());
        ga = principal_arg(z.z2());
        tal = principal_arg(z.tz());
        tbe = principal_arg(z.tz1());
        theta_t = log_gamma(s.reflected()).imag();
        psi_t = digamma(s.reflected());
    }
    const LineDerivs& d() {
        if (!ld) ld = line_derivatives(p.rho, cfg);
        return *ld;
    }
    double G2() const { return y.gamma_abs * y.gamma_abs; }
    // rho ln(2pi) - theta as printed in the paper for the polar-angle relations
    // holds with the opposite sign; see the notes in README.
    double rtheta_flipped() const { return -y.rho_theta; }
};

enum class Kind { Equal, LessEq, Less };

struct Eq {
    std::string part;
    C lhs, rhs;
    bool singular = false;
    double term_scale = 0;  // size of the largest cancelling term, if relevant
    Kind kind = Kind::Equal;
    double threshold = 0;   // for inequalities: lhs - rhs must stay <= threshold
};

Eq scalar(std::string part, double lhs, double rhs, double term_scale = 0) {
    return {std::move(part), lhs, rhs, false, term_scale};
}

Eq complex_eq(std::string part, C lhs, C rhs, double term_scale = 0) {
    return {std::move(part), lhs, rhs, false, term_scale};
}

Eq singular(std::string part) {
    Eq e;
    e.part = std::move(part);
    e.singular = true;
    return e;
}

// tan(L) = N/D compared without dividing: both sides as points on the unit
// circle at twice the angle, so |lhs - rhs| = 2 |sin(L - atan2(N, D))|.
Eq tangent(std::string part, double L, double N, double D, double guard_scale = 1.0) {
    if (tiny(std::hypot(N, D), guard_scale)) return singular(std::move(part));
    return {std::move(part), std::polar(1.0, 2.0 * L), std::polar(1.0, 2.0 * std::atan2(N, D))};
}

Eq inequality(std::string part, double lhs, double rhs, Kind kind, double threshold = 0) {
    Eq e{std::move(part), lhs, rhs};
    e.kind = kind;
    e.threshold = threshold;
    return e;
}

using Eqs = std::vector<Eq>;
using Fn = std::function<Eqs(Ctx&)>;

struct Entry {
    IdentityInfo info;
    Fn fn;
};

double sq(double x) { return x * x; }

// ---------------------------------------------------------------- plane

Eqs fe_comp(Ctx& c) {
    auto& z = c.z;
    auto& y = c.y;
    C rhs(y.g2 * z.zr + y.g1 * z.zi, y.g1 * z.zr - y.g2 * z.zi);
    return {complex_eq("tilde = (g2 zr + g1 zi, g1 zr - g2 zi)/(2 pi_sigma)", z.tz(), rhs / (2 * y.pi_sigma))};
}

Eqs fe_inv(Ctx& c) {
    auto& z = c.z;
    auto& y = c.y;
    const double k = y.pi_sigma / (8 * c.G2() * y.c0);
    C rhs(z.tzi * y.g1 + z.tzr * y.g2, -(z.tzi * y.g2 - z.tzr * y.g1));
    return {complex_eq("zeta from tilde components", z.z(), k * rhs)};
}

Eqs arg_fe(Ctx& c) {
    auto& y = c.y;
    const double ca = std::cos(c.al), sa = std::sin(c.al);
    return {tangent("tan(alpha~)", c.tal, y.g1 * ca - y.g2 * sa, y.g2 * ca + y.g1 * sa,
                    std::hypot(y.g1, y.g2))};
}

Eqs mag_ratio(Ctx& c) {
    const double tz2 = std::norm(c.z.tz());
    if (tiny(std::sqrt(tz2))) return {singular("|zeta~| ~ 0")};
    return {scalar("|zeta|^2/|zeta~|^2 = Phi", std::norm(c.z.z()) / tz2, c.y.Phi)};
}

Eqs variant(Ctx& c) {
    const C z1 = c.z.z1();
    if (tiny(std::abs(z1))) return {singular("zeta'(s) ~ 0")};
    // zeta(1-s) and zeta'(1-s) are conjugates of the values at 1 - sigma + i rho
    const C z_1ms = std::conj(c.z.tz()), z1_1ms = std::conj(c.z.tz1());
    return {complex_eq("zeta'(1-s)/zeta'(s) + chi = f zeta(1-s)/zeta'(s)", z1_1ms / z1 + c.y.chi,
                       c.y.f_s * z_1ms / z1)};
}

Eqs xline(Ctx& c, bool real_part) {
    auto& z = c.z;
    auto& y = c.y;
    const double P = sq(y.p1) + sq(y.p2);
    if (real_part) {
        double rhs = -4 * y.c0 / P *
                     ((y.h2 * z.z1i + y.h1 * z.z1r) / y.pi_sigma - 2 * (z.tz1i * y.p1 - z.tz1r * y.p2));
        return {scalar("tilde zeta_R", z.tzr, rhs)};
    }
    double rhs = 4 * y.c0 / P *
                 ((y.h1 * z.z1i - y.h2 * z.z1r) / y.pi_sigma - 2 * (z.tz1i * y.p2 + z.tz1r * y.p1));
    return {scalar("tilde zeta_I", z.tzi, rhs)};
}

Eqs dinv(Ctx& c, bool real_part) {
    auto& z = c.z;
    auto& y = c.y;
    const double K = y.pi_sigma / (64 * c.G2() * sq(y.c0));
    if (real_part)
        return {scalar("zeta'_R", z.z1r,
                       -K * (8 * y.c0 * (z.tz1i * y.g1 + z.tz1r * y.g2) + y.h2 * z.tzi + y.h1 * z.tzr))};
    return {scalar("zeta'_I", z.z1i,
                   K * (8 * y.c0 * (z.tz1i * y.g2 - z.tz1r * y.g1) - y.h2 * z.tzr + y.h1 * z.tzi))};
}

Eqs dfwd(Ctx& c, bool real_part) {
    auto& z = c.z;
    auto& y = c.y;
    if (real_part)
        return {scalar("tilde zeta'_R", z.tz1r,
                       -(y.g1 * z.z1i + z.z1r * y.g2) / (2 * y.pi_sigma) +
                           (y.h3 * z.zi - y.h4 * z.zr) / (16 * y.pi_sigma * y.c0))};
    return {scalar("tilde zeta'_I", z.tz1i,
                   (y.g2 * z.z1i - y.g1 * z.z1r) / (2 * y.pi_sigma) +
                       (y.h4 * z.zi + y.h3 * z.zr) / (16 * y.pi_sigma * y.c0))};
}

Eqs dmag(Ctx& c) {
    auto& z = c.z;
    auto& y = c.y;
    if (tiny(y.g1, std::hypot(y.g1, y.g2))) return {singular("g1 ~ 0")};
    double rhs = y.pi_sigma / y.g1 *
                 ((z.z1i * z.tzr + z.z1r * z.tzi) * y.q1 + (-z.z1i * z.tzi + z.z1r * z.tzr) * y.q2 -
                  2 * z.z1i * z.tz1r - 2 * z.z1r * z.tz1i);
    return {scalar("|zeta'|^2", std::norm(z.z1()), rhs)};
}

Eqs arg_polar(Ctx& c) {
    const double hs = kPi * c.p.sigma / 2, r = c.y.rho_theta;
    const double A = -hs - c.al + r, B = hs - c.al + r;
    const double e = std::exp(-kPi * c.p.rho);  // both sides scaled by exp(-pi rho/2)
    return {tangent("tan(alpha~) polar", c.tal, e * std::sin(A) + std::sin(B), std::cos(B) + e * std::cos(A))};
}

Eqs tanb(Ctx& c) {
    auto& z = c.z;
    auto& y = c.y;
    // numerator and denominator multiplied through by zeta~_R cos(beta~)
    double N = -(8 * y.c0 * (z.tz1i * y.g2 - z.tz1r * y.g1) + y.h1 * z.tzi - y.h2 * z.tzr);
    double D = 8 * y.c0 * (z.tz1i * y.g1 + z.tz1r * y.g2) + y.h2 * z.tzi + y.h1 * z.tzr;
    double scale = 8 * y.c0 * std::hypot(y.g1, y.g2) * std::abs(z.tz1()) +
                   std::hypot(y.h1, y.h2) * std::abs(z.tz());
    return {tangent("tan(beta)", c.be, N, D, scale)};
}

Eqs tanb_inv(Ctx& c) {
    auto& z = c.z;
    auto& y = c.y;
    double N = -(8 * y.c0 * (z.z1i * y.g2 - z.z1r * y.g1) + z.zi * y.h4 + z.zr * y.h3);
    double D = 8 * y.c0 * (z.z1i * y.g1 + z.z1r * y.g2) - z.zi * y.h3 + z.zr * y.h4;
    double scale = 8 * y.c0 * std::hypot(y.g1, y.g2) * std::abs(z.z1()) +
                   std::hypot(y.h3, y.h4) * std::abs(z.z());
    return {tangent("tan(beta~)", c.tbe, N, D, scale)};
}

Eqs rlog_tilde(Ctx& c) {
    auto& z = c.z;
    auto& y = c.y;
    if (tiny(std::cos(c.tal)) || tiny(std::cos(c.be)) || tiny(std::cos(c.tbe)))
        return {singular("tan pole")};
    const double Ta = std::tan(c.tal), Tb = std::tan(c.be), Ttb = std::tan(c.tbe);
    const double den = 8 * y.c0 * ((Ttb * Tb - 1) * y.g1 + (Ttb + Tb) * y.g2);
    if (tiny(den, 8 * y.c0 * std::hypot(y.g1, y.g2) * (1 + std::abs(Tb)) * (1 + std::abs(Ttb))))
        return {singular("denominator ~ 0")};
    return {scalar("zeta~'_R/zeta~_R", z.tz1r / z.tzr, ((-Ta - Tb) * y.h1 + (-Ta * Tb + 1) * y.h2) / den)};
}

Eqs rlog(Ctx& c) {
    auto& z = c.z;
    auto& y = c.y;
    if (tiny(std::cos(c.al)) || tiny(std::cos(c.be)) || tiny(std::cos(c.tbe)))
        return {singular("tan pole")};
    const double Ta = std::tan(c.al), Tb = std::tan(c.be), Ttb = std::tan(c.tbe);
    const double den = 8 * y.c0 * ((Ttb * y.g1 + y.g2) * Tb + y.g2 * Ttb - y.g1);
    if (tiny(den, 8 * y.c0 * std::hypot(y.g1, y.g2) * (1 + std::abs(Tb)) * (1 + std::abs(Ttb))))
        return {singular("denominator ~ 0")};
    return {scalar("zeta'_R/zeta_R", z.z1r / z.zr, ((Ta * y.h3 - y.h4) * Ttb - Ta * y.h4 - y.h3) / den)};
}

Eqs argsum_prod(Ctx& c) {
    auto& z = c.z;
    const double az2 = std::norm(z.z()), atz2 = std::norm(z.tz());
    if (tiny(std::sqrt(atz2))) return {singular("|zeta~| ~ 0")};
    double lhs = z.z1i * z.zi + z.z1r * z.zr;
    double rhs = -(z.tz1i * z.tzi + z.tz1r * z.tzr) * az2 / atz2 - c.y.p2 * az2 / (8 * c.y.c0);
    return {scalar("zeta'.zeta", lhs, rhs, std::abs(z.z1()) * std::abs(z.z()))};
}

Eqs argsum_sym(Ctx& c) {
    auto& z = c.z;
    auto& y = c.y;
    const double az2 = std::norm(z.z()), atz2 = std::norm(z.tz());
    if (tiny(std::sqrt(az2)) || tiny(std::sqrt(atz2))) return {singular("|zeta| ~ 0")};
    double lhs = (z.tz1i * z.tzi + z.tz1r * z.tzr) / atz2 + (z.z1i * z.zi + z.z1r * z.zr) / az2;
    double rhs = -(2 * y.Psi2 * y.c0 - kPi * std::sin(kPi * c.p.sigma)) / (4 * y.c0);
    return {scalar("sum of log-derivative real parts", lhs, rhs,
                   std::abs(z.tz1()) / std::sqrt(atz2) + std::abs(z.z1()) / std::sqrt(az2))};
}

Eqs gamma_ident(Ctx& c) {
    auto& y = c.y;
    const double hs = kPi * c.p.sigma / 2, th = std::tanh(kPi * c.p.rho / 2), r = y.rho_theta;
    const double L = y.theta_cont - std::atan(std::tan(hs) * th) - c.p.rho * kLog2Pi;
    // middle member, numerator and denominator divided by cosh(pi rho/2)
    const double N = std::sin(hs) * std::cos(r) * th + std::cos(hs) * std::sin(r);
    const double D = std::sin(hs) * std::sin(r) * th - std::cos(hs) * std::cos(r);
    Eqs out{tangent("left = middle", L, N, D)};
    out.push_back(tangent("middle = -g1/g2", std::atan2(N, D), -y.g1, y.g2, std::hypot(y.g1, y.g2)));
    return out;
}

Eqs intpsi(Ctx& c) {
    const double sigma = c.p.sigma;
    auto f = [&](double t) { return digamma({sigma, t}).real(); };
    QuadResult q = adaptive_simpson(f, 0.0, c.p.rho, 1e-10);
    return {scalar("Re int_0^rho psi = Im LogGamma", q.value, c.y.theta_cont)};
}

Eqs lgamma_refl(Ctx& c) {
    const double s = c.p.sigma;
    return {tangent("tan(theta - theta~)", c.y.theta_cont - c.theta_t,
                    -std::tanh(kPi * c.p.rho) * std::cos(kPi * s), std::sin(kPi * s))};
}

Eqs cos_theta(Ctx& c) {
    const double s = c.p.sigma, sp = std::sin(kPi * s), cp = std::cos(kPi * s);
    const double th = std::tanh(kPi * c.p.rho);
    // sin / (|cos| sqrt(tan^2 + tanh^2)) with |cos| taken inside the root
    return {scalar("cos(theta - theta~)", std::cos(c.y.theta_cont - c.theta_t),
                   sp / std::sqrt(sp * sp + cp * cp * th * th), 1.0)};
}

Eqs psi_im(Ctx& c) {
    const double s = c.p.sigma, r = c.p.rho;
    const C ps = c.y.psi;
    return {scalar("Im(psi + psi~)", (ps + c.psi_t).imag(),
                   kPi * std::sinh(2 * kPi * r) / (std::cosh(2 * kPi * r) - std::cos(2 * kPi * s)),
                   std::abs(ps.imag()) + std::abs(c.psi_t.imag()))};
}

Eqs psi_re(Ctx& c) {
    const double s = c.p.sigma, r = c.p.rho;
    const C ps = c.y.psi;
    return {scalar("Re(psi - psi~)", (ps - c.psi_t).real(),
                   -kPi * std::sin(2 * kPi * s) / (std::cosh(2 * kPi * r) - std::cos(2 * kPi * s)),
                   std::abs(ps.real()) + std::abs(c.psi_t.real()))};
}

Eqs fe_raw(Ctx& c, bool real_part) {
    auto& z = c.z;
    auto& y = c.y;
    const double s = c.p.sigma, r = c.p.rho;
    const double sh = std::sinh(kPi * r), sp = std::sin(kPi * s);
    const double d1sq = std::norm(z.z1());
    const double zd = y.zeta_d;
    const double zd_scale = (8 * std::abs(y.Psi1) * y.c0 + 2 * kPi * sh + 4 * y.c0 * std::abs(y.Psi2) + 2 * kPi) *
                            std::abs(z.z1()) * y.pi_sigma;
    if (tiny(zd, zd_scale)) return {singular("zeta_d ~ 0")};
    const double mix = (sh * z.z1r - sp * z.z1i) * kPi;
    if (real_part) {
        double num = ((-4 * y.Psi1 * z.z1r + 2 * z.z1i * y.Psi2) * y.zeta_m +
                      8 * (-z.z1i * z.tz1i + z.z1r * z.tz1r) * y.pi_sigma + 4 * y.g2 * d1sq) * y.c0 +
                     mix * y.zeta_m;
        return {scalar("tilde zeta_R via zeta_d", z.tzr, num / zd)};
    }
    double num = ((4 * y.Psi1 * z.z1r - 2 * z.z1i * y.Psi2) * y.zeta_p -
                  8 * (z.z1i * z.tz1r + z.z1r * z.tz1i) * y.pi_sigma - 4 * y.g1 * d1sq) * y.c0 -
                 mix * y.zeta_p;
    return {scalar("tilde zeta_I via zeta_d", z.tzi, -num / zd)};
}

Eqs g_polar(Ctx& c) {
    auto& y = c.y;
    const double hs = kPi * c.p.sigma / 2, hr = kPi * c.p.rho / 2, r = c.rtheta_flipped();
    const double G = y.gamma_abs, sh = std::sinh(hr), ch = std::cosh(hr);
    const double g1 = 4 * G * (std::sin(hs) * std::cos(r) * sh - std::cos(hs) * std::sin(r) * ch);
    const double g2 = 4 * G * (std::sin(hs) * std::sin(r) * sh + std::cos(hs) * std::cos(r) * ch);
    const double scale = 8 * G * ch;
    return {scalar("g1 polar", y.g1, g1, scale), scalar("g2 polar", y.g2, g2, scale)};
}

Eqs phi_diff(Ctx& c) {
    auto& z = c.z;
    const double A = std::norm(z.z()), B = std::norm(z.tz());
    if (tiny(std::sqrt(B))) return {singular("|zeta~| ~ 0")};
    // d/d sigma moves s right and the reflected point left
    const double dA = 2 * (std::conj(z.z()) * z.z1()).real();
    const double dB = -2 * (std::conj(z.tz()) * z.tz1()).real();
    return {scalar("d Phi / d sigma", (dA * B - A * dB) / (B * B), phi_sigma_derivative(c.p))};
}

// ---------------------------------------------------------------- critical line

Eqs cl_tana(Ctx& c) {
    const double x = kPi / 4 + c.y.rho_theta, e = std::exp(-kPi * c.p.rho);
    const double root = std::sqrt(1 + e * e);
    Eqs out{tangent("tan(alpha), first form", c.al, std::sin(x) - e * std::cos(x),
                    std::cos(x) + root + e * std::sin(x))};
    out.push_back(tangent("tan(alpha), second form", c.al, -(std::cos(x) - root + e * std::sin(x)),
                          std::sin(x) - e * std::cos(x)));
    return out;
}

Eqs cl_lin(Ctx& c, bool real_part) {
    auto& z = c.z;
    auto& y = c.y;
    const double f = y.f_rho;
    if (real_part)
        return {scalar("zeta_R/f", z.zr / f, (y.b + 0.5) * z.z1r + y.a * z.z1i,
                       std::abs((y.b + 0.5) * z.z1r) + std::abs(y.a * z.z1i))};
    return {scalar("zeta_I/f", z.zi / f, y.a * z.z1r - (y.b - 0.5) * z.z1i,
                   std::abs(y.a * z.z1r) + std::abs((y.b - 0.5) * z.z1i))};
}

Eqs det0(Ctx& c) { return {scalar("a^2 + b^2", sq(c.y.a) + sq(c.y.b), 0.25)}; }
Eqs b_id(Ctx& c) { return {scalar("b = cos(2 alpha)/2", c.y.b, std::cos(2 * c.al) / 2, 0.5)}; }
Eqs a_id(Ctx& c) { return {scalar("a = sin(2 alpha)/2", c.y.a, std::sin(2 * c.al) / 2, 0.5)}; }

struct HalfHyp {
    double shq, chq;  // sinh(pi rho/2), cosh(pi rho/2) over sqrt(cosh(pi rho))
};
HalfHyp half_hyp(double rho) {
    const double q = std::sqrt(std::cosh(kPi * rho));
    return {std::sinh(kPi * rho / 2) / q, std::cosh(kPi * rho / 2) / q};
}

Eqs sin2a(Ctx& c) {
    const auto [shq, chq] = half_hyp(c.p.rho);
    const double r = c.rtheta_flipped();
    return {scalar("sin(2 alpha)", std::sin(2 * c.al), std::cos(r) * shq - std::sin(r) * chq, 1.0)};
}

Eqs cos2a(Ctx& c) {
    const auto [shq, chq] = half_hyp(c.p.rho);
    const double r = c.rtheta_flipped();
    return {scalar("cos(2 alpha)", std::cos(2 * c.al), chq * std::cos(r) + shq * std::sin(r), 1.0)};
}

Eqs tan_id(Ctx& c) {
    return {tangent("tan(alpha) = csc(2a) - cot(2a)", c.al, 1 - std::cos(2 * c.al), std::sin(2 * c.al))};
}

Eqs inv_theta(Ctx& c) {
    const auto [shq, chq] = half_hyp(c.p.rho);
    const double s2 = std::sin(2 * c.al), c2 = std::cos(2 * c.al);
    const double r = c.rtheta_flipped(), e = std::exp(-kPi * c.p.rho);
    Eqs out;
    out.push_back(scalar("cos(rho_theta)", std::cos(c.y.rho_theta), shq * s2 + chq * c2, 1.0));
    out.push_back(scalar("sin(rho_theta)", std::sin(r), shq * c2 - chq * s2, 1.0));
    out.push_back(tangent("tan(rho_theta)", r, -((1 + e) * s2 - (1 - e) * c2), (1 - e) * s2 + (1 + e) * c2));
    return out;
}

Eqs theta_asy(Ctx& c) {
    const double s2 = std::sin(2 * c.al), c2 = std::cos(2 * c.al);
    return {tangent("tan(rho_theta) asymptotic", c.rtheta_flipped(), c2 - s2, c2 + s2)};
}

Eqs zmain(Ctx& c) {
    auto& z = c.z;
    const double f = c.y.f_rho;
    return {scalar("|zeta|^2 = f zeta'.zeta", std::norm(z.z()), f * (z.z1i * z.zi + z.z1r * z.zr),
                   std::abs(f) * std::abs(z.z()) * std::abs(z.z1()))};
}

Eqs alpha_prime(Ctx& c) { return {scalar("alpha'", c.d().alpha, 1 / c.y.f_rho)}; }

Eqs zmain_int(Ctx& c) {
    auto& z = c.z;
    const double f = c.y.f_rho, ca = std::cos(c.al);
    double rhs = f * (-(sq(z.z1i) - sq(z.z1r)) * ca * ca + z.z1r * z.z1i * std::sin(2 * c.al) + sq(z.z1i));
    return {scalar("zeta'.zeta", z.z1r * z.zr + z.z1i * z.zi, rhs, std::abs(f) * std::norm(z.z1()))};
}

Eqs comp_sq(Ctx& c) {
    auto& z = c.z;
    const double f = c.y.f_rho, Z1 = std::norm(z.z1()), cd = sq(std::cos(c.al - c.be));
    const double scale = std::norm(z.z()) / (f * f);
    return {scalar("zeta_R^2/f^2", sq(z.zr) / (f * f), Z1 * sq(std::cos(c.al)) * cd, scale),
            scalar("zeta_I^2/f^2", sq(z.zi) / (f * f), Z1 * sq(std::sin(c.al)) * cd, scale)};
}

Eqs mag_sq(Ctx& c) {
    const double f = c.y.f_rho;
    return {scalar("|zeta|^2/|zeta'|^2", std::norm(c.z.z()) / std::norm(c.z.z1()),
                   f * f * sq(std::cos(c.al - c.be)))};
}

Eqs zzp(Ctx& c) {
    return {scalar("|zeta|/|zeta'|", std::abs(c.z.z()) / std::abs(c.z.z1()),
                   c.y.f_rho * std::cos(c.al - c.be))};
}

Eqs cos_neg(Ctx& c) {
    return {inequality("cos(alpha - beta) <= 0", std::cos(c.al - c.be), 0.0, Kind::LessEq, 1e-9)};
}

double cross(const ZetaBundle& z) { return -z.z1r * z.zi + z.z1i * z.zr; }

Eqs eq9(Ctx& c) {
    auto& z = c.z;
    const double Z = std::norm(z.z()), Z1 = std::norm(z.z1()), f = c.y.f_rho;
    if (tiny(std::sqrt(Z))) return {singular("|zeta| ~ 0")};
    return {scalar("sum of squares", Z / (Z1 * f * f) + sq(cross(z)) / (Z1 * Z), 1.0)};
}

Eqs diff_id(Ctx& c) {
    auto& z = c.z;
    const double Z = std::norm(z.z());
    return {scalar("(zeta x zeta')^2 = |zeta|^2 |zeta|'^2", sq(cross(z)), Z * sq(c.d().abs_z),
                   Z * std::norm(z.z1()))};
}

Eqs zprime(Ctx& c) {
    const double Z = std::norm(c.z.z()), Z1 = std::norm(c.z.z1()), f = c.y.f_rho;
    return {scalar("|zeta|'^2", sq(c.d().abs_z), Z1 - Z / (f * f), Z1)};
}

Eqs logz(Ctx& c) {
    const double Z = std::norm(c.z.z()), Z1 = std::norm(c.z.z1()), f = c.y.f_rho;
    if (tiny(std::sqrt(Z))) return {singular("|zeta| ~ 0")};
    const double lhs = sq(c.d().abs_z) / Z;
    Eqs out{scalar("(log|zeta|)'^2 via moduli", lhs, Z1 / Z - 1 / (f * f), Z1 / Z)};
    if (tiny(std::cos(c.al - c.be))) out.push_back(singular("tan pole"));
    else out.push_back(scalar("(log|zeta|)'^2 via angles", lhs, sq(std::tan(c.al - c.be)) / (f * f)));
    return out;
}

Eqs zpzp(Ctx& c) {
    return {scalar("|zeta|'/|zeta'|", c.d().abs_z / std::abs(c.z.z1()), std::sin(c.al - c.be), 1.0)};
}

Eqs logza(Ctx& c) {
    if (tiny(std::abs(c.z.z()))) return {singular("|zeta| ~ 0")};
    if (tiny(std::cos(c.al - c.be))) return {singular("cos(alpha - beta) ~ 0")};
    return {scalar("(log|zeta|)'", c.d().abs_z / std::abs(c.z.z()), std::tan(c.al - c.be) / c.y.f_rho)};
}

double log_abs_zeta_slope(double rho, const EvalConfig& cfg) {
    ZetaJet j = zeta_jet({0.5, rho}, cfg, 1);
    return std::tan(principal_arg(j.z) - principal_arg(j.d1)) / f_rho(rho);
}

Eqs exprep_eq(Ctx& c) {
    auto r = exp_representation(c.p.rho, c.p.rho + 0.5, c.cfg);
    if (r.singular) return {singular("zero of zeta inside the interval")};
    return {scalar("exp(int tan(alpha-beta)/f)", r.lhs, r.rhs)};
}

Eqs dbeta(Ctx& c) {
    const auto& d = c.d();
    const double f = c.y.f_rho, Z1 = std::abs(c.z.z1());
    if (tiny(std::sin(c.al - c.be)) || tiny(std::cos(c.al - c.be))) return {singular("tan(alpha - beta) ~ 0 or pole")};
    const double t = std::tan(c.al - c.be);
    const double t1 = 2 / f, t2 = d.f / (f * t), t3 = d.abs_z1 / (t * Z1);
    return {scalar("beta'", d.beta, t1 - t2 - t3, std::abs(t1) + std::abs(t2) + std::abs(t3))};
}

Eqs dbda(Ctx& c) {
    const auto& d = c.d();
    const double f = c.y.f_rho, Z = std::abs(c.z.z()), Z1 = std::abs(c.z.z1());
    const double lz = d.abs_z / Z;
    if (tiny(d.alpha) || tiny(lz)) return {singular("alpha' or (log|zeta|)' ~ 0")};
    const double inner = (d.abs_z1 / Z1 + d.f / f) / lz;
    return {scalar("beta'/alpha'", d.beta / d.alpha, 2 - inner, 2 + std::abs(inner))};
}

Eqs l1neg(Ctx& c) {
    const auto& d = c.d();
    auto& z = c.z;
    const double f = c.y.f_rho, Z1 = std::abs(z.z1());
    const double second = (std::sin(c.be) * z.z2i + std::cos(c.be) * z.z2r) / Z1;
    const double L1 = -1 / f + second;
    return {scalar("L1 = beta' - alpha'", L1, d.beta - d.alpha, std::abs(1 / f) + std::abs(second)),
            inequality("L1 < 0", L1, 0.0, Kind::Less)};
}

Eqs sing_inv(Ctx& c) {
    auto& z = c.z;
    const double s2 = std::sin(2 * c.al), f = c.y.f_rho;
    if (tiny(s2)) return {singular("sin(2 alpha) ~ 0")};
    const double t1 = 2 * z.zr / (s2 * f), t2 = (std::cos(2 * c.al) + 1) * z.z1r / s2;
    return {scalar("zeta'_I", z.z1i, t1 - t2, std::abs(t1) + std::abs(t2))};
}

Eqs pert(Ctx& c, bool real_part) {
    auto r = perturbation_terms(c.p, c.cfg);
    const auto& t = real_part ? r.real : r.imag;
    return {scalar(real_part ? "zeta'_R" : "zeta'_I", t.lhs, t.rhs, t.scale)};
}

Eqs z2_ratio(Ctx& c, bool first) {
    const auto& d = c.d();
    auto& z = c.z;
    const double f = c.y.f_rho, sg = std::sin(c.al - c.ga);
    if (tiny(sg)) return {singular("sin(alpha - gamma) ~ 0")};
    if (first)
        return {scalar("|zeta''|/|zeta'|", std::abs(z.z2()) / std::abs(z.z1()),
                       (-d.f * std::cos(c.al - c.be) + 2 * std::sin(c.al - c.be)) / (sg * f),
                       (std::abs(d.f) + 2) / std::abs(sg * f))};
    if (tiny(std::cos(c.al - c.be))) return {singular("tan pole")};
    const double t = std::tan(c.al - c.be);
    return {scalar("|zeta''|/|zeta|", std::abs(z.z2()) / std::abs(z.z()), (-d.f + 2 * t) / (sg * f * f),
                   (std::abs(d.f) + 2 * std::abs(t)) / std::abs(sg * f * f))};
}

Eqs cform(Ctx& c, int which) {
    auto& z = c.z;
    const double f = c.y.f_rho;
    const C Z = z.z(), Z1 = z.z1(), Z1c = std::conj(Z1);  // zeta'(1/2 - i rho) = conj
    const C ea = std::polar(1.0, c.al);
    const double cd = std::cos(c.al - c.be);
    switch (which) {
        case 1:
            return {complex_eq("(2/f) zeta", 2.0 / f * Z, ea * ea * Z1c + Z1, 2 * std::abs(Z1))};
        case 2:
            return {complex_eq("|zeta| = exp(-i alpha) zeta", std::abs(Z), std::conj(ea) * Z),
                    scalar("|zeta| = f Re(exp(i alpha) conj zeta')", std::abs(Z), f * (ea * Z1c).real(),
                           std::abs(f) * std::abs(Z1))};
        case 3:
            return {complex_eq("zeta/|zeta'|", Z / std::abs(Z1), f * ea * cd)};
        default:
            return {complex_eq("zeta/zeta'", Z / Z1, f * std::polar(1.0, c.al - c.be) * cd)};
    }
}

// numerator and denominator divided by cosh(pi rho)
Eq interim_eq(double r, double rho, double al, double be) {
    const double th = std::tanh(kPi * rho), sech = 1 / std::cosh(kPi * rho);
    const double num = (-th * std::sin(2 * r) - sech * std::cos(2 * r)) * std::cos(4 * be) +
                       (-std::cos(2 * r) * th + sech * std::sin(2 * r)) * std::sin(4 * be) + 1;
    const double den = std::cos(al - be) - th * std::sin(2 * r + 3 * be + al) - sech * std::cos(2 * r + 3 * be + al);
    if (tiny(den)) return singular("denominator ~ 0");
    return scalar("interim", num / den, 2 * std::cos(al - be), 1.0);
}

Eqs interim(Ctx& c) { return {interim_eq(c.rtheta_flipped(), c.p.rho, c.al, c.be)}; }

Eqs h_cl(Ctx& c) {
    const double f = c.y.f_rho, k = -16 * std::sqrt(2 * kPi) * std::cosh(kPi * c.p.rho) / f;
    return {scalar("h1", c.y.h1, k * std::cos(2 * c.al), std::abs(k)),
            scalar("h2", c.y.h2, k * std::sin(2 * c.al), std::abs(k))};
}

// ---------------------------------------------------------------- table

const std::vector<Entry>& table() {
    using D = Domain;
    static const std::vector<Entry> t = {
        {{"FE-COMP", D::Plane, 0, "functional equation, reflected components"}, fe_comp},
        {{"FE-INV", D::Plane, 0, "functional equation, inverse direction"}, fe_inv},
        {{"ARG-FE", D::Plane, 0, "arguments on opposite sides of the critical line"}, arg_fe},
        {{"MAG-RATIO", D::Plane, 0, "|zeta|^2/|zeta~|^2 = Phi"}, mag_ratio},
        {{"VARIANT", D::Plane, 0, "derivative form of the functional equation"}, variant},
        {{"XLINE-R", D::Plane, 0, "zeta~_R from zeta', zeta~'"}, [](Ctx& c) { return xline(c, true); }},
        {{"XLINE-I", D::Plane, 0, "zeta~_I from zeta', zeta~'"}, [](Ctx& c) { return xline(c, false); }},
        {{"DINV-R", D::Plane, 0, "zeta'_R from tilde components"}, [](Ctx& c) { return dinv(c, true); }},
        {{"DINV-I", D::Plane, 0, "zeta'_I from tilde components"}, [](Ctx& c) { return dinv(c, false); }},
        {{"DFWD-R", D::Plane, 0, "zeta~'_R from zeta, zeta'"}, [](Ctx& c) { return dfwd(c, true); }},
        {{"DFWD-I", D::Plane, 0, "zeta~'_I from zeta, zeta'"}, [](Ctx& c) { return dfwd(c, false); }},
        {{"DMAG", D::Plane, 0, "|zeta'|^2 from mixed components"}, dmag},
        {{"ARG-POLAR", D::Plane, 0, "tan(alpha~) in polar form"}, arg_polar},
        {{"TANB", D::Plane, 0, "tan(beta) from tilde quantities"}, tanb},
        {{"TANB-INV", D::Plane, 0, "tan(beta~) from untilded quantities"}, tanb_inv},
        {{"RLOG-TILDE", D::Plane, 0, "zeta~'_R/zeta~_R from tangents"}, rlog_tilde},
        {{"RLOG", D::Plane, 0, "zeta'_R/zeta_R from tangents"}, rlog},
        {{"ARGSUM-PROD", D::Plane, 0, "product form of the argument-sum relation"}, argsum_prod},
        {{"ARGSUM-SYM", D::Plane, 0, "symmetric form of the argument-sum relation"}, argsum_sym},
        {{"GAMMA-IDENT", D::Plane, 0, "LogGamma identity via g1/g2"}, gamma_ident},
        {{"INTPSI", D::Plane, 0, "Re int psi = Im LogGamma"}, intpsi},
        {{"LGAMMA-REFL", D::Plane, 0, "tan(theta - theta~)"}, lgamma_refl},
        {{"COS-THETA", D::Plane, 0, "cos(theta - theta~)"}, cos_theta},
        {{"PSI-IM", D::Plane, 0, "Im psi reflection sum"}, psi_im},
        {{"PSI-RE", D::Plane, 0, "Re psi reflection difference"}, psi_re},
        {{"FE-RAW-R", D::Plane, 0, "zeta~_R via zeta_d"}, [](Ctx& c) { return fe_raw(c, true); }},
        {{"FE-RAW-I", D::Plane, 0, "zeta~_I via zeta_d"}, [](Ctx& c) { return fe_raw(c, false); }},
        {{"G-POLAR", D::Plane, 0, "g1, g2 in polar form"}, g_polar},
        {{"PHI-DIFF", D::Plane, 0, "d Phi/d sigma closed form"}, phi_diff},
        {{"CL-TANA", D::CriticalLine, 0, "tan(alpha) in terms of rho_theta"}, cl_tana},
        {{"CL-LIN-R", D::CriticalLine, 0, "zeta_R/f linear in zeta'"}, [](Ctx& c) { return cl_lin(c, true); }},
        {{"CL-LIN-I", D::CriticalLine, 0, "zeta_I/f linear in zeta'"}, [](Ctx& c) { return cl_lin(c, false); }},
        {{"DET0", D::CriticalLine, 0, "a^2 + b^2 = 1/4"}, det0},
        {{"B-ID", D::CriticalLine, 0, "b = cos(2 alpha)/2"}, b_id},
        {{"A-ID", D::CriticalLine, 0, "a = sin(2 alpha)/2"}, a_id},
        {{"SIN2A", D::CriticalLine, 0, "sin(2 alpha) from rho_theta"}, sin2a},
        {{"COS2A", D::CriticalLine, 0, "cos(2 alpha) from rho_theta"}, cos2a},
        {{"TAN-ID", D::CriticalLine, 0, "tan a = csc 2a - cot 2a"}, tan_id},
        {{"INV-THETA", D::CriticalLine, 0, "rho_theta from alpha"}, inv_theta},
        {{"THETA-ASY", D::CriticalLine, 8.0, "large-rho tan(rho_theta)"}, theta_asy},
        {{"ZMAIN", D::CriticalLine, 0, "|zeta|^2 = f zeta'.zeta"}, zmain},
        {{"ALPHA-PRIME", D::CriticalLine, 0, "alpha' = 1/f"}, alpha_prime},
        {{"ZMAIN-INT", D::CriticalLine, 0, "intermediate form of the main relation"}, zmain_int},
        {{"COMP-SQ", D::CriticalLine, 0, "component squares"}, comp_sq},
        {{"MAG-SQ", D::CriticalLine, 0, "|zeta|^2/|zeta'|^2 = f^2 cos^2(alpha - beta)"}, mag_sq},
        {{"ZZP", D::CriticalLine, 0, "|zeta|/|zeta'| = f cos(alpha - beta)"}, zzp},
        {{"COS-NEG", D::CriticalLine, 6.3, "cos(alpha - beta) <= 0 where f < 0"}, cos_neg},
        {{"EQ9", D::CriticalLine, 0, "sum-of-squares identity"}, eq9},
        {{"DIFF-ID", D::CriticalLine, 0, "d|zeta|/d rho from the cross product"}, diff_id},
        {{"ZPRIME", D::CriticalLine, 0, "|zeta|'^2 = |zeta'|^2 - |zeta|^2/f^2"}, zprime},
        {{"LOGZ", D::CriticalLine, 0, "(log|zeta|)'^2, two forms"}, logz},
        {{"ZPZP", D::CriticalLine, 0, "|zeta|'/|zeta'| = sin(alpha - beta)"}, zpzp},
        {{"LOGZA", D::CriticalLine, 0, "(log|zeta|)' = tan(alpha - beta)/f"}, logza},
        {{"EXPREP", D::CriticalLine, 0, "|zeta| ratio as exp of an integral"}, exprep_eq},
        {{"DBETA", D::CriticalLine, 0, "beta' in terms of f and |zeta'|"}, dbeta},
        {{"DBDA", D::CriticalLine, 0, "beta'/alpha'"}, dbda},
        {{"L1NEG", D::CriticalLine, 0, "L1 = beta' - alpha' < 0"}, l1neg},
        {{"SING-INV", D::CriticalLine, 0, "zeta'_I from zeta_R, zeta'_R"}, sing_inv},
        {{"PERT-R", D::CriticalLine, 0, "zeta'_R with zeta''"}, [](Ctx& c) { return pert(c, true); }},
        {{"PERT-I", D::CriticalLine, 0, "zeta'_I with zeta''"}, [](Ctx& c) { return pert(c, false); }},
        {{"Z2-RATIO-1", D::CriticalLine, 0, "|zeta''|/|zeta'|"}, [](Ctx& c) { return z2_ratio(c, true); }},
        {{"Z2-RATIO-2", D::CriticalLine, 0, "|zeta''|/|zeta|"}, [](Ctx& c) { return z2_ratio(c, false); }},
        {{"CFORM-1", D::CriticalLine, 0, "(2/f) zeta complex form"}, [](Ctx& c) { return cform(c, 1); }},
        {{"CFORM-2", D::CriticalLine, 0, "|zeta| complex forms"}, [](Ctx& c) { return cform(c, 2); }},
        {{"CFORM-3", D::CriticalLine, 0, "zeta/|zeta'|"}, [](Ctx& c) { return cform(c, 3); }},
        {{"CFORM-4", D::CriticalLine, 0, "zeta/zeta'"}, [](Ctx& c) { return cform(c, 4); }},
        {{"INTERIM", D::CriticalLine, 0, "trigonometric interim relation"}, interim},
        {{"H-CL", D::CriticalLine, 0, "h1, h2 on the critical line"}, h_cl},
    };
    return t;
}

const Entry* find_entry(const std::string& id) {
    for (const auto& e : table())
        if (e.info.id == id) return &e;
    return nullptr;
}

// Effective residual: relative, or measured against the cancelling terms.
double effective(const Eq& e, double abs_res, double rel_res) {
    if (e.term_scale > 0) return std::min(rel_res, abs_res / e.term_scale);
    return rel_res;
}

IdentityResult finish(const std::string& id, ComplexPoint p, const Eqs& eqs, double tol) {
    IdentityResult out;
    out.id = id;
    out.point = p;
    bool any_singular = false, any_failed = false, have = false;
    double worst = -1;
    for (const Eq& e : eqs) {
        if (e.singular) {
            any_singular = true;
            if (!have) out.part = e.part;
            continue;
        }
        double abs_res, rel_res, eff;
        bool pass;
        if (e.kind == Kind::Equal) {
            abs_res = std::abs(e.lhs - e.rhs);
            rel_res = abs_res / std::max({std::abs(e.lhs), std::abs(e.rhs), 1e-300});
            eff = effective(e, abs_res, rel_res);
            pass = eff < tol;
        } else {
            const double excess = e.lhs.real() - e.rhs.real();
            abs_res = std::max(0.0, excess);
            rel_res = abs_res;
            eff = abs_res;
            pass = e.kind == Kind::Less ? excess < 0 : excess <= e.threshold;
            if (!pass) eff = std::max(eff, tol);
        }
        any_failed = any_failed || !pass;
        double rank = pass ? eff : 1e300;
        if (!have || rank > worst) {
            worst = rank;
            have = true;
            out.lhs = e.lhs;
            out.rhs = e.rhs;
            out.abs_residual = abs_res;
            out.rel_residual = rel_res;
            out.part = e.part;
        }
    }
    out.status = any_failed ? Status::FAILED : any_singular ? Status::SKIPPED_SINGULAR : Status::OK;
    return out;
}

}  // namespace

const char* status_name(Status s) {
    switch (s) {
        case Status::OK: return "OK";
        case Status::SKIPPED_SINGULAR: return "SKIPPED_SINGULAR";
        case Status::FAILED: return "FAILED";
    }
    return "?";
}

const std::vector<IdentityInfo>& registry() {
    static const std::vector<IdentityInfo> r = [] {
        std::vector<IdentityInfo> v;
        for (const auto& e : table()) v.push_back(e.info);
        return v;
    }();
    return r;
}

const IdentityInfo* find_identity(const std::string& id) {
    const Entry* e = find_entry(id);
    return e ? &e->info : nullptr;
}

bool in_domain(const IdentityInfo& info, ComplexPoint s) {
    if (!(s.rho > 0) || !(s.rho >= info.rho_min)) return false;
    if (info.domain == Domain::CriticalLine) return std::abs(s.sigma - 0.5) < 1e-12;
    return s.sigma > 0 && s.sigma < 1;
}

double default_tolerance() {
    if (const char* env = std::getenv("ZEXPLORE_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e-7;
}

std::vector<IdentityResult> evaluate_all(const std::vector<std::string>& ids, ComplexPoint s,
                                         const EvalConfig& cfg, double tol) {
    std::vector<const Entry*> entries;
    for (const auto& id : ids) {
        const Entry* e = find_entry(id);
        if (!e) throw std::invalid_argument("unknown identity id: " + id);
        if (!in_domain(e->info, s)) throw std::invalid_argument("point outside the domain of " + id);
        entries.push_back(e);
    }
    std::vector<IdentityResult> out;
    if (entries.empty()) return out;
    Ctx ctx(s, cfg);
    for (const Entry* e : entries) out.push_back(finish(e->info.id, s, e->fn(ctx), tol));
    return out;
}

IdentityResult evaluate(const std::string& id, ComplexPoint s, const EvalConfig& cfg, double tol) {
    return evaluate_all({id}, s, cfg, tol).front();
}

ExpRepResult exp_representation(double rho1, double rho2, const EvalConfig& cfg) {
    ExpRepResult r;
    // refuse intervals that contain a zero.  On the line cos(alpha - beta) =
    // |zeta|/(f |zeta'|) only touches zero there, while alpha jumps by pi.
    const int n = 200;
    double prev_cd = 0, prev_al = 0;
    for (int i = 0; i <= n; ++i) {
        const double rho = rho1 + (rho2 - rho1) * i / n;
        ZetaJet j = zeta_jet({0.5, rho}, cfg, 1);
        const double al = principal_arg(j.z);
        const double cd = std::cos(al - principal_arg(j.d1));
        const bool jump = i > 0 && std::abs(wrap_pi(al - prev_al)) > kPi / 2;
        if (std::abs(cd) < 1e-6 || jump || (i > 0 && cd * prev_cd < 0)) {
            r.singular = true;
            return r;
        }
        prev_cd = cd;
        prev_al = al;
    }
    QuadResult q = adaptive_simpson([&](double rho) { return log_abs_zeta_slope(rho, cfg); }, rho1, rho2, 1e-9);
    r.integral = q.value;
    r.lhs = std::exp(q.value);
    r.rhs = std::abs(zeta({0.5, rho2}, cfg)) / std::abs(zeta({0.5, rho1}, cfg));
    r.rel = std::abs(r.lhs - r.rhs) / std::max(std::abs(r.lhs), std::abs(r.rhs));
    return r;
}

double interim_probe(ComplexPoint s, double beta_shift, const EvalConfig& cfg) {
    Ctx c(s, cfg);
    const Eq e = interim_eq(c.rtheta_flipped(), s.rho, c.al, c.be + beta_shift);
    if (e.singular) return std::numeric_limits<double>::quiet_NaN();
    return std::abs(e.lhs - e.rhs) / std::max({std::abs(e.lhs), std::abs(e.rhs), e.term_scale});
}

PerturbationTerms perturbation_terms(ComplexPoint s, const EvalConfig& cfg) {
    ZetaJet j = zeta_jet(s, cfg, 2);
    const double f = f_rho(s.rho), fp = f_rho_derivative(s.rho);
    const double al = principal_arg(j.z), sa = std::sin(al), ca = std::cos(al), s2 = std::sin(2 * al);
    const double zr = j.z.real(), zi = j.z.imag(), z2r = j.d2.real(), z2i = j.d2.imag();
    PerturbationTerms t;
    const double r1 = fp * zi / (2 * f), r2 = zr / f, r3 = (2 * sa * sa * z2r - s2 * z2i) * f / 4;
    t.real = {j.d1.real(), r1 + r2 + r3, std::abs(r1) + std::abs(r2) + std::abs(r3)};
    const double i1 = -fp * zr / (2 * f), i2 = zi / f, i3 = (2 * ca * ca * z2i - s2 * z2r) * f / 4;
    t.imag = {j.d1.imag(), i1 + i2 + i3, std::abs(i1) + std::abs(i2) + std::abs(i3)};
    return t;
}

Grid Grid::linspace(double sigma_min, double sigma_max, int n_sigma, double rho_min, double rho_max,
                    int n_rho) {
    if (n_sigma < 1 || n_rho < 1) throw std::invalid_argument("grid needs at least one point per axis");
    Grid g;
    for (int i = 0; i < n_sigma; ++i)
        g.sigmas.push_back(n_sigma == 1 ? sigma_min : sigma_min + (sigma_max - sigma_min) * i / (n_sigma - 1));
    for (int i = 0; i < n_rho; ++i)
        g.rhos.push_back(n_rho == 1 ? rho_min : rho_min + (rho_max - rho_min) * i / (n_rho - 1));
    return g;
}

Grid Grid::standard() {
    return {{0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9}, {2, 5, 8, 14.2, 21, 33, 47}};
}

SweepReport sweep(const std::vector<std::string>& ids, const Grid& grid, const EvalConfig& cfg, double tol) {
    SweepReport rep;
    rep.grid = grid;
    for (const auto& id : ids)
        if (!find_entry(id)) throw std::invalid_argument("unknown identity id: " + id);

    std::vector<ComplexPoint> plane, line;
    for (double s : grid.sigmas)
        for (double r : grid.rhos) plane.push_back({s, r});
    for (double r : grid.rhos) line.push_back({0.5, r});

    // plane identities run on the grid, line identities at sigma = 1/2 with the grid's rhos
    std::map<std::string, std::vector<IdentityResult>> by_id;
    for (int pass = 0; pass < 2; ++pass) {
        const Domain dom = pass == 0 ? Domain::Plane : Domain::CriticalLine;
        for (const ComplexPoint& p : pass == 0 ? plane : line) {
            std::vector<std::string> here;
            for (const auto& id : ids) {
                const IdentityInfo& info = find_entry(id)->info;
                if (info.domain != dom) continue;
                if (in_domain(info, p)) {
                    here.push_back(id);
                } else {
                    rep.per_identity[id].out_of_domain++;
                    rep.out_of_domain++;
                }
            }
            for (auto& r : evaluate_all(here, p, cfg, tol)) by_id[r.id].push_back(r);
        }
    }
    for (const auto& id : ids) {
        auto& summary = rep.per_identity[id];
        for (auto& r : by_id[id]) {
            switch (r.status) {
                case Status::OK: summary.ok++, rep.ok++; break;
                case Status::SKIPPED_SINGULAR: summary.skipped++, rep.skipped++; break;
                case Status::FAILED: summary.failed++, rep.failed++; break;
            }
            if (r.status != Status::SKIPPED_SINGULAR && r.rel_residual >= summary.worst_rel) {
                summary.worst_rel = r.rel_residual;
                summary.worst_point = r.point;
            }
            rep.results.push_back(r);
        }
    }
    return rep;
}

void write_sweep_csv(std::ostream& os, const SweepReport& report) {
    CsvWriter w(os, {"id", "sigma", "rho", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_res", "rel_res", "status"});
    for (const auto& r : report.results) {
        w << r.id << r.point.sigma << r.point.rho << r.lhs.real() << r.lhs.imag() << r.rhs.real()
          << r.rhs.imag() << r.abs_residual << r.rel_residual << status_name(r.status);
        w.end_row();
    }
}

void print_sweep_summary(std::ostream& os, const SweepReport& report) {
    for (const auto& [id, s] : report.per_identity) {
        os << id << ": ok=" << s.ok << " skipped=" << s.skipped << " failed=" << s.failed;
        if (s.out_of_domain) os << " out_of_domain=" << s.out_of_domain;
        os << " worst_rel=" << fmt15(s.worst_rel) << " at (" << fmt15(s.worst_point.sigma) << ", "
           << fmt15(s.worst_point.rho) << ")\n";
    }
    os << "TOTAL: ok=" << report.ok << " skipped=" << report.skipped << " failed=" << report.failed
       << " out_of_domain=" << report.out_of_domain << "\n";
}

PhiDerivativeReport phi_derivative_sign(const Grid& grid) {
    PhiDerivativeReport rep;
    const double h = 1e-5;
    for (double s : grid.sigmas)
        for (double r : grid.rhos) {
            if (r < 10) throw std::invalid_argument("phi_derivative_sign: rho must be >= 10");
            const ComplexPoint p{s, r};
            const double closed = phi_sigma_derivative(p);
            const double fd = (phi_ratio({s + h, r}) - phi_ratio({s - h, r})) / (2 * h);
            const double rel = std::abs(fd - closed) / std::abs(closed);
            rep.points++;
            if (closed < 0) rep.negative++;
            if (rel >= rep.worst_fd_rel) {
                rep.worst_fd_rel = rel;
                rep.worst_point = p;
            }
        }
    return rep;
}

}  // namespace zexplore
