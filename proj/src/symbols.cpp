#include "zexplore/symbols.hpp"

#include <cmath>

#include "zexplore/errors.hpp"

namespace zexplore {

namespace {

using C = ComplexValue;

// f(s) = ln(2pi) - psi(s) + (pi/2) tan(pi s/2); tan has poles at odd integers.
C f_of_s(ComplexPoint p, C psi) {
    C s = p.s();
    double nearest_odd = 2.0 * std::round((p.sigma - 1.0) / 2.0) + 1.0;
    if (std::abs(s - C(nearest_odd, 0.0)) < 1e-8)
        throw PoleError("f(s): tan(pi s/2) pole at an odd integer");
    return kLog2Pi - psi + kPi / 2.0 * std::tan(kPi * s / 2.0);
}

void fill_zeta_dependent(SymbolSet& y, const ZetaBundle& zb) {
    const double sigma = y.point.sigma, rho = y.point.rho;
    y.zeta_p = zb.zi * y.g1 + zb.zr * y.g2;
    y.zeta_m = zb.zi * y.g2 - zb.zr * y.g1;
    y.zeta_d = ((-8.0 * y.Psi1 * y.c0 + 2.0 * kPi * std::sinh(kPi * rho)) * zb.z1i +
                (-4.0 * y.c0 * y.Psi2 + 2.0 * kPi * std::sin(kPi * sigma)) * zb.z1r) *
               y.pi_sigma;
}

SymbolSet base_symbols(ComplexPoint p) {
    SymbolSet y;
    y.point = p;
    const double sigma = p.sigma, rho = p.rho;
    const double hs = kPi * sigma / 2.0, hr = kPi * rho / 2.0;

    y.gamma_value = gamma(p);
    y.gamma_abs = std::abs(y.gamma_value);
    y.theta_cont = log_gamma(p).imag();
    y.psi = digamma(p);

    y.c0 = (std::cos(kPi * sigma) + std::cosh(kPi * rho)) / 2.0;
    y.rho_pi = rho * kLog2Pi;
    y.rho_theta = y.rho_pi - y.theta_cont;

    const double sr = std::sin(y.rho_pi), cr = std::cos(y.rho_pi);
    y.S1 = sr * std::cos(hs) * std::cosh(hr) + cr * std::sin(hs) * std::sinh(hr);
    y.S2 = sr * std::sin(hs) * std::sinh(hr) - cr * std::cos(hs) * std::cosh(hr);

    const double GR = y.gamma_value.real(), GI = y.gamma_value.imag();
    y.g1 = 4.0 * GI * y.S2 + 4.0 * GR * y.S1;
    y.g2 = 4.0 * GI * y.S1 - 4.0 * GR * y.S2;

    y.Psi1 = y.psi.imag();
    y.Psi2 = -2.0 * kLog2Pi + 2.0 * y.psi.real();

    y.p1 = 8.0 * y.c0 * y.Psi1 - 2.0 * kPi * std::sinh(kPi * rho);
    y.p2 = 4.0 * y.c0 * y.Psi2 - 2.0 * kPi * std::sin(kPi * sigma);
    y.q1 = -y.Psi2 + kPi / 2.0 * std::sin(kPi * sigma) / y.c0;
    y.q2 = 2.0 * y.Psi1 - kPi / 2.0 * std::sinh(kPi * rho) / y.c0;

    y.h1 = -y.g1 * y.p1 + y.g2 * y.p2;
    y.h2 = y.g1 * y.p2 + y.g2 * y.p1;
    y.h3 = -y.g1 * y.p2 + y.g2 * y.p1;
    y.h4 = y.g1 * y.p1 + y.g2 * y.p2;

    const double norm = std::sqrt(2.0) / (8.0 * std::sqrt(kPi));
    y.a = norm * y.g1;
    y.b = norm * y.g2;

    y.f_s = f_of_s(p, y.psi);
    y.f_rho = f_rho(rho);
    y.chi = chi(p);
    y.pi_sigma = std::pow(2.0 * kPi, sigma);
    y.Phi = phi_ratio(p);
    return y;
}

}  // namespace

double f_rho(double rho) {
    // 4 cosh / (2 ln2pi cosh - 2 Re psi cosh + pi), divided through by cosh(pi rho)
    const double re_psi = digamma({0.5, rho}).real();
    return 4.0 / (2.0 * kLog2Pi - 2.0 * re_psi + kPi / std::cosh(kPi * rho));
}

double f_rho_derivative(double rho) {
    const double h = 1e-4;
    auto d = [&](double step) { return (f_rho(rho + step) - f_rho(rho - step)) / (2.0 * step); };
    return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

double phi_ratio(ComplexPoint p) {
    const double g = std::abs(gamma(p));
    return std::pow(2.0 * kPi, 2.0 * p.sigma) /
           (2.0 * (std::cos(kPi * p.sigma) + std::cosh(kPi * p.rho)) * g * g);
}

double phi_sigma_derivative(ComplexPoint p) {
    const double g = std::abs(gamma(p));
    const double Psi2 = -2.0 * kLog2Pi + 2.0 * digamma(p).real();
    const double cc = std::cos(kPi * p.sigma) + std::cosh(kPi * p.rho);
    return std::pow(2.0 * kPi, 2.0 * p.sigma) * (kPi * std::sin(kPi * p.sigma) - Psi2 * cc) /
           (2.0 * cc * cc * g * g);
}

ZetaBundle build_bundle(ComplexPoint s, const EvalConfig& cfg) {
    ZetaBundle b;
    ZetaJet j = zeta_jet(s, cfg, 2);
    ZetaJet t = zeta_jet(s.reflected(), cfg, 2);
    b.zr = j.z.real(), b.zi = j.z.imag();
    b.z1r = j.d1.real(), b.z1i = j.d1.imag();
    b.z2r = j.d2.real(), b.z2i = j.d2.imag();
    b.tzr = t.z.real(), b.tzi = t.z.imag();
    b.tz1r = t.d1.real(), b.tz1i = t.d1.imag();
    b.tz2r = t.d2.real(), b.tz2i = t.d2.imag();
    return b;
}

SymbolSet build_symbols(ComplexPoint s, const ZetaBundle& zb) {
    SymbolSet y = base_symbols(s);
    fill_zeta_dependent(y, zb);
    return y;
}

SymbolSet build_symbols(ComplexPoint s, const EvalConfig& cfg) {
    return build_symbols(s, build_bundle(s, cfg));
}

AsymptoticSymbols asymptotic_symbols(ComplexPoint p) {
    if (p.rho < 20.0) throw DomainError("asymptotic_symbols: needs rho >= 20");
    if (!(p.sigma > 0.0 && p.sigma <= 1.0)) throw DomainError("asymptotic_symbols: needs 0 < sigma <= 1");
    const double s = p.sigma, r = p.rho;
    const double e = std::exp(kPi * r), c = std::cos(kPi * s);
    const double cubic = s * (2.0 * s * s - 6.0 * s + 3.0);
    AsymptoticSymbols a;
    a.psi_re = std::log(r) + (2.0 * s * s - 4.0 * s + 1.0) / (4.0 * r * r);
    a.psi_im = kPi / 2.0 + (1.0 - s) / r + cubic / (6.0 * r * r * r);
    a.p1 = (-2.0 * (s - 1.0) / r + cubic / (3.0 * r * r * r)) * e + 2.0 * kPi * c -
           4.0 * (s - 1.0) * c / r + 2.0 * s * c / 3.0 * (2.0 * s * s - 6.0 * s + 3.0) / (r * r * r);
    a.p2 = (std::log(r * r / (4.0 * kPi * kPi)) + (s * s - 2.0 * s + 0.5) / (r * r)) * e +
           c * std::log(std::pow(r, 4) / (16.0 * std::pow(kPi, 4))) - 2.0 * kPi * std::sin(kPi * s) +
           (2.0 * s * s - 4.0 * s + 1.0) * c / (r * r);
    return a;
}

}  // namespace zexplore
