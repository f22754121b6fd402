#pragma once

#include "zexplore/complexfn.hpp"
#include "zexplore/types.hpp"

namespace zexplore {

// Scalar shorthands shared by every functional-equation identity.
struct SymbolSet {
    ComplexPoint point;
    double c0 = 0, g1 = 0, g2 = 0, S1 = 0, S2 = 0;
    double p1 = 0, p2 = 0, q1 = 0, q2 = 0;
    double h1 = 0, h2 = 0, h3 = 0, h4 = 0;
    double a = 0, b = 0;
    ComplexValue f_s;   // ln(2pi) - psi(s) + (pi/2) tan(pi s/2)
    double f_rho = 0;   // critical-line f, depends on rho only
    ComplexValue chi;
    double pi_sigma = 0;  // (2 pi)^sigma
    double Psi1 = 0, Psi2 = 0;
    double rho_pi = 0, rho_theta = 0;
    double zeta_p = 0, zeta_m = 0, zeta_d = 0;
    double Phi = 0;
    double gamma_abs = 0;
    double theta_cont = 0;
    ComplexValue gamma_value;
    ComplexValue psi;
};

// Components of zeta, zeta', zeta'' at s and at the reflected point 1 - sigma + i rho.
// Primes are d/ds; the rho-derivative of any of them is i times the s-derivative.
struct ZetaBundle {
    double zr = 0, zi = 0, z1r = 0, z1i = 0, z2r = 0, z2i = 0;
    double tzr = 0, tzi = 0, tz1r = 0, tz1i = 0, tz2r = 0, tz2i = 0;

    ComplexValue z() const { return {zr, zi}; }
    ComplexValue z1() const { return {z1r, z1i}; }
    ComplexValue z2() const { return {z2r, z2i}; }
    ComplexValue tz() const { return {tzr, tzi}; }
    ComplexValue tz1() const { return {tz1r, tz1i}; }
    ComplexValue tz2() const { return {tz2r, tz2i}; }
};

SymbolSet build_symbols(ComplexPoint s, const EvalConfig& cfg = {});
// Same, reusing an already evaluated bundle for zeta_p, zeta_m, zeta_d.
SymbolSet build_symbols(ComplexPoint s, const ZetaBundle& zb);
ZetaBundle build_bundle(ComplexPoint s, const EvalConfig& cfg = {});

// 4 cosh(pi rho) / (2 ln(2pi) cosh(pi rho) - 2 Re psi(1/2 + i rho) cosh(pi rho) + pi)
double f_rho(double rho);
// Its rho-derivative by Richardson-extrapolated centred differences.
double f_rho_derivative(double rho);
// Closed form of |zeta(s)|^2 / |zeta(1 - sigma + i rho)|^2.
double phi_ratio(ComplexPoint s);
// d Phi / d sigma in closed form.
double phi_sigma_derivative(ComplexPoint s);

struct AsymptoticSymbols {
    double psi_re = 0, psi_im = 0, p1 = 0, p2 = 0;
};

// Large-rho expansions of psi, p1, p2; rho >= 20 and 0 < sigma <= 1.
AsymptoticSymbols asymptotic_symbols(ComplexPoint s);

}  // namespace zexplore
