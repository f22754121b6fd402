#pragma once

#include "zexplore/types.hpp"

namespace zexplore {

ComplexValue gamma(ComplexPoint s);
// Re = ln|Gamma|, Im = theta(s), continuous in rho from the real axis (sigma > 0).
ComplexValue log_gamma(ComplexPoint s);
ComplexValue digamma(ComplexPoint s);

// Value, first and second s-derivative of zeta from one Euler-Maclaurin pass.
struct ZetaJet {
    ComplexValue z, d1, d2;
    double tail = 0.0;  // magnitude estimate of the first omitted Bernoulli term
};

ZetaJet zeta_jet(ComplexPoint s, const EvalConfig& cfg = {}, int order = 2);
ComplexValue zeta(ComplexPoint s, const EvalConfig& cfg = {});
ComplexValue zeta_d1(ComplexPoint s, const EvalConfig& cfg = {});
ComplexValue zeta_d2(ComplexPoint s, const EvalConfig& cfg = {});

// chi(s) = 2 cos(pi s/2) Gamma(s) (2 pi)^-s, so that zeta(1-s) = chi(s) zeta(s).
ComplexValue chi(ComplexPoint s);

// Principal argument in (-pi, pi]; the only place a principal branch is taken.
double principal_arg(ComplexValue z);
double modulus(ComplexValue z);

// Wrap an angle into (-pi, pi].
double wrap_pi(double x);

}  // namespace zexplore
