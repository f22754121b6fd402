#pragma once

#include <ostream>
#include <vector>

#include "zexplore/types.hpp"

namespace zexplore {

// Planted zero s0 = sigma0 + i rho0.
struct CounterexampleConfig {
    double sigma0 = 0.75;
    double rho0 = 12.0;
    void validate() const;
};

// w(s) = sin(pi(s-s0)) sin(pi(s+s0)) sin(pi(s-conj s0)) sin(pi(s+conj s0))
//        / (cosh^2(pi rho0) - cos^2(pi sigma0))^2, any complex s.
ComplexValue w_factor(ComplexValue s, const CounterexampleConfig& cc);
ComplexValue w_factor_d1(ComplexValue s, const CounterexampleConfig& cc);

// zeta_c(s) = zeta(s) w(s). Throws OverflowError above rho0 + 30.
ComplexValue zeta_c(ComplexPoint s, const CounterexampleConfig& cc, const EvalConfig& cfg = {});
ComplexValue zeta_c_d1(ComplexPoint s, const CounterexampleConfig& cc, const EvalConfig& cfg = {});
// zeta_c at 1 - s (the genuine reflection, conjugate height).
ComplexValue zeta_c_one_minus(ComplexPoint s, const CounterexampleConfig& cc,
                              const EvalConfig& cfg = {});

struct SymmetryReport {
    int points = 0, skipped = 0;
    double worst_w_symmetry = 0;   // |w(s) - w(1-s)| / |w(s)|
    double worst_w_conjugacy = 0;  // |w(conj s) - conj w(s)| / |w(s)|
    double worst_ratio = 0;        // zeta_c(s)/zeta_c(1-s) vs zeta(s)/zeta(1-s)
};

SymmetryReport verify_w_symmetry(const CounterexampleConfig& cc, const std::vector<double>& sigmas,
                                 const std::vector<double>& rhos, const EvalConfig& cfg = {});

struct LimitRatio {
    double ratio = 0;  // lim |zeta_c(s)|^2 / |zeta_c(1 - sigma + i rho)|^2 at the reflected zero
    double phi = 0;    // closed-form Phi at that point
    ComplexPoint at;
};

// Uses first-order l'Hopital: the planted zeros are simple.
LimitRatio limit_ratio_at_zero(const CounterexampleConfig& cc, const EvalConfig& cfg = {});

struct Fig4Row {
    double sigma = 0, abs_zc = 0, abs_zc_reflected = 0, ratio = 0;
};

// sigma over [0, 1/2] at rho = rho0; ratio = abs_zc / abs_zc_reflected, taken
// from the derivative ratio where both vanish.
std::vector<Fig4Row> figure4_data(const CounterexampleConfig& cc, int n = 201,
                                  const EvalConfig& cfg = {});

}  // namespace zexplore
