#pragma once

#include <complex>
#include <numbers>
#include <optional>

namespace zexplore {

using ComplexValue = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLog2Pi = 1.8378770664093454836;  // ln(2 pi)

struct ComplexPoint {
    double sigma = 0.0;
    double rho = 0.0;

    ComplexValue s() const { return {sigma, rho}; }
    // 1 - sigma + i rho: the mirror image across the critical line, same height.
    ComplexPoint reflected() const { return {1.0 - sigma, rho}; }
};

inline ComplexPoint point_of(ComplexValue s) { return {s.real(), s.imag()}; }

struct EvalConfig {
    // Direct-sum cutoff N; unset means max(20, ceil(1.3 rho)).
    std::optional<int> euler_maclaurin_terms;
    int bernoulli_terms = 10;
    double target_abs_tol = 1e-12;

    void validate() const;  // throws std::invalid_argument
    int terms_for(double rho) const;
};

}  // namespace zexplore
