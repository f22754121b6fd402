#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zexplore/types.hpp"

namespace zexplore {

enum class ZeroKind { FULL, REAL_HALF, IMAG_HALF };
const char* zero_kind_name(ZeroKind k);

struct ZeroRecord {
    double rho0 = 0;
    ZeroKind kind = ZeroKind::FULL;
    int n = 0;
    double residual_abs_zeta = 0;
    double beta0 = 0;             // tracked arg zeta' at rho0
    double criterion_residual = 0;  // |tracked angle criterion - (n or n+1/2) pi|
    int alpha_jump_over_pi = 0;   // FULL only: jump of tracked alpha across rho0
    bool anomalous = false;       // IMAG_HALF with zeta_R < 0 and d zeta_R/d rho > 0
};

// Hardy's Z(t) = exp(i vartheta(t)) zeta(1/2 + i t), real on the critical line.
double hardy_z(double t, const EvalConfig& cfg = {});

std::vector<ZeroRecord> find_zeros(double rho_min, double rho_max, const EvalConfig& cfg = {});
std::vector<ZeroRecord> find_half_zeros(double rho_min, double rho_max, ZeroKind kind,
                                        const EvalConfig& cfg = {});

void write_zero_csv(std::ostream& os, const std::vector<ZeroRecord>& zeros);

struct ConditionResult {
    std::string name;
    double lhs = 0, rhs = 0;
    double residual = 0;
    bool holds = false;
};

struct ZeroConditionReport {
    ComplexPoint s0;
    std::vector<ConditionResult> conditions;
    int tan_beta_sign = 0;  // branch of the +- root that fits best
    const ConditionResult* find(const std::string& name) const;
    bool all_hold() const;
};

// Derivatives of a function F satisfying the functional equation, at s0 and
// at 1 - sigma0 + i rho0. For zeta these are zeta'(s0) and zeta'(1 - conj(s0)).
ZeroConditionReport zero_conditions(ComplexPoint s0, ComplexValue d1, ComplexValue d1_reflected,
                                    double tol = 1e-6);
ZeroConditionReport zero_conditions(ComplexPoint s0, const EvalConfig& cfg = {},
                                    double tol = 1e-6);

// Two-sided limit of (alpha - beta) - (n + 1/2) pi at a critical-line zero,
// from principal angles at rho0 +- delta.
double approach_residual(double rho0, double delta = 1e-4, const EvalConfig& cfg = {});

// Root of 1 / f_rho, where the critical-line f changes sign.
double f_sign_change(double lo = 5.0, double hi = 8.0);

}  // namespace zexplore
