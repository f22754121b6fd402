#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "zexplore/types.hpp"

namespace zexplore {

enum class Status { OK, SKIPPED_SINGULAR, FAILED };
const char* status_name(Status s);

enum class Domain { Plane, CriticalLine };

struct IdentityInfo {
    std::string id;
    Domain domain = Domain::Plane;
    double rho_min = 0.0;  // asymptotic or sign statements only hold above this
    std::string summary;
};

const std::vector<IdentityInfo>& registry();
const IdentityInfo* find_identity(const std::string& id);
bool in_domain(const IdentityInfo& info, ComplexPoint s);

struct IdentityResult {
    std::string id;
    ComplexPoint point;
    ComplexValue lhs, rhs;
    double abs_residual = 0;
    double rel_residual = 0;
    Status status = Status::OK;
    std::string part;  // which constituent equation produced the reported residual
};

// Residual tolerance: ZEXPLORE_TOL if set, else 1e-7.
double default_tolerance();

// Throws std::invalid_argument for unknown ids or points outside the domain.
IdentityResult evaluate(const std::string& id, ComplexPoint s, const EvalConfig& cfg = {},
                        double tol = default_tolerance());

// Evaluates several ids at one point sharing a single set of zeta evaluations.
std::vector<IdentityResult> evaluate_all(const std::vector<std::string>& ids, ComplexPoint s,
                                         const EvalConfig& cfg = {},
                                         double tol = default_tolerance());

// |zeta(1/2 + i rho2)| / |zeta(1/2 + i rho1)| against exp of the integral of
// tan(alpha - beta)/f.  singular when the interval holds a zero (cos(alpha - beta)
// changes sign or drops below 1e-6 on a 200-point scan).
struct ExpRepResult {
    double integral = 0, lhs = 0, rhs = 0, rel = 0;
    bool singular = false;
};
ExpRepResult exp_representation(double rho1, double rho2, const EvalConfig& cfg = {});

// zeta' components rebuilt from zeta, zeta'' and the critical-line f at any s;
// exact on sigma = 1/2, residual grows with the distance from the line.
struct PerturbationTerm {
    double lhs = 0, rhs = 0, scale = 0;  // scale: sum of |terms| on the right
};
struct PerturbationTerms {
    PerturbationTerm real, imag;
};
PerturbationTerms perturbation_terms(ComplexPoint s, const EvalConfig& cfg = {});

// Interim relation on the line with beta replaced by beta + shift; relative
// residual, NaN where its denominator vanishes.
double interim_probe(ComplexPoint s, double beta_shift, const EvalConfig& cfg = {});

struct Grid {
    std::vector<double> sigmas;
    std::vector<double> rhos;

    static Grid linspace(double sigma_min, double sigma_max, int n_sigma, double rho_min,
                         double rho_max, int n_rho);
    static Grid standard();
};

struct IdentitySummary {
    double worst_rel = 0;
    ComplexPoint worst_point;
    int ok = 0, skipped = 0, failed = 0, out_of_domain = 0;
};

struct SweepReport {
    Grid grid;
    std::vector<IdentityResult> results;  // deterministic order: id, then sigma, then rho
    std::map<std::string, IdentitySummary> per_identity;
    int ok = 0, skipped = 0, failed = 0, out_of_domain = 0;
};

// Critical-line identities use sigma = 1/2 with the grid's rho values.
SweepReport sweep(const std::vector<std::string>& ids, const Grid& grid,
                  const EvalConfig& cfg = {}, double tol = default_tolerance());

void write_sweep_csv(std::ostream& os, const SweepReport& report);
void print_sweep_summary(std::ostream& os, const SweepReport& report);

struct PhiDerivativeReport {
    int points = 0;
    int negative = 0;
    double worst_fd_rel = 0;  // closed form vs centred difference of Phi
    ComplexPoint worst_point;
};

// Sign of d Phi/d sigma in closed form over a grid with rho >= 10, plus a
// finite-difference cross-check (step 1e-5).
PhiDerivativeReport phi_derivative_sign(const Grid& grid);

}  // namespace zexplore
