#pragma once

#include <optional>
#include <vector>

#include "zexplore/complexfn.hpp"
#include "zexplore/types.hpp"

namespace zexplore {

enum class AngleKind {
    Alpha,       // arg zeta(s)
    AlphaTilde,  // arg zeta(1 - sigma + i rho)
    Beta,        // arg zeta'(s)
    BetaTilde,   // arg zeta'(1 - sigma + i rho)
    Gamma,       // arg zeta''(s)
    Theta,       // arg Gamma(s)
};

const char* angle_name(AngleKind k);
std::optional<AngleKind> parse_angle(const char* name);

// Principal argument of the function behind `kind` at (sigma, rho).
double principal_angle(AngleKind kind, double sigma, double rho, const EvalConfig& cfg);

struct JumpEvent {
    double rho = 0;
    int jump_over_pi = 0;  // jump rounded to a multiple of pi
    bool odd = false;
};

struct BranchEvent {
    double rho = 0;
    int direction = 0;  // +1 when the principal value wraps from -pi to +pi
};

struct ArgTrace {
    AngleKind kind = AngleKind::Alpha;
    double sigma = 0;
    std::vector<double> rho_samples;
    std::vector<double> angle_samples;
    std::vector<double> principal_samples;
    std::vector<JumpEvent> jump_events;
    std::vector<BranchEvent> branch_events;

    // (angle - principal) / pi at sample i; always even because the tracked
    // angle stays a true argument of the function.
    int k_at(std::size_t i) const;
};

// Incremental unwrapper. Starts on the real axis (rho = 0) at the principal
// value there, so a negative real starting value is anchored at +pi.
class ArgTracker {
public:
    static constexpr double kBaseStep = 0.05;
    static constexpr double kMinStep = 1e-9;

    ArgTracker(AngleKind kind, double sigma, const EvalConfig& cfg = {}, double rho_start = 0.0);

    // Advance to rho (>= current); samples every base step on the way.
    double advance_to(double rho);
    double angle() const { return angle_; }
    double rho() const { return rho_; }
    double principal() const { return principal_; }
    const ArgTrace& trace() const { return trace_; }

private:
    void record();

    AngleKind kind_;
    double sigma_;
    EvalConfig cfg_;
    double rho_;
    double angle_;
    double principal_;
    double last_slope_ = 0.0;
    ArgTrace trace_;
};

ArgTrace track(double sigma, double rho_end, AngleKind kind, const EvalConfig& cfg = {});

// Moduli and continuous angles at a point (tracked up from rho = 0).
struct PolarBundle {
    double abs_z = 0, abs_z1 = 0, abs_z2 = 0, abs_tz = 0, abs_tz1 = 0;
    double alpha = 0, beta = 0, gamma_arg = 0, theta = 0, alpha_tilde = 0, beta_tilde = 0;
    int k_alpha = 0, k_alpha_tilde = 0;
};

PolarBundle polar_bundle(ComplexPoint s, const EvalConfig& cfg = {});

// -Im LogGamma - arctan((cos(pi sigma) - 1) sinh(pi rho/2) / (cosh(pi rho/2) sin(pi sigma)))
//   + rho ln(2 pi) + k pi
double alpha_p_closed(ComplexPoint s, int k);
// Right-hand side of d alpha_p / d rho.
double alpha_p_slope(ComplexPoint s);

struct Winding {
    int k = 0;
    bool odd = false;
    double residual = 0;  // distance of (sum - closed)/pi from k
};

// k from a sum of arguments at s; throws NonIntegerResidual beyond 1e-3.
Winding winding_k(ComplexPoint s, double arg_sum);

// Closed form of arg zeta(1/2 + i rho) on the critical line.
double critical_arg_closed(double rho, int k);

struct BrentComparison {
    double rho = 0;
    double alpha = 0;                 // tracked arg zeta(1/2 + i rho)
    double brent_continuous = 0;      // theta taken as Im LogGamma
    double brent_principal = 0;       // theta taken as principal arg Gamma
    int k_anchor = 0;                 // multiple of pi fixed as rho -> 0+
    double diff_continuous_over_pi = 0;
    double diff_principal_over_pi = 0;
};

// -theta/2 + (rho/2) ln(2 pi) + pi/8 - arctan(exp(-pi rho))/2 for a given theta.
double brent_form(double rho, double theta);
int brent_anchor(const EvalConfig& cfg = {});
BrentComparison brent_compare(double rho, const EvalConfig& cfg = {});
// Same, reusing a tracked alpha value (rho must match).
BrentComparison brent_compare(double rho, double tracked_alpha, int k_anchor);

}  // namespace zexplore
