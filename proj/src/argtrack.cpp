#include "zexplore/argtrack.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "zexplore/errors.hpp"

namespace zexplore {

const char* angle_name(AngleKind k) {
    switch (k) {
        case AngleKind::Alpha: return "alpha";
        case AngleKind::AlphaTilde: return "alpha_tilde";
        case AngleKind::Beta: return "beta";
        case AngleKind::BetaTilde: return "beta_tilde";
        case AngleKind::Gamma: return "gamma";
        case AngleKind::Theta: return "theta";
    }
    return "?";
}

std::optional<AngleKind> parse_angle(const char* name) {
    for (AngleKind k : {AngleKind::Alpha, AngleKind::AlphaTilde, AngleKind::Beta,
                        AngleKind::BetaTilde, AngleKind::Gamma, AngleKind::Theta})
        if (std::strcmp(name, angle_name(k)) == 0) return k;
    return std::nullopt;
}

double principal_angle(AngleKind kind, double sigma, double rho, const EvalConfig& cfg) {
    switch (kind) {
        case AngleKind::Alpha: return principal_arg(zeta_jet({sigma, rho}, cfg, 0).z);
        case AngleKind::AlphaTilde: return principal_arg(zeta_jet({1.0 - sigma, rho}, cfg, 0).z);
        case AngleKind::Beta: return principal_arg(zeta_jet({sigma, rho}, cfg, 1).d1);
        case AngleKind::BetaTilde: return principal_arg(zeta_jet({1.0 - sigma, rho}, cfg, 1).d1);
        case AngleKind::Gamma: return principal_arg(zeta_jet({sigma, rho}, cfg, 2).d2);
        case AngleKind::Theta: return principal_arg(gamma({sigma, rho}));
    }
    return 0.0;
}

int ArgTrace::k_at(std::size_t i) const {
    return static_cast<int>(std::lround((angle_samples[i] - principal_samples[i]) / kPi));
}

ArgTracker::ArgTracker(AngleKind kind, double sigma, const EvalConfig& cfg, double rho_start)
    : kind_(kind), sigma_(sigma), cfg_(cfg), rho_(rho_start) {
    principal_ = principal_angle(kind_, sigma_, rho_, cfg_);
    angle_ = principal_;
    trace_.kind = kind;
    trace_.sigma = sigma;
    record();
}

void ArgTracker::record() {
    trace_.rho_samples.push_back(rho_);
    trace_.angle_samples.push_back(angle_);
    trace_.principal_samples.push_back(principal_);
}

double ArgTracker::advance_to(double target) {
    double step = kBaseStep;
    while (rho_ < target) {
        double h = std::min(step, target - rho_);
        double p_new, d;
        for (;;) {
            p_new = principal_angle(kind_, sigma_, rho_ + h, cfg_);
            d = wrap_pi(p_new - principal_);
            if (std::abs(d) < kPi / 2.0 || h <= kMinStep) break;
            h /= 2.0;
        }
        if (std::abs(d) >= kPi / 2.0) {
            // the step collapsed: a zero sits inside [rho, rho + h] and the
            // direction genuinely turns over.  A simple zero flips it by exactly
            // pi, whose sign is rounding noise: continue the local trend instead.
            if (std::abs(std::abs(d) - kPi) < 0.05 && last_slope_ != 0.0 && (d > 0) != (last_slope_ > 0))
                d -= std::copysign(2.0 * kPi, d);
            int m = static_cast<int>(std::lround(d / kPi));
            trace_.jump_events.push_back({rho_ + h / 2.0, m, (m % 2) != 0});
        }
        double raw = p_new - principal_;
        if (std::abs(raw - d) > kPi) trace_.branch_events.push_back({rho_ + h / 2.0, raw > 0 ? 1 : -1});
        // tiny steps next to a zero are dominated by rounding in arg
        if (std::abs(d) < kPi / 2.0 && h >= 1e-3) last_slope_ = d / h;
        angle_ += d;
        principal_ = p_new;
        rho_ += h;
        record();
        step = std::min(kBaseStep, 2.0 * h);
    }
    return angle_;
}

ArgTrace track(double sigma, double rho_end, AngleKind kind, const EvalConfig& cfg) {
    ArgTracker t(kind, sigma, cfg);
    t.advance_to(rho_end);
    return t.trace();
}

PolarBundle polar_bundle(ComplexPoint s, const EvalConfig& cfg) {
    PolarBundle pb;
    ZetaJet j = zeta_jet(s, cfg, 2);
    ZetaJet t = zeta_jet(s.reflected(), cfg, 1);
    pb.abs_z = std::abs(j.z);
    pb.abs_z1 = std::abs(j.d1);
    pb.abs_z2 = std::abs(j.d2);
    pb.abs_tz = std::abs(t.z);
    pb.abs_tz1 = std::abs(t.d1);
    auto tracked = [&](AngleKind k) {
        ArgTracker tr(k, s.sigma, cfg);
        return tr.advance_to(s.rho);
    };
    pb.alpha = tracked(AngleKind::Alpha);
    pb.alpha_tilde = tracked(AngleKind::AlphaTilde);
    pb.beta = tracked(AngleKind::Beta);
    pb.beta_tilde = tracked(AngleKind::BetaTilde);
    pb.gamma_arg = tracked(AngleKind::Gamma);
    pb.theta = log_gamma(s).imag();
    pb.k_alpha = static_cast<int>(std::lround((pb.alpha - principal_arg(j.z)) / kPi));
    pb.k_alpha_tilde = static_cast<int>(std::lround((pb.alpha_tilde - principal_arg(t.z)) / kPi));
    return pb;
}

double alpha_p_closed(ComplexPoint s, int k) {
    const double sp = std::sin(kPi * s.sigma);
    if (std::abs(sp) < 1e-12) throw DomainError("alpha_p_closed: sigma must not be 0 or 1");
    const double theta = log_gamma(s).imag();
    const double arg = (std::cos(kPi * s.sigma) - 1.0) * std::tanh(kPi * s.rho / 2.0) / sp;
    return -theta - std::atan(arg) + s.rho * kLog2Pi + k * kPi;
}

double alpha_p_slope(ComplexPoint s) {
    return kLog2Pi - digamma(s).real() +
           kPi / 2.0 * std::sin(kPi * s.sigma) / (std::cos(kPi * s.sigma) + std::cosh(kPi * s.rho));
}

Winding winding_k(ComplexPoint s, double arg_sum) {
    const double x = (arg_sum - alpha_p_closed(s, 0)) / kPi;
    Winding w;
    w.k = static_cast<int>(std::lround(x));
    w.residual = std::abs(x - w.k);
    w.odd = (w.k % 2) != 0;
    if (w.residual > 1e-3)
        throw NonIntegerResidual("winding_k: (sum - closed form)/pi = " + std::to_string(x) +
                                 " is not an integer");
    return w;
}

double critical_arg_closed(double rho, int k) {
    const double theta = log_gamma({0.5, rho}).imag();
    return -theta / 2.0 + rho / 2.0 * kLog2Pi - 9.0 * kPi / 8.0 +
           std::atan(std::exp(kPi * rho)) / 2.0 + k * kPi;
}

double brent_form(double rho, double theta) {
    return -theta / 2.0 + rho / 2.0 * kLog2Pi + kPi / 8.0 - std::atan(std::exp(-kPi * rho)) / 2.0;
}

int brent_anchor(const EvalConfig& cfg) {
    // on the real axis: tracked alpha starts at the principal value, theta = 0
    const double alpha0 = principal_angle(AngleKind::Alpha, 0.5, 0.0, cfg);
    return static_cast<int>(std::lround((alpha0 - brent_form(0.0, 0.0)) / kPi));
}

BrentComparison brent_compare(double rho, double tracked_alpha, int k_anchor) {
    BrentComparison b;
    b.rho = rho;
    b.alpha = tracked_alpha;
    b.k_anchor = k_anchor;
    b.brent_continuous = brent_form(rho, log_gamma({0.5, rho}).imag());
    b.brent_principal = brent_form(rho, principal_arg(gamma({0.5, rho})));
    b.diff_continuous_over_pi = (b.alpha - b.brent_continuous) / kPi - k_anchor;
    b.diff_principal_over_pi = (b.alpha - b.brent_principal) / kPi - k_anchor;
    return b;
}

BrentComparison brent_compare(double rho, const EvalConfig& cfg) {
    ArgTracker t(AngleKind::Alpha, 0.5, cfg);
    t.advance_to(rho);
    return brent_compare(rho, t.angle(), brent_anchor(cfg));
}

}  // namespace zexplore
