#include "zexplore/counterexample.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "zexplore/complexfn.hpp"
#include "zexplore/errors.hpp"
#include "zexplore/symbols.hpp"

namespace zexplore {

namespace {

using C = ComplexValue;

constexpr double kOverflowMargin = 30.0;

// log sin(z), stable for large |Im z|; the branch is irrelevant since only
// exp of sums is used.  nullopt at an exact zero.
C log_sin(C z) {
    const double y = z.imag();
    const C i(0.0, 1.0);
    if (y > 1.0) return -i * z + std::log(C(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * i * z));
    if (y < -1.0) return i * z + std::log(C(0.0, -0.5)) + std::log(1.0 - std::exp(-2.0 * i * z));
    return std::log(std::sin(z));
}

C log_cos(C z) { return log_sin(z + kPi / 2.0); }

// log(cosh^2(pi rho0) - cos^2(pi sigma0)) = log((cosh 2x - cos 2y)/2)
double log_norm(const CounterexampleConfig& cc) {
    const double x = kPi * cc.rho0, c2 = std::cos(2.0 * kPi * cc.sigma0);
    const double e = std::exp(-2.0 * x);
    return 2.0 * x - 2.0 * std::log(2.0) + std::log1p(e * e - 2.0 * c2 * e);
}

std::array<C, 4> planted(const CounterexampleConfig& cc) {
    const C s0(cc.sigma0, cc.rho0);
    return {s0, -s0, std::conj(s0), -std::conj(s0)};
}

void guard(C s, const CounterexampleConfig& cc) {
    if (std::abs(s.imag()) > cc.rho0 + kOverflowMargin)
        throw OverflowError("zeta_c: |rho| beyond rho0 + 30, the sine product is not representable");
}

bool is_zero(C z) { return z == C(0.0, 0.0); }

}  // namespace

void CounterexampleConfig::validate() const {
    if (!(sigma0 > 0.5 && sigma0 < 1.0)) throw std::invalid_argument("sigma0 must lie in (1/2, 1)");
    if (!(rho0 > 1.0)) throw std::invalid_argument("rho0 must exceed 1");
}

ComplexValue w_factor(ComplexValue s, const CounterexampleConfig& cc) {
    cc.validate();
    guard(s, cc);
    C acc = -2.0 * log_norm(cc);
    for (C sk : planted(cc)) {
        const C z = kPi * (s - sk);
        if (is_zero(std::sin(z))) return 0.0;
        acc += log_sin(z);
    }
    return std::exp(acc);
}

ComplexValue w_factor_d1(ComplexValue s, const CounterexampleConfig& cc) {
    cc.validate();
    guard(s, cc);
    const auto roots = planted(cc);
    std::array<C, 4> ls, lc;
    std::array<bool, 4> zero{};
    for (int k = 0; k < 4; ++k) {
        const C z = kPi * (s - roots[k]);
        zero[k] = is_zero(std::sin(z));
        ls[k] = zero[k] ? C(0.0) : log_sin(z);
        lc[k] = log_cos(z);
    }
    const double ln = -2.0 * log_norm(cc);
    // product rule, each term in log form so a vanishing factor stays exact
    C sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        bool vanishes = false;
        C acc = ln + lc[k];
        for (int j = 0; j < 4; ++j) {
            if (j == k) continue;
            if (zero[j]) vanishes = true;
            acc += ls[j];
        }
        if (!vanishes) sum += kPi * std::exp(acc);
    }
    return sum;
}

ComplexValue zeta_c(ComplexPoint s, const CounterexampleConfig& cc, const EvalConfig& cfg) {
    const C w = w_factor(s.s(), cc);
    return zeta(s, cfg) * w;
}

ComplexValue zeta_c_d1(ComplexPoint s, const CounterexampleConfig& cc, const EvalConfig& cfg) {
    const C w = w_factor(s.s(), cc), w1 = w_factor_d1(s.s(), cc);
    ZetaJet j = zeta_jet(s, cfg, 1);
    return j.d1 * w + j.z * w1;
}

ComplexValue zeta_c_one_minus(ComplexPoint s, const CounterexampleConfig& cc, const EvalConfig& cfg) {
    // zeta(1 - s) = conj zeta(1 - sigma + i rho)
    const C z = std::conj(zeta(s.reflected(), cfg));
    return z * w_factor(1.0 - s.s(), cc);
}

SymmetryReport verify_w_symmetry(const CounterexampleConfig& cc, const std::vector<double>& sigmas,
                                 const std::vector<double>& rhos, const EvalConfig& cfg) {
    cc.validate();
    SymmetryReport rep;
    const auto roots = planted(cc);
    auto near_planted = [&](C s) {
        for (C sk : roots) {
            const C d = s - sk;
            if (std::abs(d - std::round(d.real())) < 1e-3) return true;
        }
        return false;
    };
    for (double sigma : sigmas)
        for (double rho : rhos) {
            const ComplexPoint p{sigma, rho};
            const C s = p.s();
            if (near_planted(s) || near_planted(1.0 - s)) {
                rep.skipped++;
                continue;
            }
            rep.points++;
            const C w = w_factor(s, cc);
            rep.worst_w_symmetry = std::max(rep.worst_w_symmetry, std::abs(w - w_factor(1.0 - s, cc)) / std::abs(w));
            rep.worst_w_conjugacy =
                std::max(rep.worst_w_conjugacy, std::abs(w_factor(std::conj(s), cc) - std::conj(w)) / std::abs(w));
            const C plain = zeta(p, cfg) / std::conj(zeta(p.reflected(), cfg));
            const C with_w = zeta_c(p, cc, cfg) / zeta_c_one_minus(p, cc, cfg);
            rep.worst_ratio = std::max(rep.worst_ratio, std::abs(with_w - plain) / std::abs(plain));
        }
    return rep;
}

LimitRatio limit_ratio_at_zero(const CounterexampleConfig& cc, const EvalConfig& cfg) {
    cc.validate();
    LimitRatio out;
    out.at = {1.0 - cc.sigma0, cc.rho0};
    // both |zeta_c(s)| and |zeta_c(1 - sigma + i rho)| vanish there; differentiate along sigma
    const C num = zeta_c_d1(out.at, cc, cfg);
    const C den = zeta_c_d1(out.at.reflected(), cc, cfg);
    out.ratio = std::norm(num) / std::norm(den);
    out.phi = phi_ratio(out.at);
    return out;
}

std::vector<Fig4Row> figure4_data(const CounterexampleConfig& cc, int n, const EvalConfig& cfg) {
    cc.validate();
    if (n < 2) throw std::invalid_argument("figure4_data: need at least two samples");
    std::vector<Fig4Row> rows;
    for (int i = 0; i < n; ++i) {
        Fig4Row r;
        r.sigma = 0.5 * i / (n - 1);
        const ComplexPoint p{r.sigma, cc.rho0};
        r.abs_zc = std::abs(zeta_c(p, cc, cfg));
        r.abs_zc_reflected = std::abs(zeta_c(p.reflected(), cc, cfg));
        if (std::abs(r.sigma - (1.0 - cc.sigma0)) < 1e-9)
            r.ratio = std::abs(zeta_c_d1(p, cc, cfg)) / std::abs(zeta_c_d1(p.reflected(), cc, cfg));
        else
            r.ratio = r.abs_zc / r.abs_zc_reflected;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace zexplore
