#include "zexplore/complexfn.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zexplore/errors.hpp"

namespace zexplore {

namespace {

using C = ComplexValue;

// B_2, B_4, ..., B_32
constexpr std::array<double, 16> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// B_{2k} / (2k)!
const std::array<double, 16>& bernoulli_over_factorial() {
    static const std::array<double, 16> table = [] {
        std::array<double, 16> t{};
        for (int k = 1; k <= 16; ++k) t[k - 1] = kBernoulli[k - 1] / factorial(2 * k);
        return t;
    }();
    return table;
}

bool near_nonpositive_integer(C z) {
    if (z.real() > 0.5) return false;
    double n = std::round(z.real());
    return std::abs(z - C(n, 0.0)) < 1e-8;
}

// Second-order forward-mode jet in s.
struct Jet {
    C v, d1, d2;
};

Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
Jet operator*(const Jet& a, C c) { return {a.v * c, a.d1 * c, a.d2 * c}; }

// x^{-s} for real x > 0 as a jet in s.
Jet inv_power(double x, C s) {
    double L = std::log(x);
    C v = std::exp(-s * L);
    return {v, -L * v, L * L * v};
}

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

C lanczos_gamma(C z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    C x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    C t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// Stirling series for log Gamma, |z| >= 10, Re z > 0.
C stirling_log_gamma(C z) {
    C r = (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
    C zinv = 1.0 / z, z2inv = zinv * zinv, zp = zinv;
    for (int k = 1; k <= 10; ++k) {
        r += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * zp;
        zp *= z2inv;
    }
    return r;
}

}  // namespace

void EvalConfig::validate() const {
    if (euler_maclaurin_terms && *euler_maclaurin_terms < 10)
        throw std::invalid_argument("euler_maclaurin_terms must be >= 10");
    if (bernoulli_terms < 1 || bernoulli_terms > 15)
        throw std::invalid_argument("bernoulli_terms must lie in [1, 15]");
    if (!(target_abs_tol >= 1e-13))
        throw std::invalid_argument("target_abs_tol must be >= 1e-13");
}

int EvalConfig::terms_for(double rho) const {
    if (euler_maclaurin_terms) return *euler_maclaurin_terms;
    return std::max(20, static_cast<int>(std::ceil(1.3 * std::abs(rho))));
}

double principal_arg(ComplexValue z) {
    double a = std::atan2(z.imag(), z.real());
    // atan2 returns -pi for (-x, -0.0); keep the (-pi, pi] convention
    return a == -kPi ? kPi : a;
}

double modulus(ComplexValue z) { return std::abs(z); }

double wrap_pi(double x) {
    double y = std::remainder(x, 2.0 * kPi);
    return y <= -kPi ? y + 2.0 * kPi : y;
}

ComplexValue gamma(ComplexPoint p) {
    C z = p.s();
    if (near_nonpositive_integer(z))
        throw PoleError("gamma: pole at non-positive integer " + std::to_string(z.real()));
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
    return lanczos_gamma(z);
}

ComplexValue log_gamma(ComplexPoint p) {
    if (!(p.sigma > 0.0)) throw DomainError("log_gamma: requires sigma > 0");
    C z = p.s();
    // Shift up with the recurrence; every log(z + k) has Re > 0 so its
    // principal value is continuous in rho, and so is the sum.
    C shift = 0.0;
    while (std::abs(z) < 10.0 || z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift;
}

ComplexValue digamma(ComplexPoint p) {
    C z = p.s();
    if (near_nonpositive_integer(z))
        throw PoleError("digamma: pole at non-positive integer " + std::to_string(z.real()));
    C acc = 0.0;
    while (std::abs(z) < 10.0 || z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    C zinv = 1.0 / z, z2inv = zinv * zinv, zp = z2inv;
    C r = std::log(z) - 0.5 * zinv;
    for (int k = 1; k <= 10; ++k) {
        r -= kBernoulli[k - 1] / (2.0 * k) * zp;
        zp *= z2inv;
    }
    return r + acc;
}

ZetaJet zeta_jet(ComplexPoint p, const EvalConfig& cfg, int order) {
    cfg.validate();
    C s = p.s();
    if (std::abs(s - 1.0) < 1e-8) throw PoleError("zeta: pole at s = 1");

    const int N = cfg.terms_for(p.rho);
    const int M = cfg.bernoulli_terms;
    const auto& bf = bernoulli_over_factorial();

    Jet sum{0.0, 0.0, 0.0};
    for (int n = 1; n < N; ++n) sum = sum + inv_power(n, s);

    Jet Ns = inv_power(N, s);  // N^{-s}
    // N^{1-s}/(s-1)
    C r = 1.0 / (s - 1.0);
    Jet recip{r, -r * r, 2.0 * r * r * r};
    sum = sum + (Ns * C(double(N), 0.0)) * recip;
    sum = sum + Ns * C(0.5, 0.0);

    // Bernoulli corrections: B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    Jet poch{s, 1.0, 0.0};
    double npow = 1.0 / N;  // N^{1-2k}
    auto term = [&](int k) { return (poch * Ns) * C(bf[k - 1] * npow, 0.0); };
    for (int k = 1; k <= M; ++k) {
        sum = sum + term(k);
        Jet a{s + double(2 * k - 1), 1.0, 0.0};
        Jet b{s + double(2 * k), 1.0, 0.0};
        poch = poch * a * b;
        npow /= double(N) * N;
    }
    Jet omitted = term(M + 1);
    double tail = std::abs(omitted.v);
    if (order >= 1) tail = std::max(tail, std::abs(omitted.d1));
    if (order >= 2) tail = std::max(tail, std::abs(omitted.d2));
    if (tail > cfg.target_abs_tol)
        throw AccuracyError("zeta: Euler-Maclaurin tail " + std::to_string(tail) +
                            " exceeds tolerance at sigma=" + std::to_string(p.sigma) +
                            " rho=" + std::to_string(p.rho));
    return {sum.v, sum.d1, sum.d2, tail};
}

ComplexValue zeta(ComplexPoint s, const EvalConfig& cfg) { return zeta_jet(s, cfg, 0).z; }
ComplexValue zeta_d1(ComplexPoint s, const EvalConfig& cfg) { return zeta_jet(s, cfg, 1).d1; }
ComplexValue zeta_d2(ComplexPoint s, const EvalConfig& cfg) { return zeta_jet(s, cfg, 2).d2; }

ComplexValue chi(ComplexPoint p) {
    C s = p.s();
    return 2.0 * std::cos(kPi * s / 2.0) * gamma(p) * std::exp(-s * kLog2Pi);
}

}  // namespace zexplore
