// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "zexplore/argtrack.hpp"
#include "zexplore/complexfn.hpp"
#include "zexplore/counterexample.hpp"
#include "zexplore/figures.hpp"
#include "zexplore/identities.hpp"
#include "zexplore/oracle.hpp"
#include "zexplore/symbols.hpp"
#include "zexplore/zeros.hpp"

using namespace zexplore;

namespace {

const std::string kData = ZEXPLORE_DATA_DIR;

struct Verdict {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::vector<std::vector<double>> csv_rows(const std::function<void(std::ostream&)>& write) {
    std::ostringstream os;
    write(os);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream r(line);
        for (std::string cell; std::getline(r, cell, ',');) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict engine() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = read_golden_file(kData + "/golden_oracle.csv");
    const OracleReport rep = check_against_golden(rows);
    const double t = seconds_since(t0);
    v.require(rep.ok(), std::to_string(rep.mismatches.size()) + " mismatches");
    v.require(t < 5, "runtime " + num(t) + " s");
    v.detail = std::to_string(rep.rows) + " rows, " + num(t) + " s" + (v.pass ? "" : "; " + v.detail);
    return v;
}

Verdict identity_sweep() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> ids;
    for (const auto& info : registry()) ids.push_back(info.id);
    const SweepReport rep = sweep(ids, Grid::standard(), {}, 1e-7);
    const double t = seconds_since(t0);
    v.require(rep.failed == 0, std::to_string(rep.failed) + " FAILED");
    v.require(t < 60, "runtime " + num(t) + " s");
    const std::string counts = std::to_string(ids.size()) + " ids: ok=" + std::to_string(rep.ok) +
                               " skipped=" + std::to_string(rep.skipped) + " failed=" + std::to_string(rep.failed) +
                               ", " + num(t) + " s";
    v.detail = v.pass ? counts : counts + "; " + v.detail;
    return v;
}

Verdict phi_on_line() {
    Verdict v;
    double worst = 0;
    for (double rho : {1.0, 5.0, 14.1347, 30.0, 50.0}) worst = std::max(worst, std::abs(phi_ratio({0.5, rho}) - 1));
    v.require(worst < 1e-12, "max |Phi-1| = " + num(worst));
    if (v.pass) v.detail = "max |Phi-1| = " + num(worst);
    return v;
}

Verdict figure1() {
    Verdict v;
    double worst = 0;
    int bad_k = 0;
    for (const auto& r : csv_rows([](std::ostream& os) { write_figure1(os); })) {
        if (r[0] < 2 - 1e-9 || r[0] > 14 + 1e-9) continue;
        if (r[3] != 2) ++bad_k;
        worst = std::max(worst, std::abs(r[1] - r[2]));
    }
    v.require(bad_k == 0, std::to_string(bad_k) + " samples with k != 2");
    v.require(worst < 1e-6, "residual " + num(worst));
    if (v.pass) v.detail = "k = 2, max residual " + num(worst);
    return v;
}

Verdict figure2() {
    Verdict v;
    const double first_zero = read_oracle_zeros(kData + "/oracle_zeros.csv", "FULL").at(0);
    double below = 0, above = 0;
    for (const auto& r : csv_rows([](std::ostream& os) { write_figure2(os); })) {
        if (r[0] < first_zero) below = std::max(below, std::abs(r[4]) * kPi);
        const double d = r[5] - r[4];
        if (r[0] > first_zero) above = std::max(above, std::abs(d - std::round(d)) * kPi);
    }
    v.require(below < 1e-6, "below first zero: " + num(below));
    v.require(above < 1e-6, "above first zero, residual mod pi: " + num(above));
    if (v.pass) v.detail = "below " + num(below) + ", mod pi above " + num(above);
    return v;
}

Verdict figure3() {
    Verdict v;
    const auto all = read_oracle_zeros(kData + "/oracle_zeros.csv", "FULL");
    std::vector<double> zs;
    for (double z : all)
        if (z > 30 && z < 50) zs.push_back(z);
    const double h = 0.01;
    std::vector<double> rho, val;
    for (int i = 0; i <= 2000; ++i) {
        rho.push_back(30.0 + i * h);
        val.push_back(beta_minus_alpha(rho.back()));
    }
    std::vector<double> jumps;
    for (std::size_t i = 1; i < val.size(); ++i)
        if (std::abs(val[i] - val[i - 1]) > kPi / 2) jumps.push_back(0.5 * (rho[i] + rho[i - 1]));
    bool match = jumps.size() == zs.size();
    for (std::size_t i = 0; match && i < zs.size(); ++i) match = std::abs(jumps[i] - zs[i]) <= h;
    v.require(match, std::to_string(jumps.size()) + " discontinuities vs " + std::to_string(zs.size()) + " zeros");
    int in_band = 0, rising = 0;
    for (std::size_t i = 0; i < val.size(); ++i) {
        if (val[i] > -kPi / 2 && val[i] < kPi / 2) ++in_band;
        bool near = false;
        for (double z : zs) near = near || std::abs(rho[i] - z) < 2e-4;
        if (!near && beta_minus_alpha(rho[i] + 1e-4) - beta_minus_alpha(rho[i] - 1e-4) >= 0) ++rising;
    }
    v.require(in_band == 0, std::to_string(in_band) + " samples inside (-pi/2, pi/2)");
    v.require(rising == 0, std::to_string(rising) + " samples with non-negative slope");
    if (v.pass) v.detail = std::to_string(zs.size()) + " jumps at the oracle zeros, slope < 0, outside band";
    return v;
}

Verdict zero_location() {
    Verdict v;
    const auto all = read_oracle_zeros(kData + "/oracle_zeros.csv", "FULL");
    std::vector<double> ref;
    for (double z : all)
        if (z > 10 && z < 30) ref.push_back(z);
    const auto zs = find_zeros(10, 30);
    v.require(zs.size() == 3 && ref.size() == 3, std::to_string(zs.size()) + " zeros found");
    double loc = 0, approach = 0, tanb = 0;
    for (std::size_t i = 0; i < zs.size() && i < ref.size(); ++i) {
        loc = std::max(loc, std::abs(zs[i].rho0 - ref[i]));
        approach = std::max(approach, zs[i].criterion_residual);
        tanb = std::max(tanb, zero_conditions({0.5, zs[i].rho0}).find("tanBeta")->residual);
    }
    v.require(loc < 1e-6, "location error " + num(loc));
    v.require(approach < 1e-5, "approach residual " + num(approach));
    v.require(tanb < 1e-5, "tanBeta residual " + num(tanb));
    if (v.pass)
        v.detail = "location " + num(loc) + ", approach " + num(approach) + ", tanBeta " + num(tanb);
    return v;
}

Verdict f_sign() {
    Verdict v;
    const double rs = f_sign_change();
    v.require(std::abs(rs - 6.28) < 0.01, "rho_s = " + num(rs));
    double worst = -1;
    for (int i = 0; i < 100; ++i) {
        const ComplexPoint s{0.5, 7.0 + 43.0 * i / 99};
        worst = std::max(worst, std::cos(principal_arg(zeta(s)) - principal_arg(zeta_d1(s))));
    }
    v.require(worst <= 1e-9, "max cos(alpha-beta) = " + num(worst));
    if (v.pass) v.detail = "rho_s = " + std::to_string(rs) + ", max cos(alpha-beta) = " + num(worst);
    return v;
}

Verdict exprep() {
    Verdict v;
    double worst = 0;
    for (auto [a, b] : {std::pair{15.0, 20.0}, std::pair{26.0, 29.0}}) {
        const ExpRepResult r = exp_representation(a, b);
        v.require(!r.singular, "interval marked singular");
        worst = std::max(worst, r.rel);
    }
    v.require(worst < 1e-6, "rel " + num(worst));
    if (v.pass) v.detail = "max rel " + num(worst);
    return v;
}

Verdict counterexample() {
    Verdict v;
    const CounterexampleConfig cc{0.75, 12.0};
    v.require(std::abs(zeta_c({0.75, 12.0}, cc)) < 1e-12, "zeta_c(s0) != 0");
    const double e = 1e-5;
    const double residue = std::abs(e * zeta_c({1.0 + e, 0.0}, cc) - 1.0);
    v.require(residue < 1e-4, "residue error " + num(residue));
    const ComplexPoint p{0.25, 9.0};
    const ComplexValue lhs = zeta_c(p, cc) / zeta_c_one_minus(p, cc);
    const ComplexValue rhs = zeta(p) / std::conj(zeta(p.reflected()));
    const double zcrat = std::abs(lhs - rhs) / std::abs(rhs);
    v.require(zcrat < 1e-8, "ratio identity residual " + num(zcrat));
    int below_one = 0;
    double at_half = 0;
    for (const Fig4Row& r : figure4_data(cc)) {
        if (r.sigma < 0.5 && r.ratio <= 1.0) ++below_one;
        if (r.sigma == 0.5) at_half = std::abs(r.ratio - 1.0);
    }
    v.require(below_one == 0, std::to_string(below_one) + " figure-4 ratios <= 1 below sigma = 1/2");
    v.require(at_half < 1e-10, "ratio at sigma = 1/2 off by " + num(at_half));
    const LimitRatio lr = limit_ratio_at_zero(cc);
    v.require(std::abs(lr.ratio - lr.phi) < 1e-6 && lr.ratio > 1,
              "limit ratio " + num(lr.ratio) + " vs Phi " + num(lr.phi));
    if (v.pass) v.detail = "residue " + num(residue) + ", ratio identity " + num(zcrat) + ", limit " +
                           std::to_string(lr.ratio) + " = Phi";
    return v;
}

Verdict phi_derivative() {
    Verdict v;
    const PhiDerivativeReport rep = phi_derivative_sign(Grid::linspace(0.05, 0.95, 20, 10, 60, 20));
    v.require(rep.points == 400 && rep.negative == 400,
              std::to_string(rep.negative) + "/" + std::to_string(rep.points) + " negative");
    v.require(rep.worst_fd_rel < 1e-5, "finite-difference rel " + num(rep.worst_fd_rel));
    if (v.pass) v.detail = "400/400 negative, fd rel " + num(rep.worst_fd_rel);
    return v;
}

Verdict asymptotics() {
    Verdict v;
    for (double sigma : {0.3, 0.5}) {
        const ComplexPoint s{sigma, 50.0};
        const AsymptoticSymbols a = asymptotic_symbols(s);
        const ComplexValue psi = digamma(s);
        const double dre = std::abs(a.psi_re - psi.real()), dim = std::abs(a.psi_im - psi.imag());
        v.require(dre < 1e-5, "Re psi off by " + num(dre) + " at sigma " + num(sigma));
        v.require(dim < 1e-5, "Im psi off by " + num(dim) + " at sigma " + num(sigma));
    }
    const ComplexPoint s{0.3, 50.0};
    const AsymptoticSymbols a = asymptotic_symbols(s);
    const SymbolSet exact = build_symbols(s, ZetaBundle{});
    const double r1 = std::abs(a.p1 - exact.p1) / std::abs(exact.p1);
    const double r2 = std::abs(a.p2 - exact.p2) / std::abs(exact.p2);
    v.require(r1 < 1e-3, "p1 rel " + num(r1));
    v.require(r2 < 1e-3, "p2 rel " + num(r2));
    const ZeroConditionReport rep = zero_conditions({0.5, 50.0});
    const double t = rep.find("Tan2Beta")->rhs, ta = rep.find("Tan2Beta_Asy")->rhs;
    const double cross = std::abs(std::sin(std::atan(t) - std::atan(ta)));
    v.require(cross < 1e-8, "Tan2Beta cross-product " + num(cross));
    if (v.pass) v.detail = "p1 rel " + num(r1) + ", p2 rel " + num(r2);
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Verdict (*)()>> criteria{
        {"engine vs golden oracle", engine},
        {"identity sweep on the standard grid", identity_sweep},
        {"Phi = 1 on the critical line", phi_on_line},
        {"figure 1: argument sum with k = 2", figure1},
        {"figure 2: Brent comparison", figure2},
        {"figure 3: beta - alpha on [30, 50]", figure3},
        {"zero location on [10, 30]", zero_location},
        {"f sign change and cos(alpha - beta) <= 0", f_sign},
        {"exponential representation by quadrature", exprep},
        {"counterexample suite", counterexample},
        {"Phi sigma-derivative sign", phi_derivative},
        {"asymptotic expansions at rho = 50", asymptotics},
    };
    int failed = 0, n = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [name, run] : criteria) {
        ++n;
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        if (!v.pass) ++failed;
        std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", n, name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed in %.1f s\n", n - failed, n, seconds_since(t0));
    return failed == 0 ? 0 : 1;
}
