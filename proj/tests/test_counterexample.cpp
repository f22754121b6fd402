#include <doctest.h>

#include "support.hpp"
#include "zexplore/complexfn.hpp"
#include "zexplore/counterexample.hpp"
#include "zexplore/errors.hpp"
#include "zexplore/symbols.hpp"
#include "zexplore/zeros.hpp"

using namespace zexplore;
using testing::rel;

namespace {
const CounterexampleConfig kFig4{0.75, 12.0};
}

TEST_CASE("planted zeros") {
    CHECK(std::abs(zeta_c({0.75, 12.0}, kFig4)) == 0.0);
    CHECK(std::abs(zeta_c({1.75, 12.0}, kFig4)) < 1e-10);
    CHECK(std::abs(zeta_c({0.25, 12.0}, kFig4)) < 1e-10);
    CHECK(std::abs(zeta_c({0.75, -12.0}, kFig4)) < 1e-10);
}

TEST_CASE("residue at s = 1 is one") {
    const double e = 1e-5;
    CHECK(std::abs(e * zeta_c({1.0 + e, 0.0}, kFig4) - 1.0) < 1e-4);
    CHECK_THROWS_AS(zeta_c({1.0, 0.0}, kFig4), PoleError);
}

TEST_CASE("configuration and overflow guards") {
    CHECK_THROWS_AS(zeta_c({0.3, 5.0}, CounterexampleConfig{0.5, 12.0}), std::invalid_argument);
    CHECK_THROWS_AS(zeta_c({0.3, 5.0}, CounterexampleConfig{0.75, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(zeta_c({0.3, 42.5}, kFig4), OverflowError);
    CHECK_NOTHROW(zeta_c({0.3, 41.5}, kFig4));
}

TEST_CASE("w symmetry and the ratio identity") {
    const ComplexValue a = w_factor({0.3, 12.5}, kFig4), b = w_factor({0.7, -12.5}, kFig4);
    CHECK(rel(a, b) < 1e-9);  // w(s) = w(1 - s)
    CHECK(rel(w_factor({0.7, 12.5}, kFig4), std::conj(a)) < 1e-9);
    const ComplexValue r = w_factor({1.3, 0.0}, kFig4);
    CHECK(std::abs(r.imag()) <= 1e-15 * std::abs(r));

    const ComplexPoint p{0.25, 9.0};
    const ComplexValue lhs = zeta_c(p, kFig4) / zeta_c_one_minus(p, kFig4);
    const ComplexValue rhs = zeta(p) / std::conj(zeta(p.reflected()));
    CHECK(rel(lhs, rhs) < 1e-8);
    CHECK(std::abs(std::abs(lhs) - testing::derived("zcrat_abs(0.25+9i)")) < 1e-9);
}

TEST_CASE("verify_w_symmetry over a grid") {
    const std::vector<double> sigmas{0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9};
    std::vector<double> rhos;
    for (int i = 0; i <= 20; ++i) rhos.push_back(2.0 + 2.0 * i);
    rhos.push_back(12.0);
    const SymmetryReport rep = verify_w_symmetry(kFig4, sigmas, rhos);
    CHECK(rep.points + rep.skipped == 7 * 22);
    CHECK(rep.skipped >= 2);  // 0.25 + 12i and 0.75 + 12i
    CHECK(rep.worst_w_symmetry < 1e-9);
    CHECK(rep.worst_w_conjugacy < 1e-9);
    CHECK(rep.worst_ratio < 1e-8);
}

TEST_CASE("limit ratio at the reflected planted zero") {
    const LimitRatio lr = limit_ratio_at_zero(kFig4);
    CHECK(lr.at.sigma == doctest::Approx(0.25));
    CHECK(lr.ratio > 1.0);
    CHECK(std::abs(lr.ratio - lr.phi) < 1e-6);
    CHECK(std::abs(lr.ratio - testing::derived("limit_ratio(0.25+12i)")) < 1e-6);
    const LimitRatio near_line = limit_ratio_at_zero({0.5 + 1e-6, 12.0});
    CHECK(std::abs(near_line.ratio - 1.0) < 1e-5);
}

TEST_CASE("figure 4 series") {
    const auto rows = figure4_data(kFig4);
    REQUIRE(rows.size() == 201);
    CHECK(rows.front().sigma == 0.0);
    CHECK(rows.back().sigma == 0.5);
    for (const auto& r : rows) {
        INFO("sigma=" << r.sigma);
        if (std::abs(r.sigma - 0.25) < 1e-12) {
            CHECK(r.abs_zc < 1e-10);
            CHECK(r.abs_zc_reflected < 1e-10);
            CHECK(r.ratio * r.ratio == doctest::Approx(limit_ratio_at_zero(kFig4).ratio).epsilon(1e-6));
        }
        if (r.sigma < 0.5) CHECK(r.ratio > 1.0);
        if (std::abs(r.sigma - 0.1) < 1e-12) {
            CHECK(r.ratio > 1.0);
            CHECK(std::abs(r.ratio - testing::derived("fig4_ratio(0.1)")) < 1e-9);
        }
    }
    CHECK(std::abs(rows.back().ratio - 1.0) < 1e-10);
    CHECK_THROWS_AS(figure4_data(kFig4, 1), std::invalid_argument);
}

// ---- properties ----

TEST_CASE("property: zeta_c is self-conjugate") {
    testing::Gen g(601);
    for (int i = 0; i < 20; ++i) {
        const ComplexPoint p = g.strip(0.5, 40.0);
        INFO("seed=" << g.seed() << " s=" << p.sigma << "+" << p.rho << "i");
        CHECK(rel(zeta_c({p.sigma, -p.rho}, kFig4), std::conj(zeta_c(p, kFig4))) < 1e-9);
    }
}

TEST_CASE("property: zeta_c satisfies the functional equation") {
    testing::Gen g(602);
    for (int i = 0; i < 50; ++i) {
        const ComplexPoint p = g.strip(0.5, 40.0);
        INFO("seed=" << g.seed() << " s=" << p.sigma << "+" << p.rho << "i");
        const ComplexValue lhs = zeta_c_one_minus(p, kFig4), rhs = chi(p) * zeta_c(p, kFig4);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max({std::abs(lhs), std::abs(rhs), 1e-300}));
    }
}

TEST_CASE("property: w_factor_d1 matches a centred difference") {
    testing::Gen g(603);
    for (int i = 0; i < 30; ++i) {
        const ComplexValue s(g.uniform(0.05, 0.95), g.uniform(0.5, 30.0));
        INFO("seed=" << g.seed() << " s=" << s);
        const double h = 1e-5;
        const ComplexValue fd = (w_factor(s + h, kFig4) - w_factor(s - h, kFig4)) / (2 * h);
        const ComplexValue d = w_factor_d1(s, kFig4);
        // far from the planted zeros w ~ 1 and the difference is roundoff, ~eps |w| / h
        CHECK(std::abs(fd - d) < 1e-6 * std::abs(d) + 1e-8 * std::abs(w_factor(s, kFig4)));
    }
}

TEST_CASE("property: zero conditions hold at planted off-line zeros") {
    testing::Gen g(604);
    for (int i = 0; i < 10; ++i) {
        const CounterexampleConfig cc{g.uniform(0.55, 0.95), g.uniform(2.0, 30.0)};
        const ComplexPoint s0{cc.sigma0, cc.rho0};
        const ComplexPoint s0r{1.0 - cc.sigma0, cc.rho0};
        const ZeroConditionReport rep =
            zero_conditions(s0, zeta_c_d1(s0, cc), zeta_c_d1(s0r, cc), 1e-5);
        INFO("seed=" << g.seed() << " s0=" << cc.sigma0 << "+" << cc.rho0 << "i");
        for (const char* name : {"Zabs1", "Zabs2", "ZcondR", "ZcondI", "tanBetaW", "tanBetaWInv", "BetaCondition",
                                 "BetaConditionG"}) {
            INFO(name << " residual=" << rep.find(name)->residual);
            CHECK(rep.find(name)->holds);
        }
    }
}

TEST_CASE("property: the magnitude inequality holds left of the line") {
    testing::Gen g(605);
    for (int i = 0; i < 10; ++i) {
        const CounterexampleConfig cc{g.uniform(0.55, 0.95), g.uniform(10.0, 30.0)};
        INFO("seed=" << g.seed() << " s0=" << cc.sigma0 << "+" << cc.rho0 << "i");
        for (const auto& r : figure4_data(cc, 51)) {
            if (r.sigma < 0.5) CHECK(r.ratio > 1.0);
            CHECK(r.abs_zc >= r.abs_zc_reflected);
        }
    }
}
