#include <doctest.h>

#include <cmath>
#include <numbers>

#include "crossnum/bounds.hpp"
#include "crossnum/errors.hpp"

using namespace crossnum;

namespace {

double val(FormulaName f, std::uint64_t n, int d, double s) {
    const auto v = bound_value(f, BigCount(n), d, s);
    REQUIRE(v.has_value());
    return *v;
}

} // namespace

TEST_CASE("limit constant") {
    for (double s : {0.5, 1.0, 2.5}) CHECK(asymptotic_constant(1, s) == doctest::Approx(std::pow(2.0, s)));
    CHECK(asymptotic_constant(3, 2.0) == doctest::Approx(16.0));
    CHECK(asymptotic_constant(2, 1.0) == doctest::Approx(4.0));
    CHECK(std::isfinite(std::log(asymptotic_constant(150, 1.0))));
}

TEST_CASE("formula values at documented points") {
    const double e = std::numbers::e;
    CHECK(val(FormulaName::TensorTrick45, 15, 1, 1.0) == doctest::Approx(2 * e * std::log(15.0) / 15.0));
    CHECK(val(FormulaName::TensorTrick45, 15, 1, 1.0) < 1.0);
    CHECK(val(FormulaName::TensorTrick45, 15, 1, 1.0) == doctest::Approx(0.9815).epsilon(1e-4));
    CHECK(val(FormulaName::SharpUpper43, 729, 2, 1.0) == doctest::Approx(9 * std::log(729.0) / 729.0));
    CHECK(val(FormulaName::SharpUpper43, 729, 2, 1.0) == doctest::Approx(0.0813).epsilon(1e-3));
    CHECK(exact_an_sharp(729, 2, 1.0).value() <= val(FormulaName::SharpUpper43, 729, 2, 1.0));

    CHECK(preasymptotic_alpha(2.0 * 5, 5) == doctest::Approx(2.0));          // n = 4^d
    CHECK(preasymptotic_alpha(2.0 * 6 / 3.0, 6) == doctest::Approx(3.0));    // n = 2^{2d/3}

    // direct transcriptions
    const double n = 5000, d = 2, s = 1.5, L = std::log(n);
    CHECK(val(FormulaName::SharpLowerNarrow, 5000, 2, 1.5) ==
          doctest::Approx(std::pow(9.0 * std::pow(L, d - 1) / (4.0 * n), s)));
    CHECK(val(FormulaName::PSquaredBound, 5000, 2, 1.5) ==
          doctest::Approx(std::pow(std::pow(std::numbers::pi * std::numbers::pi / 3 - 1, d) / n, s / 2)));
    CHECK(val(FormulaName::PreUpper46, 20, 3, 1.5) == doctest::Approx(std::pow(e * e / 20.0, 1.5 / (2 + std::log2(3.0)))));
    const double alpha = 2 + std::log2(3.0 / std::log2(20.0) + 0.5);
    CHECK(val(FormulaName::PreLower47, 20, 3, 1.5) == doctest::Approx(std::pow(2.0, -1.5) * std::pow(20.0, -1.5 / alpha)));
    CHECK(val(FormulaName::PlusUpper49, 1000, 2, 1.0) == doctest::Approx(18.0 * std::log(1000.0) / 1000.0));
    CHECK(val(FormulaName::StarUpper410, 1000, 2, 1.0) == doctest::Approx(0.5 * 36.0 * std::log(1000.0) / 1000.0));
    CHECK(val(FormulaName::StarUpper410, 1000, 2, 0.5) == doctest::Approx(std::sqrt(9.0 * std::log(1000.0) / 1000.0)));
    const double B = 2 + std::log(12.0);
    CHECK(val(FormulaName::SharpLower43, 9000, 2, 1.0) == doctest::Approx(1.5 * 4 / (B * B) * std::log(9000.0) / 9000.0));
    CHECK(val(FormulaName::StarLower410, 9000, 2, 1.0) == doctest::Approx(12.0 / (2 * B * B) * std::log(9000.0) / 9000.0));
    CHECK(val(FormulaName::StarLower410, 9000, 2, 0.4) ==
          doctest::Approx(0.5 * std::pow(48.0 / (2 * B * B) * std::log(9000.0) / 9000.0, 0.4)));
    CHECK(val(FormulaName::IntMUpper413, 1000, 2, 2.0) ==
          doctest::Approx(36.0 * 36.0 * 0.5 * std::pow(std::log(1000.0) / 1000.0, 2)));
    CHECK(val(FormulaName::IntMLower413, 9000, 2, 2.0) ==
          doctest::Approx(std::pow(12.0 / (2 * B * B), 2) * std::pow(std::log(9000.0) / 9000.0, 2)));
}

TEST_CASE("validity ranges as printed") {
    const auto& up = formula(FormulaName::SharpUpper43);
    CHECK_FALSE(up.valid(728, 2, 1.0));
    CHECK(up.valid(729, 2, 1.0));
    const auto& lo = formula(FormulaName::SharpLower43);
    CHECK_FALSE(lo.valid(7862, 2, 1.0));
    CHECK(lo.valid(7863, 2, 1.0));
    const auto& rem = formula(FormulaName::SharpLowerNarrow);
    CHECK(rem.experimental);
    CHECK_FALSE(rem.valid(48, 2, 1.0));
    CHECK(rem.valid(49, 2, 1.0));
    CHECK_FALSE(rem.valid(6, 1, 1.0));  // 48^{1/2} = 6.93
    CHECK(rem.valid(7, 1, 1.0));
    const auto& pre = formula(FormulaName::PreUpper46);
    CHECK(pre.valid(1, 2, 1.0));
    CHECK(pre.valid(16, 2, 1.0));
    CHECK_FALSE(pre.valid(17, 2, 1.0));
    CHECK_FALSE(pre.valid(5, 1, 1.0));
    CHECK_FALSE(formula(FormulaName::PreLower47).valid(1, 3, 1.0));
    CHECK(formula(FormulaName::PreLower47).valid(96, 3, 1.0));
    CHECK_FALSE(formula(FormulaName::PreLower47).valid(97, 3, 1.0));
    CHECK_FALSE(formula(FormulaName::TensorTrick45).valid(224, 2, 1.0));
    CHECK(formula(FormulaName::TensorTrick45).valid(225, 2, 1.0));
    CHECK_FALSE(formula(FormulaName::IntMUpper413).valid(1000, 2, 1.5));
    CHECK_FALSE(bound_value(FormulaName::SharpUpper43, 5, 2, 1.0).has_value());
    CHECK_THROWS_AS(bound_value(FormulaName::SharpUpper43, 0, 2, 1.0), InvalidArgument);
    CHECK(parse_formula("pre-upper-46") == FormulaName::PreUpper46);
    CHECK_FALSE(parse_formula("nope").has_value());
}

TEST_CASE("simple analytic facts") {
    for (int d = 2; d <= 9; ++d)
        for (double s : {1.0, 2.0}) {
            CHECK(val(FormulaName::PreUpper46, 8, d, s) < 1.0);
            CHECK(val(FormulaName::PreUpper46, 7, d, s) > 1.0);  // e^2 = 7.39
        }
    for (int d = 1; d <= 6; ++d) {
        const BigCount n = pow_big(15, d);
        CHECK(*bound_value(FormulaName::TensorTrick45, n, d, 1.0) < 1.0);
    }
    for (int d = 1; d <= 8; ++d) {
        const BigCount n = pow_big(27, d);
        CHECK(*bound_value(FormulaName::SharpUpper43, n, d, 1.0) < 1.0);
    }
}

TEST_CASE("verification harness examples") {
    const auto r1 = verify_bound(FormulaName::SharpUpper43, 2, 1.0, plateau_grid(FormulaName::SharpUpper43, 2, 1.0, 27, 10000));
    CHECK(r1.pass());
    CHECK(r1.points_checked > 1000);
    const auto r2 = verify_bound(FormulaName::PreUpper46, 5, 1.0, plateau_grid(FormulaName::PreUpper46, 5, 1.0, 1, 32));
    CHECK(r2.pass());
    CHECK(r2.points_checked > 10);
    std::vector<BigCount> near;
    for (std::uint64_t n = 7860; n < 7900; ++n) near.emplace_back(n);
    const auto r3 = verify_bound(FormulaName::SharpLower43, 2, 1.0, near);
    CHECK(r3.pass());
    CHECK(r3.points_skipped == 3);  // 7860..7862
    CHECK_THROWS_AS(verify_bound(FormulaName::AsymptoticConstant, 2, 1.0, near), InvalidArgument);
}

TEST_CASE("dense grids for bounds valid from small n") {
    const auto rep = verify_bound(FormulaName::PreLower47, 2, 1.0, dense_grid(FormulaName::PreLower47, 2, 1.0, 1, 16));
    CHECK(rep.pass());
    CHECK(rep.points_checked == 15);
    const auto rep2 = verify_bound(FormulaName::PSquaredBound, 2, 1.5, dense_grid(FormulaName::PSquaredBound, 2, 1.5, 1, 3000));
    CHECK(rep2.pass());
    CHECK(rep2.points_checked == 3000);
    CHECK(rep2.min_slack >= 0.0);
    CHECK(rep2.max_slack >= rep2.min_slack);
}

TEST_CASE("plateau grids cover clipped ranges") {
    const auto g = plateau_grid(FormulaName::PreUpper46, 2, 1.0, 1, 10);
    // d = 2: valid n <= 16; C(r,2) for r = 1..4 is 1, 5, 9, 17 so the r = 4 plateau is clipped at 16
    std::vector<BigCount> want{1, 2, 5, 6, 9, 10, 16};
    CHECK(g == want);
    const auto gl = plateau_grid(FormulaName::SharpLower43, 2, 1.0, 1, 1000);
    REQUIRE_FALSE(gl.empty());
    CHECK(gl.front() == 7863);
}

TEST_CASE("limit ratio trace") {
    const auto t1 = limit_ratio_trace(1, 1.0, {2, 10, 1000});
    CHECK(t1[0].ratio == doctest::Approx(1.5));
    CHECK(t1[2].ratio == doctest::Approx(1999.0 / 1000.0));
    const auto t2 = limit_ratio_trace(2, 1.0, {10000, 1000000});
    CHECK(t2[0].ratio > 2.0);
    CHECK(t2[0].ratio < 4.0);
    CHECK(t2[1].ratio > t2[0].ratio);
    CHECK(t2[1].ratio < 4.0);
    CHECK_THROWS_AS(limit_ratio_trace(2, 1.0, {1}), InvalidArgument);
}

TEST_CASE("crossover between the p = 2 and tensor-trick bounds") {
    const double c0 = tensor_crossover_c0();
    CHECK(c0 > 5.35);
    CHECK(c0 < 5.36);
    CHECK(c0 - 2 * std::log(c0) == doctest::Approx(2.0));
    const double cross = p2_vs_tensor_crossover(3, 8.0);
    CHECK(cross >= c0);
    for (double c = 1.0; c <= c0; c += 0.01) {
        const BigCount n(static_cast<std::uint64_t>(std::exp(3 * c)));
        if (n < 2) continue;
        const double p2 = std::exp(formula(FormulaName::PSquaredBound).log_value(n, 3, 1.0));
        const double tt = std::exp(formula(FormulaName::TensorTrick45).log_value(n, 3, 1.0));
        CHECK(p2 <= tt);
    }
}

TEST_CASE("experimental narrow lower bound") {
    // the printed range n > 48^{d/2} is too early: exact values fall below the formula there
    std::vector<BigCount> early{BigCount(49), BigCount(50)};
    const auto rep = verify_bound(FormulaName::SharpLowerNarrow, 2, 1.0, early);
    CHECK_FALSE(rep.pass());
    CHECK(rep.violations.size() == 2);
    CHECK(rep.min_slack < 0.0);
    // from C(r1,d) <= 3^d r1^2 = 144^d on, where its derivation applies, it holds
    auto late = plateau_grid(FormulaName::SharpLowerNarrow, 2, 1.0, 1, 10000);
    std::erase_if(late, [](const BigCount& n) { return n < 144 * 144; });
    REQUIRE(late.size() > 1000);
    CHECK(verify_bound(FormulaName::SharpLowerNarrow, 2, 1.0, late).pass());
    CHECK(verify_bound(FormulaName::SharpLowerNarrow, 1, 1.0, plateau_grid(FormulaName::SharpLowerNarrow, 1, 1.0, 1, 5000)).pass());
}
