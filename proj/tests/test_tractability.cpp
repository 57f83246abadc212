#include <doctest.h>

#include <cmath>

#include "crossnum/combinatorics.hpp"
#include "crossnum/errors.hpp"
#include "crossnum/spectra.hpp"
#include "crossnum/tractability.hpp"

using namespace crossnum;

namespace {

BigCount n_of(double eps, int d, double s) {
    return info_complexity_sharp(TractabilityQuery(eps, d, WeightKind::sharp(s)));
}

} // namespace

TEST_CASE("sharp information complexity examples") {
    CHECK(n_of(0.5, 2, 1.0) == 2);
    CHECK(n_of(1.0 / 3.0, 2, 1.0) == 6);
    for (int d = 1; d <= 5; ++d)
        for (double s : {0.5, 1.0, 3.0}) CHECK(n_of(0.999999, d, s) == 2);
    CHECK(first_crossing_base(0.25, 2.0) == 2);
    CHECK(first_crossing_base(0.25, 1.0) == 4);
    CHECK(first_crossing_base(0.26, 1.0) == 4);
    CHECK(first_crossing_base(0.24, 1.0) == 5);
    CHECK_THROWS_AS(TractabilityQuery(1.0, 2, WeightKind::sharp(1.0)), InvalidArgument);
    CHECK_THROWS_AS(TractabilityQuery(0.0, 2, WeightKind::sharp(1.0)), InvalidArgument);
    CHECK_THROWS_AS(info_complexity_sharp(TractabilityQuery(0.5, 2, WeightKind::plus(1.0))), InvalidArgument);
}

TEST_CASE("definition consistency against exact approximation numbers") {
    for (int d = 1; d <= 4; ++d)
        for (double s : {0.5, 1.0, 2.0})
            for (double eps : {0.9, 0.5, 0.3, 0.1, 0.037, 0.01}) {
                const BigCount n = n_of(eps, d, s);
                CHECK(exact_an_sharp(n, d, s).value() <= eps * (1 + 1e-12));
                if (n > 1) CHECK(exact_an_sharp(n - 1, d, s).value() > eps);
            }
}

TEST_CASE("monotone in eps and in d") {
    for (double s : {0.7, 1.0}) {
        BigCount prev = 1;
        for (double eps = 0.95; eps > 0.01; eps *= 0.8) {
            const BigCount n = n_of(eps, 3, s);
            CHECK(n >= prev);
            prev = n;
        }
        for (double eps : {0.5, 0.2, 0.05}) {
            BigCount prev_d = 1;
            for (int d = 1; d <= 8; ++d) {
                const BigCount n = n_of(eps, d, s);
                CHECK(n >= prev_d);
                prev_d = n;
            }
        }
    }
}

TEST_CASE("enclosures contain the enumerated value") {
    const WeightKind kinds[] = {WeightKind::plus(1.0),  WeightKind::plus(2.0),  WeightKind::plus(0.5),
                                WeightKind::star(2.0),  WeightKind::star(0.75), WeightKind::star(0.3),
                                WeightKind::integer_m(2), WeightKind::integer_m(3)};
    for (const auto& kind : kinds)
        for (int d = 1; d <= 3; ++d)
            for (double eps : {0.5, 0.2, 0.1}) {
                CAPTURE(kind.describe());
                CAPTURE(d);
                CAPTURE(eps);
                const TractabilityQuery q(eps, d, kind);
                const auto box = info_complexity_bounds(q, true);
                REQUIRE(box.exact.has_value());
                CHECK(box.lower <= *box.exact);
                CHECK(*box.exact <= box.upper);
                // oracle: scan the spectrum directly
                const auto table = rearranged_spectrum(kind, d, static_cast<std::uint64_t>(box.upper));
                std::uint64_t first = 0;
                for (std::size_t i = 1; i <= table.size(); ++i)
                    if (table[i] <= eps * (1 + 1e-12)) {
                        first = i;
                        break;
                    }
                CHECK(BigCount(first) == *box.exact);
            }
}

TEST_CASE("equal norms give equal complexities") {
    for (int d = 1; d <= 3; ++d)
        for (double eps : {0.5, 0.25, 0.1}) {
            const auto p = info_complexity_bounds(TractabilityQuery(eps, d, WeightKind::plus(1.0)), true);
            const auto st = info_complexity_bounds(TractabilityQuery(eps, d, WeightKind::star(1.0)), true);
            const auto m = info_complexity_bounds(TractabilityQuery(eps, d, WeightKind::integer_m(1)), true);
            CHECK(st.canonical == WeightKind::plus(1.0));
            CHECK(m.canonical == WeightKind::plus(1.0));
            CHECK(p.lower == st.lower);
            CHECK(p.upper == st.upper);
            CHECK(*p.exact == *st.exact);
            CHECK(*m.exact == *st.exact);
            CHECK(m.lower == st.lower);
        }
    const auto half = info_complexity_bounds(TractabilityQuery(0.2, 4, WeightKind::star(0.5)));
    REQUIRE(half.exact.has_value());
    CHECK(*half.exact == n_of(0.2, 4, 0.5));
}

TEST_CASE("quasi-polynomial tractability certificates") {
    std::vector<int> dg;
    for (int d = 2; d <= 10; ++d) dg.push_back(d);
    std::vector<double> eg;
    for (int k = 1; k <= 10; ++k) eg.push_back(std::ldexp(1.0, -k));
    for (double s : {1.0, 2.0, 0.5}) {
        const auto c = qpt_proof_constants(s);
        CHECK(c.t == doctest::Approx(4.0 / s));
        const auto cert = qpt_certify(s, dg, eg, c.t, c.C_t);
        CHECK(cert.pass);
        CHECK(cert.violations.empty());
        CHECK(cert.points.size() == dg.size() * eg.size());
        CHECK(cert.slack >= 0.0);
        for (const auto& p : cert.points) CHECK(p.t_needed <= c.t);
    }
    const auto bad = qpt_certify(1.0, dg, eg, 0.01, 1.0);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.violations.empty());
    CHECK(bad.slack < 0.0);
    CHECK(bad.worst_point.log_n > bad.worst_point.log_rhs);
    CHECK_THROWS_AS(qpt_certify(1.0, {}, eg, 1.0, 1.0), InvalidArgument);
}

TEST_CASE("weak tractability ratio trends down along eps = 1/d") {
    double prev = 1e300;
    for (int d = 16; d <= 1024; d *= 2) {
        const double eps = 1.0 / d;
        const double ratio = log_big(n_of(eps, d, 1.0)) / (1.0 / eps + d);
        CHECK(ratio < prev);
        prev = ratio;
    }
}
