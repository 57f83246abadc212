#pragma once

#include <optional>
#include <vector>

#include "crossnum/bigcount.hpp"
#include "crossnum/weights.hpp"

namespace crossnum {

struct TractabilityQuery {
    double eps = 0.5;
    int d = 1;
    WeightKind kind = WeightKind::sharp(1.0);

    TractabilityQuery(double epsilon, int dim, WeightKind k);  // throws on eps outside (0,1)
};

/// Smallest r with r^{-s} <= eps; ties within 1e-12 relative count as reached.
std::uint64_t first_crossing_base(double eps, double s);

/// Exact n(eps,d) = C(r*-1,d) + 1 for the # norm.
BigCount info_complexity_sharp(const TractabilityQuery& q);

struct ComplexityEnclosure {
    BigCount lower;
    BigCount upper;
    std::optional<BigCount> exact;
    /// Canonical kind after applying equal-norm identities (e.g. star(1) -> plus(1)).
    WeightKind canonical = WeightKind::sharp(1.0);
};

/// Two-sided enclosure of n(eps,d) for Plus/Star/IntegerM via embeddings into
/// the # scale. With `exact` and d <= 3 the exact value is added by bisection
/// on the rearranged spectrum.
ComplexityEnclosure info_complexity_bounds(const TractabilityQuery& q, bool exact = false);

/// Exact n(eps,d) for any kind, by bisection on a certified rearranged spectrum.
BigCount info_complexity_enumerated(const TractabilityQuery& q);

struct QptPoint {
    double eps = 0.0;
    int d = 0;
    BigCount n;
    double log_n = 0.0;
    double log_rhs = 0.0;
    /// Smallest t that would satisfy this point with the given C_t.
    double t_needed = 0.0;
};

struct QptCertificate {
    double s = 1.0;
    double t = 0.0;
    double C_t = 0.0;
    std::vector<int> d_grid;
    std::vector<double> eps_grid;
    std::vector<QptPoint> points;
    std::vector<QptPoint> violations;
    bool pass = true;
    QptPoint worst_point;
    double slack = 0.0;  // min over points of log_rhs - log_n
};

struct QptConstants {
    double t;
    double C_t;
};

/// Uniform constants following the counting argument:
/// ln n <= ln 2 + 2 + max(2 + log2 d, 4) ln(1/eps)/s  <=  ln(2e^2) + (4/s) ln(1/eps)(1 + ln d).
QptConstants qpt_proof_constants(double s);

/// Checks n(eps,d) <= C_t exp(t ln(1/eps)(1 + ln d)) on the grid, in log space.
QptCertificate qpt_certify(double s, const std::vector<int>& d_grid,
                           const std::vector<double>& eps_grid, double t, double C_t);

} // namespace crossnum
