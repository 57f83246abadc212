#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crossnum/bigcount.hpp"

namespace crossnum {

/// Radius/dimension pair describing the hyperbolic cross
/// N(r,d) = { k in Z^d : prod_j (1+|k_j|) <= r }.
struct CrossSpec {
    std::uint64_t r = 1;
    int d = 1;

    CrossSpec() = default;
    CrossSpec(std::uint64_t radius, int dim);  // throws InvalidArgument unless r >= 1, d >= 1
};

/// A frequency multi-index k in Z^d.
class IndexVector {
public:
    IndexVector() = default;
    explicit IndexVector(int dim) : coords_(static_cast<std::size_t>(dim), 0) {}
    IndexVector(std::initializer_list<std::int64_t> init) : coords_(init) {}
    explicit IndexVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

    int dim() const { return static_cast<int>(coords_.size()); }
    std::int64_t operator[](std::size_t j) const { return coords_[j]; }
    std::int64_t& operator[](std::size_t j) { return coords_[j]; }
    std::span<const std::int64_t> coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    /// prod_j (1+|k_j|); saturates at UINT64_MAX.
    std::uint64_t cross_product() const;

    auto operator<=>(const IndexVector&) const = default;
    bool operator==(const IndexVector&) const = default;

private:
    std::vector<std::int64_t> coords_;
};

// --- counting --------------------------------------------------------------

/// A(r,l) = #{ k in N^l : prod (1+k_j) <= r }, N = {1,2,...}.
BigCount count_positive(std::uint64_t r, int l);

/// C(r,d) through the identity C = 1 + sum_l 2^l binom(d,l) A(r,l).
BigCount count_cross(const CrossSpec& spec);

/// Independent oracle: depth-first enumeration of every signed k.
/// Guarded by the enumeration budget.
BigCount count_cross_bruteforce(const CrossSpec& spec);

/// Analytic upper estimate of C(r,d) from the volume bounds; used by guards.
double cross_size_upper_estimate(double r, int d);

// --- enumeration -----------------------------------------------------------

/// Lazy, single-consumer stream over N(r,d) ordered lexicographically by
/// (product, k). Points are produced one product level at a time.
class CrossStream {
public:
    explicit CrossStream(const CrossSpec& spec);

    /// Next index, or nullopt when the cross is exhausted.
    std::optional<IndexVector> next();

    /// Product prod(1+|k_j|) of the most recently returned index.
    std::uint64_t current_product() const { return level_; }

private:
    void fill_level();

    CrossSpec spec_;
    std::uint64_t level_ = 0;
    std::vector<IndexVector> buffer_;
    std::size_t pos_ = 0;
};

CrossStream enumerate_cross(const CrossSpec& spec);

/// Materialized N(r,d) in stream order. Guarded.
std::vector<IndexVector> collect_cross(const CrossSpec& spec);

/// |H(m,d)| for the dyadic cross, computed exactly by a small DP.
BigCount dyadic_cross_size(int m, int d);

/// H(m,d) = { k : exists u in N0^d, |k_j| <= 2^{u_j}, sum u_j = m },
/// deduplicated, sorted lexicographically. Guarded.
std::vector<IndexVector> enumerate_dyadic_cross(int m, int d);

// --- volumes ---------------------------------------------------------------

/// vol_l of { x in R^l : x_j >= 1, prod x_j <= r }, closed form.
double volume_exact(double r, int l);

/// Coefficient table of the closed form: v_l(r) = r * sum_j c_j (ln r)^j + b.
/// Returned as (numerator, denominator) pairs, derived symbolically.
struct VolumeClosedForm {
    std::vector<std::pair<BigCount, BigCount>> log_coeffs;  // c_0 .. c_{l-1}
    int constant = 0;                                       // b = (-1)^l
};
VolumeClosedForm volume_closed_form(int l);

struct VolumeBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// f_l(r) - f_{l-1}(r) <= v_l(r) <= f_l(r), f_l(r) = r (ln r)^{l-1}/(l-1)!.
/// For l = 1 the lower bound is 0.
VolumeBounds volume_bounds(double r, int l);

/// f_l(r) above.
double volume_upper_f(double r, int l);

// --- generalized weights ---------------------------------------------------

/// Symmetric one-dimensional weight sequence l -> b_l with b_0 = 1,
/// 0 < b_l <= 1, b_l -> 0.
///
/// `domination` is a constant C >= 1 with b_l <= C / (1+|l|) for all l.
/// When it is not supplied, count_generalized estimates it by doubling the
/// probed range until the running supremum stabilizes.
struct GeneralizedWeightSeq {
    std::function<double(std::int64_t)> b;
    std::optional<double> domination;

    static GeneralizedWeightSeq harmonic();          // b_l = 1/(1+|l|)
    static GeneralizedWeightSeq inverse_sqrt_plus(); // b_l = (1+l^2)^{-1/2}
};

struct GeneralizedCount {
    BigCount count;
    std::uint64_t enclosing_radius = 0;
    bool domination_estimated = false;
};

/// B_d(eps) = #{ k in Z^d : prod_j b_{k_j} >= eps }. Ties are included
/// (relative tolerance 1e-12 on the product).
GeneralizedCount count_generalized(const GeneralizedWeightSeq& b, double eps, int d);

} // namespace crossnum
