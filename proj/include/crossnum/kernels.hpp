#pragma once

// Data-parallel kernels over hyperbolic crosses.
//
// Every kernel exists twice: a plain serial reference in `serial::` and an
// OpenMP version in `omp::`. The OpenMP versions split the cross on the
// first coordinate u_1 = 1+|k_1| in [1, R] and combine per-u_1 partial
// results in u_1 order, so their output does not depend on the thread count.
// Tests compare the two; the benchmark target times them.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "crossnum/combinatorics.hpp"
#include "crossnum/weights.hpp"

namespace crossnum::kernels {

using CoefficientFn = std::function<std::complex<double>(const IndexVector&)>;

namespace serial {

/// Number of signed k with prod(1+|k_j|) <= R, by enumeration.
std::uint64_t count_cross(std::uint64_t R, int d);

/// prod(1+|k_j|) for every k in N(R,d), in walk order.
std::vector<std::uint64_t> cross_products(std::uint64_t R, int d);

/// 1/weight(kind, k) for every k in N(R,d), in walk order.
std::vector<double> inverse_weights(const WeightKind& kind, std::uint64_t R, int d);

/// sum |c_k|^2 over k with lo <= prod(1+|k_j|) <= hi.
double sum_squares(const CoefficientFn& c, int d, std::uint64_t lo, std::uint64_t hi);

} // namespace serial

namespace omp {

std::uint64_t count_cross(std::uint64_t R, int d);
std::vector<std::uint64_t> cross_products(std::uint64_t R, int d);
std::vector<double> inverse_weights(const WeightKind& kind, std::uint64_t R, int d);
double sum_squares(const CoefficientFn& c, int d, std::uint64_t lo, std::uint64_t hi);

} // namespace omp

/// Threads the OpenMP runtime will use (1 when built without OpenMP).
int max_threads();

} // namespace crossnum::kernels
