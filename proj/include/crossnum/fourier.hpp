#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "crossnum/bigcount.hpp"
#include "crossnum/combinatorics.hpp"
#include "crossnum/spectra.hpp"

namespace crossnum {

/// Fourier coefficient model k -> c_k with a decay certificate
/// |c_k| <= M * prod(1+|k_j|)^{-t}.
struct CoefficientModel {
    std::function<std::complex<double>(const IndexVector&)> coefficient;
    double decay_constant = 1.0;  // M
    double decay_exponent = 1.0;  // t

    /// c_k = M * prod(1+|k_j|)^{-t}.
    static CoefficientModel sharp_power(double t, double M = 1.0);
    /// Single mode c_{k*} = value, all others zero.
    static CoefficientModel single_mode(const IndexVector& mode, std::complex<double> value);
    /// sharp_power(t) rescaled so that its #-norm of smoothness s equals 1 (needs t > s + 1/2).
    static CoefficientModel unit_sharp_ball(double s, double t, int d);
};

/// Rank-(n-1) optimal operator: masks coefficients to N(r-1,d).
struct TruncationOperator {
    std::vector<IndexVector> indices;  // N(r-1,d) in stream order
    BigCount rank;
    int d = 1;
    double s = 1.0;
    std::uint64_t r = 1;  // worst-case error is r^{-s}
};

TruncationOperator optimal_truncation(const BigCount& n, int d, double s);

struct Witness {
    IndexVector mode;
    ApproxNumber error{1, 1.0};
};

/// Single Fourier mode with prod(1+|k_j|) = r outside the index set; its
/// normalized truncation error equals a_n.
Witness worst_case_witness(const TruncationOperator& op);

struct TruncationError {
    double error_estimate = 0.0;   // sqrt(sum over r <= prod <= tail_radius)
    double certified_bound = 0.0;  // adds an analytic tail beyond tail_radius
    double tail_bound_sq = 0.0;
};

TruncationError truncation_error(const CoefficientModel& model, const TruncationOperator& op,
                                 std::uint64_t tail_radius, bool parallel = true);

/// Analytic bound on sum_{prod > R} prod^{-2t} over Z^d (layer-cake over dyadic shells).
double tail_sum_bound(std::uint64_t R, int d, double t);

} // namespace crossnum
