#include "crossnum/fourier.hpp"

#include <cmath>

#include "crossnum/errors.hpp"
#include "crossnum/kernels.hpp"

namespace crossnum {

namespace {

double product_of(const IndexVector& k) { return static_cast<double>(k.cross_product()); }

} // namespace

CoefficientModel CoefficientModel::sharp_power(double t, double M) {
    if (!(t > 0.0)) throw InvalidArgument("decay exponent must be positive");
    CoefficientModel m;
    m.coefficient = [t, M](const IndexVector& k) {
        return std::complex<double>(M * std::exp(-t * std::log(product_of(k))), 0.0);
    };
    m.decay_constant = M;
    m.decay_exponent = t;
    return m;
}

CoefficientModel CoefficientModel::single_mode(const IndexVector& mode, std::complex<double> value) {
    CoefficientModel m;
    m.coefficient = [mode, value](const IndexVector& k) { return k == mode ? value : std::complex<double>(0.0, 0.0); };
    // only one nonzero coefficient, so any t works with M = |c| prod(1+|k_j|)^t
    m.decay_exponent = 1.0;
    m.decay_constant = std::abs(value) * product_of(mode);
    return m;
}

CoefficientModel CoefficientModel::unit_sharp_ball(double s, double t, int d) {
    if (!(s > 0.0)) throw InvalidArgument("smoothness must be positive");
    if (!(t > s + 0.5)) throw InvalidArgument("unit ball model needs t > s + 1/2");
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");
    // sum_k prod(1+|k_j|)^{2s-2t} = (2 zeta(2t-2s) - 1)^d
    const double one_dim = 2.0 * std::riemann_zeta(2.0 * (t - s)) - 1.0;
    const double M = std::exp(-0.5 * d * std::log(one_dim));
    return sharp_power(t, M);
}

TruncationOperator optimal_truncation(const BigCount& n, int d, double s) {
    const auto a = exact_an_sharp(n, d, s);
    TruncationOperator op;
    op.d = d;
    op.s = s;
    op.r = a.base();
    if (op.r > 1) op.indices = collect_cross({op.r - 1, d});
    op.rank = BigCount(static_cast<std::uint64_t>(op.indices.size()));
    return op;
}

Witness worst_case_witness(const TruncationOperator& op) {
    IndexVector k(op.d);
    k[0] = static_cast<std::int64_t>(op.r - 1);
    return {k, ApproxNumber(op.r, op.s)};
}

double tail_sum_bound(std::uint64_t R, int d, double t) {
    if (!(t > 0.5)) throw InvalidArgument("tail bound needs decay exponent t > 1/2");
    if (R < 1 || d < 1) throw InvalidArgument("tail bound needs R >= 1, d >= 1");
    // Points with prod in (X, 2X] number at most U(2X) = 1 + sum_l 2^l binom(d,l) f_l(2X).
    auto U = [d](double X) {
        double u = 1.0, binom = 1.0;
        for (int l = 1; l <= d; ++l) {
            binom = binom * (d - l + 1) / l;
            u += std::exp2(l) * binom * volume_upper_f(X, l);
        }
        return u;
    };
    double total = 0.0;
    double X = static_cast<double>(R);
    for (int j = 0; j < 1000; ++j) {
        const double term = U(2.0 * X) * std::exp(-2.0 * t * std::log(X));
        total += term;
        // U(4X)/U(2X) <= 2 (ln 4X / ln 2X)^{d-1}, which decreases in X
        const double rho = std::exp2(1.0 - 2.0 * t) * std::pow(std::log(4.0 * X) / std::log(2.0 * X), d - 1);
        if (rho < 1.0) return total + term * rho / (1.0 - rho);
        X *= 2.0;
    }
    throw ResourceLimit("tail bound did not reach its geometric regime", X, max_enumeration());
}

TruncationError truncation_error(const CoefficientModel& model, const TruncationOperator& op, std::uint64_t tail_radius,
                                 bool parallel) {
    if (!model.coefficient) throw InvalidArgument("coefficient model has no evaluator");
    if (!(model.decay_exponent > 0.5)) throw InvalidArgument("decay exponent must exceed 1/2");
    if (tail_radius < op.r) throw InvalidArgument("tail_radius must be >= the operator's r");
    check_enumeration(cross_size_upper_estimate(static_cast<double>(tail_radius), op.d), "truncation_error");
    const double sum = parallel ? kernels::omp::sum_squares(model.coefficient, op.d, op.r, tail_radius)
                                : kernels::serial::sum_squares(model.coefficient, op.d, op.r, tail_radius);
    TruncationError err;
    err.error_estimate = std::sqrt(sum);
    err.tail_bound_sq = model.decay_constant * model.decay_constant *
                        tail_sum_bound(tail_radius, op.d, model.decay_exponent);
    err.certified_bound = std::sqrt(sum + err.tail_bound_sq);
    return err;
}

} // namespace crossnum
