#include "crossnum/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crossnum/errors.hpp"
#include "cross_walk.hpp"

namespace crossnum::kernels {

namespace {

void check_args(std::uint64_t R, int d) {
    if (R < 1) throw InvalidArgument("kernel radius must be >= 1");
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");
}

template <class T>
std::vector<T> concat(std::vector<std::vector<T>>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<T> out;
    out.reserve(total);
    for (auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
        std::vector<T>().swap(p);
    }
    return out;
}

} // namespace

namespace serial {

std::uint64_t count_cross(std::uint64_t R, int d) {
    check_args(R, d);
    std::uint64_t n = 0;
    auto visit = [&](const std::vector<std::int64_t>&, std::uint64_t) { ++n; };
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
    detail::walk_cross(k, 0, R, 1, visit);
    return n;
}

std::vector<std::uint64_t> cross_products(std::uint64_t R, int d) {
    check_args(R, d);
    std::vector<std::uint64_t> out;
    auto visit = [&](const std::vector<std::int64_t>&, std::uint64_t p) { out.push_back(p); };
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
    detail::walk_cross(k, 0, R, 1, visit);
    return out;
}

std::vector<double> inverse_weights(const WeightKind& kind, std::uint64_t R, int d) {
    check_args(R, d);
    std::vector<double> out;
    auto visit = [&](const std::vector<std::int64_t>& k, std::uint64_t) {
        out.push_back(inverse_weight(kind, k));
    };
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
    detail::walk_cross(k, 0, R, 1, visit);
    return out;
}

double sum_squares(const CoefficientFn& c, int d, std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo || hi < 1) return 0.0;
    check_args(hi, d);
    double sum = 0.0;
    IndexVector idx(d);
    auto visit = [&](const std::vector<std::int64_t>& k, std::uint64_t p) {
        if (p < lo) return;
        for (int j = 0; j < d; ++j) idx[j] = k[j];
        sum += std::norm(c(idx));
    };
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
    detail::walk_cross(k, 0, hi, 1, visit);
    return sum;
}

} // namespace serial

namespace omp {

// Each u1 slice visits exactly the points serial::walk_cross visits under
// k_1 = +-(u1-1), in the same order.

std::uint64_t count_cross(std::uint64_t R, int d) {
    check_args(R, d);
    const auto n = static_cast<std::int64_t>(R);
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (std::int64_t u = 1; u <= n; ++u) {
        std::uint64_t local = 0;
        auto visit = [&](const std::vector<std::int64_t>&, std::uint64_t) { ++local; };
        detail::walk_cross_slice(R, d, static_cast<std::uint64_t>(u), visit);
        total += local;
    }
    return total;
}

std::vector<std::uint64_t> cross_products(std::uint64_t R, int d) {
    check_args(R, d);
    const auto n = static_cast<std::int64_t>(R);
    std::vector<std::vector<std::uint64_t>> parts(R);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t u = 1; u <= n; ++u) {
        auto& part = parts[static_cast<std::size_t>(u - 1)];
        auto visit = [&](const std::vector<std::int64_t>&, std::uint64_t p) { part.push_back(p); };
        detail::walk_cross_slice(R, d, static_cast<std::uint64_t>(u), visit);
    }
    return concat(parts);
}

std::vector<double> inverse_weights(const WeightKind& kind, std::uint64_t R, int d) {
    check_args(R, d);
    const auto n = static_cast<std::int64_t>(R);
    std::vector<std::vector<double>> parts(R);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t u = 1; u <= n; ++u) {
        auto& part = parts[static_cast<std::size_t>(u - 1)];
        auto visit = [&](const std::vector<std::int64_t>& k, std::uint64_t) {
            part.push_back(inverse_weight(kind, k));
        };
        detail::walk_cross_slice(R, d, static_cast<std::uint64_t>(u), visit);
    }
    return concat(parts);
}

double sum_squares(const CoefficientFn& c, int d, std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo || hi < 1) return 0.0;
    check_args(hi, d);
    const auto n = static_cast<std::int64_t>(hi);
    std::vector<double> partial(hi, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t u = 1; u <= n; ++u) {
        double local = 0.0;
        IndexVector idx(d);
        auto visit = [&](const std::vector<std::int64_t>& k, std::uint64_t p) {
            if (p < lo) return;
            for (int j = 0; j < d; ++j) idx[j] = k[j];
            local += std::norm(c(idx));
        };
        detail::walk_cross_slice(hi, d, static_cast<std::uint64_t>(u), visit);
        partial[static_cast<std::size_t>(u - 1)] = local;
    }
    double sum = 0.0;
    for (double v : partial) sum += v;
    return sum;
}

} // namespace omp

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace crossnum::kernels
