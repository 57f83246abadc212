#pragma once

// Depth-first walk over the signed points of a hyperbolic cross.

#include <cstdint>
#include <vector>

namespace crossnum::detail {

/// Visits every k with prod_{j >= first}(1+|k_j|) <= budget, for coordinates
/// first..d-1, with coordinates < first already fixed in `k`. `prod` is the
/// product accumulated so far. Order: |k_j| ascending, +a before -a.
template <class Visit>
void walk_cross(std::vector<std::int64_t>& k, int first, std::uint64_t budget, std::uint64_t prod,
                Visit& visit) {
    const int d = static_cast<int>(k.size());
    if (first == d) {
        visit(k, prod);
        return;
    }
    for (std::uint64_t u = 1; u <= budget; ++u) {
        const auto a = static_cast<std::int64_t>(u - 1);
        k[first] = a;
        walk_cross(k, first + 1, budget / u, prod * u, visit);
        if (a != 0) {
            k[first] = -a;
            walk_cross(k, first + 1, budget / u, prod * u, visit);
        }
    }
    k[first] = 0;
}

/// Walk restricted to a fixed first-coordinate magnitude u1 = 1+|k_1|.
template <class Visit>
void walk_cross_slice(std::uint64_t R, int d, std::uint64_t u1, Visit& visit) {
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
    const auto a = static_cast<std::int64_t>(u1 - 1);
    k[0] = a;
    walk_cross(k, 1, R / u1, u1, visit);
    if (a != 0) {
        k[0] = -a;
        walk_cross(k, 1, R / u1, u1, visit);
    }
}

} // namespace crossnum::detail
