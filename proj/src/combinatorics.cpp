#include "crossnum/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "crossnum/errors.hpp"
#include "crossnum/kernels.hpp"
#include "cross_walk.hpp"

namespace crossnum {

CrossSpec::CrossSpec(std::uint64_t radius, int dim) : r(radius), d(dim) {
    if (radius < 1) throw InvalidArgument("cross radius r must be >= 1");
    if (dim < 1) throw InvalidArgument("dimension d must be >= 1");
}

std::uint64_t IndexVector::cross_product() const {
    std::uint64_t p = 1;
    for (auto kj : coords_) {
        const std::uint64_t u = 1 + static_cast<std::uint64_t>(kj < 0 ? -kj : kj);
        if (p > std::numeric_limits<std::uint64_t>::max() / u) return std::numeric_limits<std::uint64_t>::max();
        p *= u;
    }
    return p;
}

// ---------------------------------------------------------------------------
// A(r,l) by recursion over the first coordinate:
//   A(r,l) = sum_{u=2}^{floor(r/2^{l-1})} A(floor(r/u), l-1),   A(r,1) = r-1.
// Consecutive u sharing the same floor(r/u) are summed as one block, so each
// level touches O(sqrt r) distinct arguments. The memo is per call.

namespace {

template <class Count>
class PositiveCounter {
public:
    explicit PositiveCounter(int max_level) : memo_(static_cast<std::size_t>(max_level) + 1) {}

    Count operator()(std::uint64_t r, int l) {
        if (l >= 64 || (r >> l) == 0) return Count(0);  // r < 2^l
        if (l == 1) return Count(r - 1);
        auto& level = memo_[static_cast<std::size_t>(l)];
        if (auto it = level.find(r); it != level.end()) return it->second;

        const std::uint64_t u_max = r >> (l - 1);
        Count sum(0);
        for (std::uint64_t u = 2; u <= u_max;) {
            const std::uint64_t q = r / u;
            const std::uint64_t u_hi = std::min(r / q, u_max);
            sum += Count(u_hi - u + 1) * (*this)(q, l - 1);
            u = u_hi + 1;
        }
        level.emplace(r, sum);
        return sum;
    }

private:
    std::vector<std::unordered_map<std::uint64_t, Count>> memo_;
};

int floor_log2(std::uint64_t r) { return static_cast<int>(std::bit_width(r)) - 1; }

// A(r,l) <= v_l(r) <= r (ln r)^{l-1}/(l-1)! <= r^2, so 64-bit arithmetic is
// exact below r = 2^32.
constexpr std::uint64_t kNarrowLimit = std::uint64_t{1} << 32;

template <class Count>
BigCount cross_identity(std::uint64_t r, int d) {
    const int top = std::min(d, floor_log2(r));
    PositiveCounter<Count> A(top);
    BigCount total = 1;
    BigCount binom = 1;
    for (int l = 1; l <= top; ++l) {
        binom = binom * (d - l + 1) / l;
        const BigCount a = BigCount(A(r, l));
        if (a == 0) break;
        total += (BigCount(1) << l) * binom * a;
    }
    return total;
}

} // namespace

BigCount count_positive(std::uint64_t r, int l) {
    if (r < 1) throw InvalidArgument("count_positive: r must be >= 1");
    if (l < 1) throw InvalidArgument("count_positive: l must be >= 1");
    if (r < kNarrowLimit) {
        PositiveCounter<std::uint64_t> A(l);
        return BigCount(A(r, l));
    }
    PositiveCounter<BigCount> A(l);
    return A(r, l);
}

BigCount count_cross(const CrossSpec& spec) {
    const CrossSpec checked(spec.r, spec.d);
    if (checked.r < kNarrowLimit) return cross_identity<std::uint64_t>(checked.r, checked.d);
    return cross_identity<BigCount>(checked.r, checked.d);
}

double volume_upper_f(double r, int l) {
    if (l < 1) return 0.0;
    if (l == 1) return r;
    const double L = std::log(r);
    if (L <= 0.0) return 0.0;
    return std::exp(std::log(r) + (l - 1) * std::log(L) - std::lgamma(static_cast<double>(l)));
}

double cross_size_upper_estimate(double r, int d) {
    if (r < 2.0) return 1.0;
    const int top = std::min(d, static_cast<int>(std::floor(std::log2(r))));
    double total = 1.0;
    for (int l = 1; l <= top; ++l) {
        const double log_binom = std::lgamma(d + 1.0) - std::lgamma(l + 1.0) - std::lgamma(d - l + 1.0);
        total += std::exp(l * std::log(2.0) + log_binom) * volume_upper_f(r, l);
    }
    return total;
}

BigCount count_cross_bruteforce(const CrossSpec& spec) {
    const CrossSpec checked(spec.r, spec.d);
    check_enumeration(cross_size_upper_estimate(static_cast<double>(checked.r), checked.d),
                      "count_cross_bruteforce");
    return BigCount(kernels::omp::count_cross(checked.r, checked.d));
}

// ---------------------------------------------------------------------------
// Enumeration

CrossStream::CrossStream(const CrossSpec& spec) : spec_(spec.r, spec.d) {}

void CrossStream::fill_level() {
    buffer_.clear();
    pos_ = 0;
    const std::uint64_t p = level_;
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t f = 1; f * f <= p; ++f) {
        if (p % f == 0) {
            divisors.push_back(f);
            if (f != p / f) divisors.push_back(p / f);
        }
    }
    std::sort(divisors.begin(), divisors.end());

    const int d = spec_.d;
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
    auto emit_coord = [&](auto& self, int j, std::uint64_t rem) -> void {
        auto place = [&](std::uint64_t f, std::uint64_t next_rem) {
            const auto a = static_cast<std::int64_t>(f - 1);
            k[j] = a;
            self(self, j + 1, next_rem);
            if (a != 0) {
                k[j] = -a;
                self(self, j + 1, next_rem);
            }
        };
        if (j == d) {
            if (rem == 1) buffer_.emplace_back(k);
            return;
        }
        if (j == d - 1) {
            place(rem, 1);
            return;
        }
        for (auto f : divisors) {
            if (f > rem) break;
            if (rem % f == 0) place(f, rem / f);
        }
    };
    emit_coord(emit_coord, 0, p);
    std::sort(buffer_.begin(), buffer_.end());
}

std::optional<IndexVector> CrossStream::next() {
    while (pos_ >= buffer_.size()) {
        if (level_ >= spec_.r) return std::nullopt;
        ++level_;
        fill_level();
    }
    return buffer_[pos_++];
}

CrossStream enumerate_cross(const CrossSpec& spec) { return CrossStream(spec); }

std::vector<IndexVector> collect_cross(const CrossSpec& spec) {
    const BigCount total = count_cross(spec);
    check_enumeration(to_double(total), "collect_cross");
    std::vector<IndexVector> out;
    out.reserve(static_cast<std::size_t>(total));
    CrossStream stream(spec);
    while (auto k = stream.next()) out.push_back(std::move(*k));
    return out;
}

// ---------------------------------------------------------------------------
// Dyadic crosses. k lies in H(m,d) iff sum_j need(k_j) <= m, where need(v)
// is the least u with |v| <= 2^u; any leftover budget can be added to one u_j.

namespace {
int dyadic_need(std::int64_t v) {
    const std::uint64_t a = static_cast<std::uint64_t>(v < 0 ? -v : v);
    if (a <= 1) return 0;
    return static_cast<int>(std::bit_width(a - 1));
}
} // namespace

BigCount dyadic_cross_size(int m, int d) {
    if (m < 0) throw InvalidArgument("dyadic level m must be >= 0");
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");
    // per coordinate: need 0 -> 3 values, need q >= 1 -> 2^q values
    std::vector<BigCount> ways(static_cast<std::size_t>(m) + 1, 0);
    ways[0] = 1;
    for (int j = 0; j < d; ++j) {
        std::vector<BigCount> next(ways.size(), 0);
        for (int b = 0; b <= m; ++b) {
            if (ways[b] == 0) continue;
            for (int q = 0; b + q <= m; ++q) {
                const BigCount cnt = q == 0 ? BigCount(3) : (BigCount(1) << q);
                next[b + q] += ways[b] * cnt;
            }
        }
        ways.swap(next);
    }
    BigCount total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

std::vector<IndexVector> enumerate_dyadic_cross(int m, int d) {
    const BigCount size = dyadic_cross_size(m, d);
    check_enumeration(to_double(size), "enumerate_dyadic_cross");
    std::vector<IndexVector> out;
    out.reserve(static_cast<std::size_t>(size));
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto& self, int j, int budget) -> void {
        if (j == d) {
            out.emplace_back(k);
            return;
        }
        const std::int64_t lim = std::int64_t{1} << budget;
        for (std::int64_t v = -lim; v <= lim; ++v) {
            const int need = dyadic_need(v);
            if (need > budget) continue;
            k[j] = v;
            self(self, j + 1, budget - need);
        }
    };
    rec(rec, 0, m);
    return out;
}

// ---------------------------------------------------------------------------
// Volumes. Iterating v_{l+1}(r) = r * int_1^r v_l(s) ds/s^2 from v_1 = r - 1
// with v_l(r) = r Q_l(ln r) + b_l gives Q_{l+1}(L) = int_0^L Q_l + b_l and
// b_{l+1} = -b_l. Coefficients are carried as exact rationals.

VolumeClosedForm volume_closed_form(int l) {
    using boost::multiprecision::cpp_rational;
    if (l < 1) throw InvalidArgument("volume dimension must be >= 1");
    std::vector<cpp_rational> q{cpp_rational(1)};
    int b = -1;
    for (int level = 1; level < l; ++level) {
        std::vector<cpp_rational> next(q.size() + 1);
        next[0] = cpp_rational(b);
        for (std::size_t j = 0; j < q.size(); ++j) next[j + 1] = q[j] / cpp_rational(static_cast<long>(j + 1));
        q.swap(next);
        b = -b;
    }
    VolumeClosedForm form;
    form.constant = b;
    for (const auto& c : q) form.log_coeffs.emplace_back(numerator(c), denominator(c));
    return form;
}

namespace {
const std::vector<double>& volume_coeffs(int l) {
    static thread_local std::unordered_map<int, std::vector<double>> cache;
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    const auto form = volume_closed_form(l);
    std::vector<double> c;
    for (const auto& [num, den] : form.log_coeffs) {
        boost::multiprecision::cpp_rational q(num, den);
        c.push_back(q.convert_to<double>());
    }
    return cache.emplace(l, std::move(c)).first->second;
}
} // namespace

double volume_exact(double r, int l) {
    if (l < 1) throw InvalidArgument("volume dimension must be >= 1");
    if (!(r >= 1.0)) throw InvalidArgument("volume_exact requires r >= 1");
    if (r == 1.0) return 0.0;
    const double L = std::log(r);
    if (L < 1.0) {
        // Same closed form regrouped: v_l(r) = r * sum_{i>=0} (-1)^i L^{l+i}/(l+i)!.
        // Avoids cancellation between r*Q_l(L) and the constant near r = 1.
        double term = std::exp(l * std::log(L) - std::lgamma(l + 1.0));
        double sum = 0.0;
        for (int i = 0; i < 200 && term != 0.0; ++i) {
            sum += (i % 2 == 0) ? term : -term;
            term *= L / (l + i + 1);
        }
        return r * sum;
    }
    const auto& c = volume_coeffs(l);
    double poly = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) poly = poly * L + *it;
    const double b = (l % 2 == 0) ? 1.0 : -1.0;
    return r * poly + b;
}

VolumeBounds volume_bounds(double r, int l) {
    if (l < 1) throw InvalidArgument("volume dimension must be >= 1");
    if (!(r >= 1.0)) throw InvalidArgument("volume_bounds requires r >= 1");
    VolumeBounds vb;
    vb.upper = volume_upper_f(r, l);
    vb.lower = l >= 2 ? vb.upper - volume_upper_f(r, l - 1) : 0.0;
    return vb;
}

// ---------------------------------------------------------------------------
// Generalized weight counts

GeneralizedWeightSeq GeneralizedWeightSeq::harmonic() {
    return {[](std::int64_t l) { return 1.0 / (1.0 + static_cast<double>(l < 0 ? -l : l)); }, 1.0};
}

GeneralizedWeightSeq GeneralizedWeightSeq::inverse_sqrt_plus() {
    // (1+|l|)/sqrt(1+l^2) <= sqrt(2)
    return {[](std::int64_t l) {
                const double a = static_cast<double>(l);
                return 1.0 / std::sqrt(1.0 + a * a);
            },
            std::sqrt(2.0)};
}

namespace {

constexpr double kTieTol = 1e-12;

double estimate_domination(const GeneralizedWeightSeq& b) {
    auto ratio = [&](std::int64_t l) { return b.b(l) * (1.0 + static_cast<double>(l)); };
    double sup = 1.0;
    std::int64_t L = 16;
    for (std::int64_t l = 1; l <= L; ++l) sup = std::max({sup, ratio(l), ratio(-l)});
    while (L < (std::int64_t{1} << 22)) {
        double tail = 0.0;
        for (std::int64_t l = L + 1; l <= 2 * L; ++l) tail = std::max({tail, ratio(l), ratio(-l)});
        L *= 2;
        if (tail <= sup) break;
        sup = tail;
    }
    return sup;
}

std::uint64_t count_at_least(const GeneralizedWeightSeq& b, double threshold, std::uint64_t R, int d) {
    std::uint64_t hits = 0;
    auto rec = [&](auto& self, int j, std::uint64_t budget, double partial) -> void {
        if (j == d) {
            ++hits;
            return;
        }
        for (std::uint64_t u = 1; u <= budget; ++u) {
            const auto a = static_cast<std::int64_t>(u - 1);
            const double plus = partial * b.b(a);
            if (plus >= threshold) self(self, j + 1, budget / u, plus);
            if (a != 0) {
                const double minus = partial * b.b(-a);
                if (minus >= threshold) self(self, j + 1, budget / u, minus);
            }
        }
    };
    rec(rec, 0, R, 1.0);
    return hits;
}

} // namespace

GeneralizedCount count_generalized(const GeneralizedWeightSeq& b, double eps, int d) {
    if (!b.b) throw InvalidArgument("weight sequence has no evaluator");
    if (!(eps > 0.0 && eps <= 1.0)) throw InvalidArgument("eps must lie in (0,1]");
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");

    GeneralizedCount result;
    double C = 1.0;
    if (b.domination) {
        C = std::max(1.0, *b.domination);
    } else {
        C = estimate_domination(b);
        result.domination_estimated = true;
    }
    const double threshold = eps * (1.0 - kTieTol);
    // prod b_{k_j} <= C^d / prod(1+|k_j|), so prod(1+|k_j|) > C^d/threshold excludes k.
    const double R_real = std::floor(std::pow(C, d) / threshold);
    if (!(R_real < 1.8e19)) throw ResourceLimit("count_generalized radius overflow", R_real, max_enumeration());
    std::uint64_t R = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(R_real));

    auto guarded_count = [&](std::uint64_t radius) {
        check_enumeration(cross_size_upper_estimate(static_cast<double>(radius), d), "count_generalized");
        return count_at_least(b, threshold, radius, d);
    };

    std::uint64_t hits = guarded_count(R);
    if (result.domination_estimated) {
        // No certificate: double the radius until the count is stable.
        for (;;) {
            const std::uint64_t bigger = guarded_count(2 * R);
            if (bigger == hits) break;
            hits = bigger;
            R *= 2;
        }
    }
    result.count = hits;
    result.enclosing_radius = R;
    return result;
}

} // namespace crossnum
