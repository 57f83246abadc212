#include "crossnum/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "crossnum/errors.hpp"
#include "crossnum/kernels.hpp"
#include "cross_walk.hpp"

namespace crossnum {

ApproxNumber::ApproxNumber(std::uint64_t base, double s) : base_(base), s_(s) {
    if (base < 1) throw InvalidArgument("approximation number base must be >= 1");
    if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("smoothness must be positive and finite");
}

double ApproxNumber::value() const {
    if (base_ == 1) return 1.0;
    return std::exp(-s_ * std::log(static_cast<double>(base_)));
}

std::weak_ordering ApproxNumber::compare(const ApproxNumber& other) const {
    if (s_ != other.s_) throw InvalidArgument("cannot compare approximation numbers of different smoothness");
    if (base_ == other.base_) return std::weak_ordering::equivalent;
    return base_ > other.base_ ? std::weak_ordering::less : std::weak_ordering::greater;
}

// ---------------------------------------------------------------------------

ApproxNumber exact_an_sharp(const BigCount& n, int d, double s) {
    if (n < 1) throw InvalidArgument("index n must be >= 1");
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");
    if (n == 1) return {1, s};
    std::uint64_t lo = 1, hi = 2;  // C(lo) < n
    while (count_cross({hi, d}) < n) {
        lo = hi;
        if (hi > (std::uint64_t{1} << 62)) throw ResourceLimit("exact_an_sharp: index beyond search range", to_double(n), max_enumeration());
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (count_cross({mid, d}) < n)
            lo = mid;
        else
            hi = mid;
    }
    return {hi, s};
}

// C(r,d) - C(r-1,d) = sum_l 2^l binom(d,l) F_l(r), with F_l(r) the number of
// ordered factorizations of r into l factors >= 2:
//   F_1(r) = [r >= 2],  F_l(m) = sum_{f | m, f >= 2} F_{l-1}(m/f).

namespace {

BigCount from_u128(unsigned __int128 v) {
    BigCount hi(static_cast<std::uint64_t>(v >> 64));
    return (hi << 64) | BigCount(static_cast<std::uint64_t>(v));
}

std::vector<BigCount> sieve_cumulative(int d, std::uint64_t r_max) {
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");
    if (r_max < 1) throw InvalidArgument("r_max must be >= 1");
    const int L = std::min(d, static_cast<int>(std::bit_width(r_max)) - 1);
    check_enumeration(static_cast<double>(r_max) * std::max(L, 1), "breakpoint sieve");

    const std::size_t N = static_cast<std::size_t>(r_max) + 1;
    std::vector<std::uint64_t> F(N, 0), next(N, 0);
    for (std::size_t r = 2; r < N; ++r) F[r] = 1;

    const bool narrow = cross_size_upper_estimate(static_cast<double>(r_max), d) < 1e36;
    std::vector<unsigned __int128> acc_n;
    std::vector<BigCount> acc_b;
    if (narrow)
        acc_n.assign(N, 0);
    else
        acc_b.assign(N, 0);

    BigCount binom = 1;
    for (int l = 1; l <= L; ++l) {
        binom = binom * (d - l + 1) / l;
        const BigCount w = (BigCount(1) << l) * binom;
        if (narrow) {
            const auto wn = static_cast<unsigned __int128>(static_cast<std::uint64_t>(w >> 64)) << 64 |
                            static_cast<std::uint64_t>(w & BigCount(~std::uint64_t{0}));
            for (std::size_t r = 2; r < N; ++r)
                if (F[r]) acc_n[r] += wn * F[r];
        } else {
            for (std::size_t r = 2; r < N; ++r)
                if (F[r]) acc_b[r] += w * F[r];
        }
        if (l == L) break;
        std::fill(next.begin(), next.end(), 0);
        const std::uint64_t b_min = std::uint64_t{1} << l;  // F_l(b) = 0 below 2^l
        for (std::uint64_t a = 2; a * b_min <= r_max; ++a)
            for (std::uint64_t b = b_min, m = a * b_min; m <= r_max; ++b, m += a)
                next[m] += F[b];
        F.swap(next);
    }

    std::vector<BigCount> cum(N);
    cum[0] = 0;
    if (narrow) {
        unsigned __int128 run = 0;
        for (std::size_t r = 1; r < N; ++r) {
            run += (r == 1 ? 1 : acc_n[r]);
            cum[r] = from_u128(run);
        }
    } else {
        BigCount run = 0;
        for (std::size_t r = 1; r < N; ++r) {
            run += (r == 1 ? BigCount(1) : acc_b[r]);
            cum[r] = run;
        }
    }
    return cum;
}

} // namespace

std::vector<Breakpoint> breakpoints_sharp(int d, double s, std::uint64_t r_max) {
    const auto cum = sieve_cumulative(d, r_max);
    std::vector<Breakpoint> out;
    out.reserve(static_cast<std::size_t>(r_max));
    for (std::uint64_t r = 1; r <= r_max; ++r) out.push_back({r, cum[r], ApproxNumber(r, s)});
    return out;
}

SharpSpectrum::SharpSpectrum(int d, double s, std::uint64_t r_max) : d_(d), s_(s) {
    ApproxNumber(1, s);  // validates s
    cum_ = sieve_cumulative(d, std::max<std::uint64_t>(r_max, 1));
}

void SharpSpectrum::extend_to(std::uint64_t r_max) {
    if (r_max <= this->r_max()) return;
    cum_ = sieve_cumulative(d_, r_max);
}

const BigCount& SharpSpectrum::cumulative(std::uint64_t r) {
    if (r > r_max()) extend_to(std::max(r, 2 * r_max()));
    return cum_[r];
}

std::uint64_t SharpSpectrum::base_for(const BigCount& n) {
    if (n < 1) throw InvalidArgument("index n must be >= 1");
    while (cum_.back() < n) extend_to(2 * r_max());
    const auto it = std::lower_bound(cum_.begin(), cum_.end(), n);
    return static_cast<std::uint64_t>(it - cum_.begin());
}

ApproxNumber SharpSpectrum::an(const BigCount& n) { return {base_for(n), s_}; }

// ---------------------------------------------------------------------------

double domination_constant(const WeightKind& kind, int d) {
    // Per coordinate: 1+l^2 >= (1+|l|)^2/2, 1+|l|^{2s} >= ((1+|l|)/2)^{2s},
    // v_m(l)^2 >= 1+l^{2m} >= ((1+|l|)/2)^{2m}.
    switch (kind.tag()) {
    case WeightKind::Tag::Sharp: return 1.0;
    case WeightKind::Tag::Plus: return std::exp2(d * kind.s() / 2.0);
    case WeightKind::Tag::Star: return std::exp2(d * kind.s());
    case WeightKind::Tag::IntegerM: return std::exp2(static_cast<double>(d) * kind.m());
    }
    return 1.0;
}

namespace {

constexpr double kCertTol = 1e-12;

struct Entry {
    double value;
    std::uint64_t product;
    IndexVector k;
};

std::vector<Entry> collect_entries(const WeightKind& kind, std::uint64_t R, int d) {
    std::vector<Entry> out;
    auto visit = [&](const std::vector<std::int64_t>& k, std::uint64_t p) {
        out.push_back({inverse_weight(kind, k), p, IndexVector(k)});
    };
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
    detail::walk_cross(k, 0, R, 1, visit);
    return out;
}

std::uint64_t guarded_radius(double R, int d) {
    check_enumeration(cross_size_upper_estimate(R, d), "rearranged_spectrum");
    return static_cast<std::uint64_t>(R);
}

SpectrumTable sharp_table(const WeightKind& kind, int d, std::uint64_t n_max, std::uint64_t R,
                          const SpectrumOptions& opts) {
    SpectrumTable t;
    t.kind = kind;
    t.d = d;
    t.certification = Certification::Exact;
    t.enumeration_radius = R;
    const std::size_t n = static_cast<std::size_t>(n_max);
    if (opts.keep_indices) {
        auto entries = collect_entries(kind, R, d);
        std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(n), entries.end(),
                          [](const Entry& a, const Entry& b) {
                              return a.product != b.product ? a.product < b.product : a.k < b.k;
                          });
        for (std::size_t i = 0; i < n; ++i) {
            t.sharp_bases.push_back(entries[i].product);
            t.indices.push_back(std::move(entries[i].k));
        }
    } else {
        auto products = opts.parallel ? kernels::omp::cross_products(R, d) : kernels::serial::cross_products(R, d);
        std::partial_sort(products.begin(), products.begin() + static_cast<std::ptrdiff_t>(n), products.end());
        t.sharp_bases.assign(products.begin(), products.begin() + static_cast<std::ptrdiff_t>(n));
    }
    t.values.reserve(n);
    for (auto r : t.sharp_bases) t.values.push_back(ApproxNumber(r, kind.s()).value());
    return t;
}

} // namespace

SpectrumTable rearranged_spectrum(const WeightKind& kind, int d, std::uint64_t n_max, const SpectrumOptions& opts) {
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");
    if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
    check_enumeration(static_cast<double>(n_max), "rearranged_spectrum");

    // C(R,d) >= n_max, so N(R,d) holds at least n_max candidates.
    std::uint64_t R = exact_an_sharp(BigCount(n_max), d, 1.0).base();
    R = guarded_radius(static_cast<double>(R), d);
    if (kind.tag() == WeightKind::Tag::Sharp) return sharp_table(kind, d, n_max, R, opts);

    const double c = domination_constant(kind, d);
    const double s_eff = kind.effective_smoothness();
    const std::size_t n = static_cast<std::size_t>(n_max);

    for (int pass = 0; pass < 8; ++pass) {
        SpectrumTable t;
        t.kind = kind;
        t.d = d;
        t.certification = Certification::EnumeratedCertified;
        t.enumeration_radius = R;
        if (opts.keep_indices) {
            auto entries = collect_entries(kind, R, d);
            std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(n), entries.end(),
                              [](const Entry& a, const Entry& b) {
                                  return a.value != b.value ? a.value > b.value : a.k < b.k;
                              });
            for (std::size_t i = 0; i < n; ++i) {
                t.values.push_back(entries[i].value);
                t.indices.push_back(std::move(entries[i].k));
            }
        } else {
            auto vals = opts.parallel ? kernels::omp::inverse_weights(kind, R, d)
                                      : kernels::serial::inverse_weights(kind, R, d);
            std::partial_sort(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(n), vals.end(),
                              std::greater<>());
            t.values.assign(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(n));
        }
        const double sigma = t.values.back();
        // Every k outside N(R,d) has 1/w(k) <= c (R+1)^{-s_eff}.
        const double outside = c * std::exp(-s_eff * std::log(static_cast<double>(R) + 1.0));
        if (outside <= sigma * (1.0 - kCertTol)) return t;

        const double need = std::pow(c / (sigma * (1.0 - kCertTol)), 1.0 / s_eff) * (1.0 + 1e-9);
        const double next = std::max(static_cast<double>(R) + 1.0, std::ceil(need));
        R = guarded_radius(next, d);
    }
    throw ResourceLimit("rearranged_spectrum: certification did not converge", static_cast<double>(R),
                        max_enumeration());
}

// ---------------------------------------------------------------------------
// Embeddings X -> Y of norm <= c, i.e. weight_Y(k) <= c * weight_X(k).

std::optional<std::pair<std::string, double>> embedding_regime(const WeightKind& from, const WeightKind& to, int d) {
    using T = WeightKind::Tag;
    const T a = from.tag(), b = to.tag();
    const double s = from.s(), t = to.s();

    if (a == b) {
        if (a == T::IntegerM ? to.m() <= from.m() : t <= s) return std::pair{std::string("same kind, lower smoothness"), 1.0};
        return std::nullopt;
    }
    if (a == T::Plus && b == T::Sharp && t == s / 2.0) return std::pair{std::string("plus(s) into sharp(s/2)"), 1.0};

    if (a == T::IntegerM || b == T::IntegerM) {
        const double m = a == T::IntegerM ? from.m() : to.m();
        const double other = a == T::IntegerM ? t : s;
        if (other != m) return std::nullopt;
        // w_* <= w_m <= w_+ <= (2^m/(m+1))^{d/2} w_m
        if (a == T::Plus && b == T::IntegerM) return std::pair{std::string("integer chain: plus into intm"), 1.0};
        if (a == T::IntegerM && b == T::Star) return std::pair{std::string("integer chain: intm into star"), 1.0};
        if (a == T::IntegerM && b == T::Plus)
            return std::pair{std::string("integer chain: intm into plus"), std::pow(std::exp2(m) / (m + 1.0), d / 2.0)};
        return std::nullopt;
    }

    if (s != t) return std::nullopt;
    if (s >= 1.0) {
        if ((a == T::Sharp && (b == T::Plus || b == T::Star)) || (a == T::Plus && b == T::Star))
            return std::pair{std::string("s >= 1: sharp into plus into star"), 1.0};
    }
    if (s >= 0.5 && s <= 1.0) {
        if ((a == T::Sharp && (b == T::Star || b == T::Plus)) || (a == T::Star && b == T::Plus))
            return std::pair{std::string("1/2 <= s <= 1: sharp into star into plus"), 1.0};
    }
    if (s <= 0.5) {
        if ((a == T::Star && (b == T::Sharp || b == T::Plus)) || (a == T::Sharp && b == T::Plus))
            return std::pair{std::string("s <= 1/2: star into sharp into plus"), 1.0};
    }
    return std::nullopt;
}

DominationReport verify_weight_domination(const WeightKind& from, const WeightKind& to, int d,
                                          std::uint64_t sample_radius) {
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");
    const auto regime = embedding_regime(from, to, d);
    if (!regime)
        throw UnsupportedRegime("no known embedding " + from.describe() + " -> " + to.describe());

    DominationReport rep;
    rep.regime = regime->first;
    rep.constant = regime->second;
    const auto side = static_cast<double>(2 * sample_radius + 1);
    check_enumeration(std::pow(side, d), "verify_weight_domination");

    const auto R = static_cast<std::int64_t>(sample_radius);
    std::vector<std::int64_t> k(static_cast<std::size_t>(d), -R);
    for (;;) {
        const double ratio = weight(to, k) / (rep.constant * weight(from, k));
        rep.worst_ratio = std::max(rep.worst_ratio, ratio);
        ++rep.checked;
        if (ratio > 1.0 + 1e-12 && !rep.counterexample) {
            rep.pass = false;
            rep.counterexample = IndexVector(k);
        }
        int j = d - 1;
        while (j >= 0 && k[j] == R) k[j--] = -R;
        if (j < 0) break;
        ++k[j];
    }

    // The integer chain is also checked one coordinate at a time:
    // 1 + l^{2m} <= v_m(l)^2 <= (1+l^2)^m <= 2^m/(m+1) v_m(l)^2.
    if (from.tag() == WeightKind::Tag::IntegerM || to.tag() == WeightKind::Tag::IntegerM) {
        const int m = from.tag() == WeightKind::Tag::IntegerM ? from.m() : to.m();
        const auto vm = WeightKind::integer_m(m);
        for (std::int64_t l = 0; l <= R; ++l) {
            const double a = static_cast<double>(l);
            const double v2 = vm.factor(l) * vm.factor(l);
            const double lo = 1.0 + std::pow(a, 2.0 * m);
            const double hi = std::pow(1.0 + a * a, m);
            const double top = std::exp2(m) / (m + 1.0) * v2;
            ++rep.checked;
            if (!(lo <= v2 * (1 + 1e-12) && v2 <= hi * (1 + 1e-12) && hi <= top * (1 + 1e-12)) && !rep.counterexample) {
                rep.pass = false;
                IndexVector ce(d);
                ce[0] = l;
                rep.counterexample = ce;
            }
        }
    }
    return rep;
}

} // namespace crossnum
