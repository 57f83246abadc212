#include "crossnum/tractability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crossnum/combinatorics.hpp"
#include "crossnum/errors.hpp"
#include "crossnum/spectra.hpp"

namespace crossnum {

namespace {

constexpr double kSnapTol = 1e-12;

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0,1)");
}

// n_#(eps, s) in dimension d; 1 when eps >= 1 (a_1 = 1 already qualifies).
BigCount n_sharp(double eps, double s, int d) {
    if (eps >= 1.0) return 1;
    const std::uint64_t r = first_crossing_base(eps, s);
    return count_cross({r - 1, d}) + 1;
}

struct Enclosure {
    BigCount lower;
    BigCount upper;
    WeightKind canonical;
};

WeightKind canonicalize(const WeightKind& k) {
    using T = WeightKind::Tag;
    if ((k.tag() == T::Star && k.s() == 1.0) || (k.tag() == T::IntegerM && k.m() == 1)) return WeightKind::plus(1.0);
    if (k.tag() == T::Star && k.s() == 0.5) return WeightKind::sharp(0.5);
    return k;
}

// Norm-one embeddings plus the constants
//   w_# <= 2^{ds/2} w_+,   w_# <= 2^{(s-1/2)d} w_*  (s > 1/2),   w_* <= 2^{(1/2-s)d} w_#  (s <= 1/2).
Enclosure enclose(const WeightKind& kind, double eps, int d) {
    using T = WeightKind::Tag;
    const WeightKind c = canonicalize(kind);
    const double s = c.s();
    switch (c.tag()) {
    case T::Sharp: {
        const BigCount n = n_sharp(eps, s, d);
        return {n, n, c};
    }
    case T::Plus: {
        const BigCount up1 = n_sharp(eps, s / 2.0, d);
        const BigCount up2 = n_sharp(eps * std::exp2(-d * s / 2.0), s, d);
        return {n_sharp(eps, s, d), std::min(up1, up2), c};
    }
    case T::Star:
        if (s > 0.5) return {n_sharp(eps, s, d), n_sharp(eps * std::exp2(-(s - 0.5) * d), s, d), c};
        return {n_sharp(eps * std::exp2((0.5 - s) * d), s, d), n_sharp(eps, s, d), c};
    case T::IntegerM: {
        const double m = c.m();
        // w_* <= w_m <= w_+
        const auto lo = enclose(WeightKind::plus(m), eps, d);
        const auto hi = enclose(WeightKind::star(m), eps, d);
        return {lo.lower, hi.upper, c};
    }
    }
    return {1, 1, c};
}

} // namespace

TractabilityQuery::TractabilityQuery(double epsilon, int dim, WeightKind k) : eps(epsilon), d(dim), kind(k) {
    check_eps(epsilon);
    if (dim < 1) throw InvalidArgument("dimension d must be >= 1");
}

std::uint64_t first_crossing_base(double eps, double s) {
    check_eps(eps);
    if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("smoothness must be positive and finite");
    const double x = std::exp(-std::log(eps) / s);  // eps^{-1/s}
    if (!(x < 1.8e19)) throw ResourceLimit("first crossing base beyond 64-bit range", x, max_enumeration());
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= kSnapTol * x) return static_cast<std::uint64_t>(nearest);
    return static_cast<std::uint64_t>(std::ceil(x));
}

BigCount info_complexity_sharp(const TractabilityQuery& q) {
    if (q.kind.tag() != WeightKind::Tag::Sharp) throw InvalidArgument("info_complexity_sharp needs the sharp kind");
    return n_sharp(q.eps, q.kind.s(), q.d);
}

BigCount info_complexity_enumerated(const TractabilityQuery& q) {
    if (q.kind.tag() == WeightKind::Tag::Sharp) return info_complexity_sharp(q);
    const auto box = enclose(q.kind, q.eps, q.d);
    check_enumeration(to_double(box.upper), "info_complexity_enumerated");
    const auto table = rearranged_spectrum(q.kind, q.d, static_cast<std::uint64_t>(box.upper));
    const double cut = q.eps * (1.0 + kSnapTol);
    // values are non-increasing: first index with sigma_n <= eps
    const auto it = std::partition_point(table.values.begin(), table.values.end(), [&](double v) { return v > cut; });
    if (it == table.values.end())
        throw ResourceLimit("information complexity beyond the enclosure", to_double(box.upper), max_enumeration());
    return BigCount(static_cast<std::uint64_t>(it - table.values.begin()) + 1);
}

ComplexityEnclosure info_complexity_bounds(const TractabilityQuery& q, bool exact) {
    const auto box = enclose(q.kind, q.eps, q.d);
    ComplexityEnclosure out{box.lower, box.upper, std::nullopt, box.canonical};
    if (box.canonical.tag() == WeightKind::Tag::Sharp) {
        out.exact = box.lower;
    } else if (exact && q.d <= 3) {
        out.exact = info_complexity_enumerated(TractabilityQuery(q.eps, q.d, box.canonical));
    }
    return out;
}

QptConstants qpt_proof_constants(double s) {
    if (!(s > 0.0)) throw InvalidArgument("smoothness must be positive");
    return {4.0 / s, 2.0 * std::exp(2.0)};
}

QptCertificate qpt_certify(double s, const std::vector<int>& d_grid, const std::vector<double>& eps_grid, double t,
                           double C_t) {
    if (d_grid.empty() || eps_grid.empty()) throw InvalidArgument("qpt grids must be non-empty");
    if (!(t > 0.0) || !(C_t > 0.0)) throw InvalidArgument("qpt constants must be positive");
    QptCertificate cert;
    cert.s = s;
    cert.t = t;
    cert.C_t = C_t;
    cert.d_grid = d_grid;
    cert.eps_grid = eps_grid;
    cert.slack = std::numeric_limits<double>::infinity();
    const double ln_ct = std::log(C_t);
    for (int d : d_grid) {
        for (double eps : eps_grid) {
            QptPoint p;
            p.eps = eps;
            p.d = d;
            p.n = info_complexity_sharp(TractabilityQuery(eps, d, WeightKind::sharp(s)));
            p.log_n = log_big(p.n);
            const double scale = std::log(1.0 / eps) * (1.0 + std::log(static_cast<double>(d)));
            p.log_rhs = ln_ct + t * scale;
            p.t_needed = (p.log_n - ln_ct) / scale;
            const double margin = p.log_rhs - p.log_n;
            if (margin < -1e-12 * std::max(1.0, std::abs(p.log_rhs))) cert.violations.push_back(p);
            if (margin < cert.slack) {
                cert.slack = margin;
                cert.worst_point = p;
            }
            cert.points.push_back(std::move(p));
        }
    }
    cert.pass = cert.violations.empty();
    return cert;
}

} // namespace crossnum
