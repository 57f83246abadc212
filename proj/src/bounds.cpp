#include "crossnum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "crossnum/errors.hpp"

namespace crossnum {

namespace {

using std::numbers::e;
const double kLn2 = std::numbers::ln2;
const double kLn3 = std::log(3.0);
const double kLnB = std::log(2.0 + std::log(12.0));  // ln(2 + ln 12)
const double kLn12e2 = std::log(12.0) + 2.0;          // ln(12 e^2)

std::vector<BoundFormula> make_table() {
    using F = FormulaName;
    using S = BoundSide;
    using P = SpectrumFamily;
    return {
        {F::AsymptoticConstant, "asymptotic-constant", S::Reference, P::Sharp, false},
        {F::SharpUpper43, "sharp-upper-43", S::Upper, P::Sharp, false},
        {F::SharpLower43, "sharp-lower-43", S::Lower, P::Sharp, false},
        {F::SharpLowerNarrow, "sharp-lower-narrow", S::Lower, P::Sharp, true},
        {F::TensorTrick45, "tensor-trick-45", S::Upper, P::Sharp, false},
        {F::PSquaredBound, "p-squared", S::Upper, P::Sharp, false},
        {F::PreUpper46, "pre-upper-46", S::Upper, P::Sharp, false},
        {F::PreLower47, "pre-lower-47", S::Lower, P::Sharp, false},
        {F::PlusUpper49, "plus-upper-49", S::Upper, P::Plus, false},
        {F::PlusLower49, "plus-lower-49", S::Lower, P::Plus, false},
        {F::StarUpper410, "star-upper-410", S::Upper, P::Star, false},
        {F::StarLower410, "star-lower-410", S::Lower, P::Star, false},
        {F::IntMUpper413, "intm-upper-413", S::Upper, P::IntegerM, false},
        {F::IntMLower413, "intm-lower-413", S::Lower, P::IntegerM, false},
    };
}

// Validity interval [lo, hi] in n; hi empty means unbounded.
struct Range {
    BigCount lo;
    std::optional<BigCount> hi;
    bool empty = false;
};

BigCount first_above_12e2(int d) {
    // smallest n with ln n > d ln(12 e^2)
    const double t = std::exp(d * kLn12e2);
    BigCount n = t < 1e300 ? BigCount(std::floor(t)) : BigCount(1);
    if (n < 1) n = 1;
    auto above = [&](const BigCount& v) { return log_big(v) > d * kLn12e2; };
    while (!above(n)) ++n;
    while (n > 1 && above(n - 1)) --n;
    return n;
}

Range validity(FormulaName name, int d) {
    using F = FormulaName;
    Range r;
    r.lo = 1;
    switch (name) {
    case F::AsymptoticConstant:
    case F::PSquaredBound:
        break;
    case F::SharpUpper43:
    case F::PlusUpper49:
    case F::StarUpper410:
    case F::IntMUpper413:
        r.lo = pow_big(27, static_cast<std::uint64_t>(d));
        break;
    case F::SharpLower43:
    case F::PlusLower49:
    case F::StarLower410:
    case F::IntMLower413:
        r.lo = first_above_12e2(d);
        break;
    case F::SharpLowerNarrow: {
        // n^2 > 48^d
        const BigCount t = pow_big(48, static_cast<std::uint64_t>(d));
        BigCount n = boost::multiprecision::sqrt(t);
        while (n * n <= t) ++n;
        r.lo = n;
        break;
    }
    case F::TensorTrick45:
        r.lo = pow_big(15, static_cast<std::uint64_t>(d));
        break;
    case F::PreUpper46:
    case F::PreLower47:
        if (d < 2) {
            r.empty = true;
            break;
        }
        r.lo = name == F::PreLower47 ? 2 : 1;
        r.hi = BigCount(d) * pow_big(4, static_cast<std::uint64_t>(d)) / 2;  // 2n <= d 4^d
        break;
    }
    return r;
}

double lgam(double x) { return std::lgamma(x); }

// (d-1) s ln ln n - s ln n
double log_rate(double ln_n, int d, double s) {
    double v = -s * ln_n;
    if (d > 1) v += (d - 1) * s * std::log(ln_n);
    return v;
}

int integer_order(double s) {
    const double m = std::round(s);
    if (m < 1 || std::abs(s - m) > 0) throw InvalidArgument("integer-m formulas need a positive integer order");
    return static_cast<int>(m);
}

double log_value_impl(FormulaName name, double ln_n, int d, double s) {
    using F = FormulaName;
    const double D = d;
    const double log_lower_core = kLn3 - lgam(D + 1) - D * kLnB;  // ln(3/(d! (2+ln12)^d))
    switch (name) {
    case F::AsymptoticConstant:
        return s * (D * kLn2 - lgam(D));
    case F::SharpUpper43:
        return s * (D * kLn3 - lgam(D)) + log_rate(ln_n, d, s);
    case F::SharpLower43:
    case F::PlusLower49:
        return s * (log_lower_core + D * kLn2) + log_rate(ln_n, d, s);
    case F::SharpLowerNarrow:
        return s * (D * kLn3 - D * kLn2 - lgam(D)) + log_rate(ln_n, d, s);
    case F::TensorTrick45:
        return -s * ln_n + s * D * std::log(2.0 * e * ln_n / D);
    case F::PSquaredBound:
        return 0.5 * s * (D * std::log(std::numbers::pi * std::numbers::pi / 3.0 - 1.0) - ln_n);
    case F::PreUpper46:
        return s / (2.0 + std::log2(D)) * (2.0 - ln_n);
    case F::PreLower47: {
        const double alpha = preasymptotic_alpha(ln_n / kLn2, d);
        return -s * kLn2 - s * ln_n / alpha;
    }
    case F::PlusUpper49:
        return s * (D * std::log(3.0 * std::numbers::sqrt2) - lgam(D)) + log_rate(ln_n, d, s);
    case F::StarUpper410:
        if (s > 0.5) return -0.5 * D * kLn2 + s * (D * std::log(6.0) - lgam(D)) + log_rate(ln_n, d, s);
        return s * (D * kLn3 - lgam(D)) + log_rate(ln_n, d, s);
    case F::StarLower410:
        if (s > 0.5) return s * (log_lower_core + D * kLn2) + log_rate(ln_n, d, s);
        return -0.5 * D * kLn2 + s * (log_lower_core + 2.0 * D * kLn2) + log_rate(ln_n, d, s);
    case F::IntMUpper413: {
        const double m = integer_order(s);
        return m * (D * std::log(6.0) - lgam(D)) - 0.5 * D * kLn2 + log_rate(ln_n, d, m);
    }
    case F::IntMLower413: {
        // exponent m on the constant, matching the rate exponent
        const double m = integer_order(s);
        return m * (log_lower_core + D * kLn2) + log_rate(ln_n, d, m);
    }
    }
    return 0.0;
}

void check_params(int d, double s) {
    if (d < 1) throw InvalidArgument("dimension d must be >= 1");
    if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("smoothness must be positive and finite");
}

} // namespace

const std::vector<BoundFormula>& all_formulas() {
    static const std::vector<BoundFormula> table = make_table();
    return table;
}

const BoundFormula& formula(FormulaName name) {
    for (const auto& f : all_formulas())
        if (f.name == name) return f;
    throw InvalidArgument("unknown formula");
}

std::optional<FormulaName> parse_formula(const std::string& id) {
    for (const auto& f : all_formulas())
        if (f.id == id) return f.name;
    return std::nullopt;
}

bool BoundFormula::valid(const BigCount& n, int d, double s) const {
    check_params(d, s);
    if (n < 1) return false;
    if (family == SpectrumFamily::IntegerM && std::round(s) != s) return false;
    const Range r = validity(name, d);
    if (r.empty) return false;
    if (n < r.lo) return false;
    if (r.hi && n > *r.hi) return false;
    return true;
}

double BoundFormula::log_value(const BigCount& n, int d, double s) const {
    check_params(d, s);
    if (n < 1) throw InvalidArgument("bound index n must be >= 1");
    return log_value_impl(name, log_big(n), d, s);
}

double asymptotic_constant(int d, double s) {
    check_params(d, s);
    return std::exp(log_value_impl(FormulaName::AsymptoticConstant, 0.0, d, s));
}

double preasymptotic_alpha(double log2_n, int d) {
    if (!(log2_n > 0.0)) throw InvalidArgument("alpha needs n >= 2");
    return 2.0 + std::log2(d / log2_n + 0.5);
}

std::optional<double> bound_value(FormulaName name, const BigCount& n, int d, double s) {
    if (n < 1) throw InvalidArgument("bound index n must be >= 1");
    const auto& f = formula(name);
    if (!f.valid(n, d, s)) return std::nullopt;
    return std::exp(f.log_value(n, d, s));
}

// ---------------------------------------------------------------------------

namespace {

WeightKind kind_for(const BoundFormula& f, double s) {
    switch (f.family) {
    case SpectrumFamily::Sharp: return WeightKind::sharp(s);
    case SpectrumFamily::Plus: return WeightKind::plus(s);
    case SpectrumFamily::Star: return WeightKind::star(s);
    case SpectrumFamily::IntegerM: return WeightKind::integer_m(integer_order(s));
    }
    return WeightKind::sharp(s);
}

} // namespace

VerificationReport verify_bound(FormulaName name, int d, double s, const std::vector<BigCount>& n_grid) {
    check_params(d, s);
    const auto& f = formula(name);
    if (f.side == BoundSide::Reference)
        throw InvalidArgument(f.id + " is a limit constant, not an inequality");

    VerificationReport rep;
    rep.formula = f.id;
    rep.d = d;
    rep.s = s;

    std::vector<BigCount> grid;
    for (const auto& n : n_grid) {
        if (f.valid(n, d, s))
            grid.push_back(n);
        else
            ++rep.points_skipped;
    }
    if (rep.points_skipped > 0) rep.grid_note = std::to_string(rep.points_skipped) + " points outside the validity range skipped";
    if (grid.empty()) return rep;

    const BigCount n_top = *std::max_element(grid.begin(), grid.end());
    const WeightKind kind = kind_for(f, s);
    const double s_rate = kind.effective_smoothness();

    std::optional<SharpSpectrum> sharp;
    SpectrumTable table;
    if (f.family == SpectrumFamily::Sharp) {
        sharp.emplace(d, s, exact_an_sharp(n_top, d, 1.0).base());
    } else {
        check_enumeration(to_double(n_top), "verify_bound");
        table = rearranged_spectrum(kind, d, static_cast<std::uint64_t>(n_top));
    }

    const double tol = std::log1p(kBoundRelTol);
    bool first = true;
    for (const auto& n : grid) {
        double log_exact = 0.0;
        if (sharp) {
            log_exact = -s_rate * std::log(static_cast<double>(sharp->base_for(n)));
        } else {
            log_exact = std::log(table[static_cast<std::size_t>(n)]);
        }
        const double log_bound = f.log_value(n, d, s);
        double slack = 0.0;
        bool ok = true;
        if (f.side == BoundSide::Upper) {
            slack = -std::expm1(log_exact - log_bound);
            ok = log_exact <= log_bound + tol;
        } else {
            slack = std::expm1(log_exact - log_bound);
            ok = log_exact >= log_bound - tol;
        }
        if (!ok) rep.violations.push_back({n, std::exp(log_exact), std::exp(log_bound)});
        if (first) {
            rep.min_slack = rep.max_slack = slack;
            first = false;
        } else {
            rep.min_slack = std::min(rep.min_slack, slack);
            rep.max_slack = std::max(rep.max_slack, slack);
        }
        ++rep.points_checked;
    }
    return rep;
}

std::vector<BigCount> plateau_grid(FormulaName name, int d, double s, std::uint64_t r_lo, std::uint64_t r_hi) {
    check_params(d, s);
    if (r_lo < 1 || r_hi < r_lo) throw InvalidArgument("plateau grid needs 1 <= r_lo <= r_hi");
    const Range range = validity(name, d);
    std::vector<BigCount> out;
    if (range.empty) return out;
    const auto cum = breakpoints_sharp(d, 1.0, r_hi);
    for (std::uint64_t r = r_lo; r <= r_hi; ++r) {
        BigCount a = (r == 1 ? BigCount(0) : cum[r - 2].cumulative) + 1;
        BigCount b = cum[r - 1].cumulative;
        if (a < range.lo) a = range.lo;
        if (range.hi && b > *range.hi) b = *range.hi;
        if (a > b) continue;
        out.push_back(a);
        if (b != a) out.push_back(b);
    }
    const auto& f = formula(name);
    std::erase_if(out, [&](const BigCount& n) { return !f.valid(n, d, s); });
    return out;
}

std::vector<BigCount> dense_grid(FormulaName name, int d, double s, std::uint64_t n_lo, std::uint64_t n_hi) {
    check_params(d, s);
    const auto& f = formula(name);
    std::vector<BigCount> out;
    for (std::uint64_t n = std::max<std::uint64_t>(n_lo, 1); n <= n_hi; ++n)
        if (f.valid(n, d, s)) out.emplace_back(n);
    return out;
}

std::vector<TracePoint> limit_ratio_trace(int d, double s, const std::vector<std::uint64_t>& r_samples) {
    check_params(d, s);
    std::vector<TracePoint> out;
    for (auto r : r_samples) {
        if (r < 2) throw InvalidArgument("trace samples need r >= 2");
        TracePoint p;
        p.r = r;
        p.n = count_cross({r, d});
        const double ln_n = log_big(p.n);
        double lr = s * ln_n - s * std::log(static_cast<double>(r));
        if (d > 1) lr -= (d - 1) * s * std::log(ln_n);
        p.ratio = std::exp(lr);
        out.push_back(std::move(p));
    }
    return out;
}

double tensor_crossover_c0() {
    auto f = [](double c) { return c - 2.0 * std::log(c) - 2.0; };
    boost::math::tools::eps_tolerance<double> tol(52);
    std::uintmax_t iters = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(f, e, 10.0, tol, iters);
    return 0.5 * (a + b);
}

double p2_vs_tensor_crossover(int d, double c_max) {
    check_params(d, 1.0);
    if (!(c_max > 1.0)) throw InvalidArgument("c_max must exceed 1");
    // n = e^{c d}; positive while the p = 2 bound is at most the tensor-trick bound
    auto gap = [d](double c) {
        const double ln_n = c * d;
        return log_value_impl(FormulaName::TensorTrick45, ln_n, d, 1.0) -
               log_value_impl(FormulaName::PSquaredBound, ln_n, d, 1.0);
    };
    if (gap(1.0) < 0.0) return 1.0;
    const double step = 1e-3;
    double c = 1.0;
    while (c + step <= c_max && gap(c + step) >= 0.0) c += step;
    if (c + step > c_max) return c_max;
    double lo = c, hi = c + step;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) >= 0.0 ? lo : hi) = mid;
    }
    return lo;
}

} // namespace crossnum
