#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossnum/bigcount.hpp"
#include "crossnum/spectra.hpp"

namespace crossnum {

enum class FormulaName {
    AsymptoticConstant,
    SharpUpper43,
    SharpLower43,
    SharpLowerNarrow,  // experimental: range n > 48^{d/2}
    TensorTrick45,
    PSquaredBound,
    PreUpper46,
    PreLower47,
    PlusUpper49,
    PlusLower49,
    StarUpper410,
    StarLower410,
    IntMUpper413,
    IntMLower413,
};

enum class BoundSide { Upper, Lower, Reference };

/// Which spectrum a formula is compared against.
enum class SpectrumFamily { Sharp, Plus, Star, IntegerM };

struct BoundFormula {
    FormulaName name;
    std::string id;  // kebab-case CLI name, e.g. "sharp-upper-43"
    BoundSide side;
    SpectrumFamily family;
    bool experimental = false;

    /// Validity predicate on (n, d, s), exact where the threshold is an integer power.
    bool valid(const BigCount& n, int d, double s) const;
    /// Natural log of the formula value; only meaningful when valid().
    double log_value(const BigCount& n, int d, double s) const;
};

const BoundFormula& formula(FormulaName name);
const std::vector<BoundFormula>& all_formulas();
std::optional<FormulaName> parse_formula(const std::string& id);

/// (2^d/(d-1)!)^s, via lgamma.
double asymptotic_constant(int d, double s);

/// alpha(n,d) = 2 + log2(d/log2 n + 1/2), given log2 n.
double preasymptotic_alpha(double log2_n, int d);

/// Formula value, or nullopt outside its validity range. Throws on n = 0.
std::optional<double> bound_value(FormulaName name, const BigCount& n, int d, double s);

struct Violation {
    BigCount n;
    double exact = 0.0;
    double bound = 0.0;
};

struct VerificationReport {
    std::string formula;
    int d = 0;
    double s = 0.0;
    std::uint64_t points_checked = 0;
    std::uint64_t points_skipped = 0;
    std::vector<Violation> violations;
    /// Smallest and largest relative margin |exact - bound| / bound on the
    /// correct side (negative when violated).
    double min_slack = 0.0;
    double max_slack = 0.0;
    std::string grid_note;

    bool pass() const { return violations.empty(); }
};

inline constexpr double kBoundRelTol = 1e-12;

/// Compare a formula against exact approximation numbers at every n of the grid.
/// Sharp-family formulas use the # spectrum; Plus/Star/IntegerM use certified
/// enumerated spectra. Points outside the validity range are skipped.
VerificationReport verify_bound(FormulaName name, int d, double s, const std::vector<BigCount>& n_grid);

/// Plateau endpoints C(r-1,d)+1 and C(r,d) for r in [r_lo, r_hi], clipped to the
/// validity range of the formula. For formulas decreasing in n this grid is
/// exhaustive: upper bounds are tightest at plateau ends, lower bounds at plateau starts.
std::vector<BigCount> plateau_grid(FormulaName name, int d, double s, std::uint64_t r_lo,
                                   std::uint64_t r_hi);

/// Every n in [n_lo, n_hi] inside the validity range.
std::vector<BigCount> dense_grid(FormulaName name, int d, double s, std::uint64_t n_lo,
                                 std::uint64_t n_hi);

struct TracePoint {
    std::uint64_t r = 0;
    BigCount n;
    double ratio = 0.0;
};

/// n = C(r,d), ratio = n^s a_n / (ln n)^{(d-1)s} with a_n = r^{-s}.
std::vector<TracePoint> limit_ratio_trace(int d, double s, const std::vector<std::uint64_t>& r_samples);

/// Root of c - 2 ln c = 2 above e.
double tensor_crossover_c0();

/// Largest exponent c (n = e^{c d}) in [1, c_max] up to which the p = 2 bound
/// is at most the tensor-trick bound, scanning from c = 1 (s = 1).
double p2_vs_tensor_crossover(int d, double c_max);

} // namespace crossnum
