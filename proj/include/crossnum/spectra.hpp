#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossnum/bigcount.hpp"
#include "crossnum/combinatorics.hpp"
#include "crossnum/weights.hpp"

namespace crossnum {

/// Exact value r^{-s}, kept symbolic as (r, s).
class ApproxNumber {
public:
    ApproxNumber(std::uint64_t base, double s);

    std::uint64_t base() const { return base_; }
    double smoothness() const { return s_; }

    /// exp(-s ln r); never overflows.
    double value() const;

    /// Same-smoothness ordering is by base, reversed (larger base = smaller value).
    /// Throws InvalidArgument if the smoothness differs.
    std::weak_ordering compare(const ApproxNumber& other) const;

    bool operator==(const ApproxNumber& other) const = default;

private:
    std::uint64_t base_;
    double s_;
};

/// One step of the piecewise-constant # spectrum: a_n = r^{-s} for
/// C(r-1,d) < n <= C(r,d).
struct Breakpoint {
    std::uint64_t r = 1;
    BigCount cumulative;  // C(r,d)
    ApproxNumber value{1, 1.0};
};

/// a_n for the # norm via galloping + binary search on count_cross.
ApproxNumber exact_an_sharp(const BigCount& n, int d, double s);

/// Breakpoints r = 1..r_max. Built with an ordered-factorization sieve
/// (an algebraic route independent of count_cross).
std::vector<Breakpoint> breakpoints_sharp(int d, double s, std::uint64_t r_max);

/// Cached breakpoint table answering a_n by binary search. Grows on demand.
class SharpSpectrum {
public:
    SharpSpectrum(int d, double s, std::uint64_t r_max = 64);

    int dimension() const { return d_; }
    double smoothness() const { return s_; }

    /// a_n, extending the table as needed.
    ApproxNumber an(const BigCount& n);
    /// Plateau base r for index n.
    std::uint64_t base_for(const BigCount& n);

    /// C(r,d) for 0 <= r <= r_max (C(0,d) = 0).
    const BigCount& cumulative(std::uint64_t r);
    std::uint64_t r_max() const { return cum_.size() - 1; }

    void extend_to(std::uint64_t r_max);

private:
    int d_;
    double s_;
    std::vector<BigCount> cum_;  // cum_[r] = C(r,d)
};

enum class Certification { Exact, EnumeratedCertified };

/// Non-increasing sequence sigma_1 >= sigma_2 >= ... with provenance.
struct SpectrumTable {
    std::vector<double> values;
    WeightKind kind = WeightKind::sharp(1.0);
    int d = 1;
    Certification certification = Certification::EnumeratedCertified;
    std::uint64_t enumeration_radius = 0;
    /// For Sharp: integer plateau bases r_n with sigma_n = r_n^{-s}.
    std::vector<std::uint64_t> sharp_bases;
    /// Optional index set in spectrum order (ties broken lexicographically).
    std::vector<IndexVector> indices;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t n1) const { return values.at(n1 - 1); }  // 1-based
};

struct SpectrumOptions {
    bool keep_indices = false;
    bool parallel = true;
};

/// The n_max largest values of 1/weight(kind,k) over Z^d, certified complete.
/// Sharp is accepted too (envelope constant 1).
SpectrumTable rearranged_spectrum(const WeightKind& kind, int d, std::uint64_t n_max,
                                  const SpectrumOptions& opts = {});

/// Envelope constant c with 1/weight(kind,k) <= c * prod(1+|k_j|)^{-s_eff}.
double domination_constant(const WeightKind& kind, int d);

// --- weight domination -----------------------------------------------------

/// Result of checking a norm-one (or constant-c) embedding X -> Y pointwise:
/// weight_Y(k) <= constant * weight_X(k) for all |k|_inf <= radius.
struct DominationReport {
    std::string regime;
    double constant = 1.0;
    bool pass = true;
    std::uint64_t checked = 0;
    std::optional<IndexVector> counterexample;
    double worst_ratio = 0.0;  // max weight_Y / (constant * weight_X)
};

/// Regime label for an embedding pair, or nullopt when no known embedding covers it.
std::optional<std::pair<std::string, double>> embedding_regime(const WeightKind& from,
                                                               const WeightKind& to, int d);

/// Throws UnsupportedRegime for pairs without a known embedding.
DominationReport verify_weight_domination(const WeightKind& from, const WeightKind& to, int d,
                                          std::uint64_t sample_radius);

} // namespace crossnum
