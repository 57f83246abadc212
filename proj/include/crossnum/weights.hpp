#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace crossnum {

/// Which mixed-smoothness norm a weight belongs to.
///   Sharp:    prod (1+|k_j|)^s
///   Plus:     prod (1+|k_j|^2)^{s/2}
///   Star:     prod (1+|k_j|^{2s})^{1/2}
///   IntegerM: prod v_m(k_j),  v_m(l)^2 = sum_{a=0}^m |l|^{2a}
class WeightKind {
public:
    enum class Tag { Sharp, Plus, Star, IntegerM };

    static WeightKind sharp(double s);
    static WeightKind plus(double s);
    static WeightKind star(double s);
    static WeightKind integer_m(int m);

    Tag tag() const { return tag_; }
    /// Smoothness; for IntegerM this is m.
    double s() const { return s_; }
    int m() const { return m_; }

    /// Exponent of the (prod(1+|k_j|))^{-s_eff} envelope used for certification.
    double effective_smoothness() const { return tag_ == Tag::IntegerM ? m_ : s_; }

    /// Weight of a single coordinate.
    double factor(std::int64_t l) const;

    std::string name() const;  // "sharp", "plus", "star", "intm"
    std::string describe() const;  // e.g. "plus(s=1)"

    bool operator==(const WeightKind&) const = default;

private:
    WeightKind(Tag tag, double s, int m) : tag_(tag), s_(s), m_(m) {}

    Tag tag_ = Tag::Sharp;
    double s_ = 1.0;
    int m_ = 0;
};

/// Full weight prod_j factor(k_j); 0^0 = 1.
double weight(const WeightKind& kind, std::span<const std::int64_t> k);

/// 1 / weight.
double inverse_weight(const WeightKind& kind, std::span<const std::int64_t> k);

/// Parse "sharp" | "plus" | "star" | "intm" with smoothness/order.
WeightKind parse_weight_kind(const std::string& name, double s, int m);

} // namespace crossnum
