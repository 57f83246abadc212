#include "crossnum/weights.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "crossnum/errors.hpp"

namespace crossnum {

namespace {
void require_positive(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("smoothness must be positive and finite");
}
} // namespace

WeightKind WeightKind::sharp(double s) { require_positive(s); return {Tag::Sharp, s, 0}; }
WeightKind WeightKind::plus(double s) { require_positive(s); return {Tag::Plus, s, 0}; }
WeightKind WeightKind::star(double s) { require_positive(s); return {Tag::Star, s, 0}; }

WeightKind WeightKind::integer_m(int m) {
    if (m < 1) throw InvalidArgument("integer smoothness m must be >= 1");
    return {Tag::IntegerM, static_cast<double>(m), m};
}

double WeightKind::factor(std::int64_t l) const {
    const double a = static_cast<double>(l < 0 ? -l : l);
    switch (tag_) {
    case Tag::Sharp:
        return std::pow(1.0 + a, s_);
    case Tag::Plus:
        // (1+l^2)^{s/2} written as sqrt(1+l^2)^s so that s = 1 is bit-identical
        // to the star and integer-m weights it coincides with.
        return std::pow(std::sqrt(1.0 + a * a), s_);
    case Tag::Star:
        return std::sqrt(1.0 + std::pow(a, 2.0 * s_));
    case Tag::IntegerM: {
        double sum = 1.0, term = 1.0;
        const double a2 = a * a;
        for (int i = 1; i <= m_; ++i) {
            term *= a2;
            sum += term;
        }
        return std::sqrt(sum);
    }
    }
    return 1.0;
}

std::string WeightKind::name() const {
    switch (tag_) {
    case Tag::Sharp: return "sharp";
    case Tag::Plus: return "plus";
    case Tag::Star: return "star";
    case Tag::IntegerM: return "intm";
    }
    return "?";
}

std::string WeightKind::describe() const {
    std::ostringstream os;
    if (tag_ == Tag::IntegerM)
        os << name() << "(m=" << m_ << ")";
    else
        os << name() << "(s=" << s_ << ")";
    return os.str();
}

double weight(const WeightKind& kind, std::span<const std::int64_t> k) {
    double w = 1.0;
    for (auto kj : k)
        if (kj != 0) w *= kind.factor(kj);
    return w;
}

double inverse_weight(const WeightKind& kind, std::span<const std::int64_t> k) {
    return 1.0 / weight(kind, k);
}

WeightKind parse_weight_kind(const std::string& name, double s, int m) {
    if (name == "sharp") return WeightKind::sharp(s);
    if (name == "plus") return WeightKind::plus(s);
    if (name == "star") return WeightKind::star(s);
    if (name == "intm") return WeightKind::integer_m(m);
    throw InvalidArgument("unknown weight kind '" + name + "' (expected sharp, plus, star, intm)");
}

} // namespace crossnum
