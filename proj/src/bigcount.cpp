#include "crossnum/bigcount.hpp"

#include <cmath>
#include <limits>

#include "crossnum/errors.hpp"

namespace crossnum {

BigCount parse_decimal(const std::string& text) {
    if (text.empty()) throw InvalidArgument("empty integer");
    for (char c : text)
        if (c < '0' || c > '9') throw InvalidArgument("not a nonnegative integer: " + text);
    return BigCount(text);
}

double log_big(const BigCount& v) {
    if (v <= 0) throw InvalidArgument("log of nonpositive count");
    const auto bits = boost::multiprecision::msb(v);
    if (bits < 1000) return std::log(v.convert_to<double>());
    // keep the top 64 bits and rescale
    const unsigned shift = static_cast<unsigned>(bits - 63);
    BigCount top = v >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double to_double(const BigCount& v) { return v.convert_to<double>(); }

BigCount binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c *= (n - k + i);
        c /= i;
    }
    return c;
}

BigCount pow_big(std::uint64_t base, std::uint64_t exponent) {
    return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exponent));
}

} // namespace crossnum
