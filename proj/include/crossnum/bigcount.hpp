#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossnum {

/// Arbitrary-precision nonnegative counter used for all lattice counts.
using BigCount = boost::multiprecision::cpp_int;

/// Decimal rendering, used by every JSON/CSV export.
inline std::string to_decimal(const BigCount& v) { return v.str(); }

BigCount parse_decimal(const std::string& text);

/// Natural logarithm of a positive big integer, accurate to double precision.
double log_big(const BigCount& v);

/// Nearest double (may be +inf for astronomically large values).
double to_double(const BigCount& v);

/// Binomial coefficient via the multiplicative recurrence
/// C(n,k) = C(n,k-1) * (n-k+1) / k, which stays exact at every step.
BigCount binomial(std::uint64_t n, std::uint64_t k);

BigCount pow_big(std::uint64_t base, std::uint64_t exponent);

} // namespace crossnum
