#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crossnum {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed the configured point budget.
/// Carries the estimate that tripped the guard so callers can report it.
class ResourceLimit : public std::runtime_error {
public:
    ResourceLimit(const std::string& what, double estimate, std::uint64_t limit)
        : std::runtime_error(what + " (estimated " + std::to_string(estimate) +
                             " points, limit " + std::to_string(limit) + ")"),
          estimate_(estimate), limit_(limit) {}

    double estimate() const noexcept { return estimate_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    double estimate_;
    std::uint64_t limit_;
};

class UnsupportedRegime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Default enumeration budget, 10^8 points.
inline constexpr std::uint64_t kDefaultMaxEnum = 100'000'000ULL;

/// Current enumeration budget: an explicit override if set, else the
/// CROSSNUM_MAX_ENUM environment variable, else kDefaultMaxEnum.
std::uint64_t max_enumeration();

/// Process-wide override (0 clears it). Thread-safe.
void set_max_enumeration(std::uint64_t limit);

/// Throws ResourceLimit when `estimate` exceeds the current budget.
void check_enumeration(double estimate, const std::string& what);

} // namespace crossnum
