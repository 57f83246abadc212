#include "crossnum/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace crossnum {

namespace {
std::atomic<std::uint64_t> g_override{0};

std::uint64_t env_limit() {
    const char* env = std::getenv("CROSSNUM_MAX_ENUM");
    if (env == nullptr || *env == '\0') return kDefaultMaxEnum;
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(env, &pos);
        if (pos != std::string(env).size() || v == 0) return kDefaultMaxEnum;
        return v;
    } catch (const std::exception&) {
        return kDefaultMaxEnum;
    }
}
} // namespace

std::uint64_t max_enumeration() {
    const auto o = g_override.load(std::memory_order_relaxed);
    return o != 0 ? o : env_limit();
}

void set_max_enumeration(std::uint64_t limit) { g_override.store(limit, std::memory_order_relaxed); }

void check_enumeration(double estimate, const std::string& what) {
    const auto limit = max_enumeration();
    if (!(estimate <= static_cast<double>(limit))) throw ResourceLimit(what, estimate, limit);
}

} // namespace crossnum
