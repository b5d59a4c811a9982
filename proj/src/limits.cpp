#include "tau4/limits.hpp"

#include <cstdlib>
#include <string>

namespace tau4::limits {
namespace {

int env_or(const char* name, int fallback, int hard_cap) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 0) return fallback;
    return n > hard_cap ? hard_cap : static_cast<int>(n);
}

}  // namespace

int enhanced_dim() { return env_or("TAU4_MAX_ENHANCED_DIM", 24, 40); }
int components() { return env_or("TAU4_MAX_COMPONENTS", 24, 40); }
int crossings() { return env_or("TAU4_MAX_CROSSINGS", 40, 400); }
int count_vars() { return env_or("TAU4_MAX_COUNT_VARS", 26, 40); }

}  // namespace tau4::limits
