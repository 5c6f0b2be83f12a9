#include "ffdistlab/errors.hpp"

#include <cstdlib>

namespace ffd {

std::uint64_t rank_space_budget() {
    static const std::uint64_t value = [] {
        if (const char* s = std::getenv("FFDISTLAB_BUDGET")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(10'000'000);
    }();
    return value;
}

} // namespace ffd
