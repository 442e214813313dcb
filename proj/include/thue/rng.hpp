#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace thue::detail {

// uniform_int_distribution is implementation-defined; this rejection sampler
// keeps seeded runs identical across standard libraries
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0)
        return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / bound * bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace thue::detail
