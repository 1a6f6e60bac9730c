#pragma once

#include <random>
#include <vector>

#include "tep/bigint.hpp"

namespace tep::testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline BigInt random_int(std::mt19937_64& rng, long lo, long hi) {
    return BigInt(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline std::vector<BigInt> random_ints(std::mt19937_64& rng, std::size_t count, long lo,
                                       long hi) {
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_int(rng, lo, hi));
    return out;
}

}  // namespace tep::testutil
