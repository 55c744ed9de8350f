#pragma once

#include <cstdlib>
#include <random>
#include <string>

namespace csl {

/// Seed for all randomized property tests. Overridable via CSL_SEED so that
/// failing runs can be replayed exactly.
inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("CSL_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0x5eed0c5172u;
}

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(default_seed() ^ (salt * 0x9e3779b97f4a7c15ull));
}

}  // namespace csl
