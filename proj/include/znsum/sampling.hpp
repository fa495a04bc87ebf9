#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "znsum/modulus.hpp"
#include "znsum/residue_set.hpp"

namespace znsum {

// Reproducible random sets. The engine is std::mt19937_64 (its output stream
// is pinned by the standard), bounded draws use rejection sampling on the raw
// 64-bit stream, and k-subsets come from a partial Fisher-Yates shuffle. Given
// the same seed and the same draw order, every implementation produces the
// same sets.
class SubsetSampler {
public:
    explicit SubsetSampler(std::uint64_t seed) : rng_(seed) {}

    // Uniform on [0, m); m >= 1.
    std::uint64_t bounded(std::uint64_t m) {
        if (m == 0) throw std::invalid_argument("bounded draw needs m >= 1");
        const std::uint64_t rem = (UINT64_MAX % m + 1) % m;  // 2^64 mod m
        std::uint64_t x = rng_();
        if (rem != 0) {
            const std::uint64_t limit = UINT64_MAX - rem;  // last unbiased value
            while (x > limit) x = rng_();
        }
        return x % m;
    }

    // Uniform on [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("empty integer range");
        return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform k-element subset of Z_n.
    ResidueSet k_subset(Modulus n, int k) {
        if (k < 0 || k > n.value())
            throw std::invalid_argument("subset size out of range");
        std::vector<int> pool(n.value());
        std::iota(pool.begin(), pool.end(), 0);
        ResidueSet out(n);
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(bounded(static_cast<std::uint64_t>(n.value() - i)));
            std::swap(pool[i], pool[j]);
            out.insert(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace znsum
