#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "frob/instance.hpp"
#include "frob/numeric.hpp"

namespace frob::testing {

// Independent counting oracle: plain recursion over the generators, no
// table. Only suitable for small n.
inline std::uint64_t naive_count(const std::vector<std::uint64_t>& gens,
                                 std::size_t i, std::uint64_t n) {
    if (i + 1 == gens.size()) return n % gens[i] == 0 ? 1 : 0;
    std::uint64_t total = 0;
    for (std::uint64_t used = 0; used <= n; used += gens[i])
        total += naive_count(gens, i + 1, n - used);
    return total;
}

inline std::uint64_t naive_count(const std::vector<std::uint64_t>& gens,
                                 std::uint64_t n) {
    return naive_count(gens, 0, n);
}

/// Random gcd-1 strictly increasing tuple, k generators in [lo, hi].
inline Instance random_instance(std::mt19937_64& rng, std::size_t k,
                                std::uint64_t lo, std::uint64_t hi) {
    std::uniform_int_distribution<std::uint64_t> pick(lo, hi);
    for (;;) {
        std::vector<std::uint64_t> gens;
        while (gens.size() < k) {
            std::uint64_t g = pick(rng);
            bool dup = false;
            for (auto x : gens) dup = dup || x == g;
            if (!dup) gens.push_back(g);
        }
        std::sort(gens.begin(), gens.end());
        std::uint64_t g = gens[0];
        for (auto x : gens) g = std::gcd(g, x);
        if (g == 1) return Instance(gens);
    }
}

}  // namespace frob::testing
