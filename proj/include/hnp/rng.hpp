#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hnp/scalar.hpp"

namespace hnp {

// Deterministic random stream; trial streams are derived from (seed, index)
// so concurrent trials never share state.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t index = 0)
        : eng_(mix(seed, index)) {}

    std::uint64_t next_word() { return eng_(); }

    // uniform in [0, n) by rejection on fixed-width words
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("empty range");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t w;
        do {
            w = eng_();
        } while (w >= limit);
        return w % n;
    }

    // uniform in {1..D} for arbitrary-precision D, by rejection sampling on
    // fixed-width bit blocks
    Integer uniform_1_to(const Integer& d) {
        if (d < 1) throw std::invalid_argument("D must be >= 1");
        if (d == 1) return 1;
        std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
        while (true) {
            Integer v = 0;
            std::size_t got = 0;
            while (got < bits) {
                std::uint64_t w = eng_();
                std::size_t take = std::min<std::size_t>(64, bits - got);
                if (take < 64) w &= (1ull << take) - 1;
                v <<= static_cast<unsigned long>(take);
                Integer chunk = Integer(static_cast<unsigned long>(w >> 32)) << 32;
                chunk += static_cast<unsigned long>(w & 0xFFFFFFFFull);
                v += chunk;
                got += take;
            }
            if (v < d) return v + 1;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 finalizer over the pair
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

}  // namespace hnp
