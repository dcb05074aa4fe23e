#pragma once

#include <cstdint>
#include <vector>

#include "hnp/groebner.hpp"
#include "hnp/rng.hpp"

namespace hnp {

struct PrimeSamplerConfig {
    std::uint64_t prime_lo = 2;
    std::uint64_t prime_hi = 500;
    std::size_t sample_count = 25;
    Rational tau = Rational(1, 5);  // density threshold, strictly in (0,1)
    std::uint64_t seed = 0;

    void validate() const {
        if (prime_lo < 2) throw std::invalid_argument("prime range must start at >= 2");
        if (sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
        if (!(tau > 0 && tau < 1)) throw std::invalid_argument("tau must lie strictly in (0,1)");
    }
};

struct ModpReport {
    Sat answer = Sat::UNSAT;
    Rational density = 0;
    std::vector<std::pair<std::uint64_t, Sat>> per_prime;  // ordered by prime
    bool heuristic = true;  // this oracle carries no soundness theorem at desk scale
};

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Heuristic HN oracle: sample distinct primes from the range, decide each
// F_p system with the Groebner engine, and threshold the SAT density at tau.
ModpReport hn_decide_modp(const std::vector<Polynomial<Integer>>& polys,
                          const PrimeSamplerConfig& cfg, const Budget& budget = Budget{});

// exhaustive per-prime table over the range
std::vector<std::pair<std::uint64_t, Sat>> prime_density_report(
    const std::vector<Polynomial<Integer>>& polys, std::uint64_t lo, std::uint64_t hi,
    const Budget& budget = Budget{});

}  // namespace hnp
