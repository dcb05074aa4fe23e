#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hnp/certificate.hpp"
#include "hnp/groebner.hpp"
#include "hnp/modp.hpp"
#include "hnp/rng.hpp"
#include "hnp/system.hpp"

namespace hnp {

// D = 3 * 2^ceil((s*log2 s)^c); D = 3 for s <= 1
Integer compute_D(unsigned long s, unsigned long c);

enum class OracleKind { Groebner, Modp };

struct ReductionConfig {
    std::optional<Integer> explicit_D;    // set => explicit mode
    unsigned long paper_c = 1;            // used when explicit_D is empty
    std::size_t trials = 5;
    std::size_t amplification = 4;        // modp oracle repetitions
    OracleKind oracle = OracleKind::Groebner;
    std::uint64_t seed = 0;
    PrimeSamplerConfig modp;              // seed field is overridden per run
    Budget budget;

    Integer effective_D(const PolynomialSystem& s) const {
        if (explicit_D) {
            if (*explicit_D < 1) throw std::invalid_argument("D must be >= 1");
            return *explicit_D;
        }
        return compute_D(size_measure(s), paper_c);
    }
};

struct TrialRecord {
    std::vector<Integer> alpha;
    std::optional<Sat> answer;  // empty when the oracle ran out of budget
    bool budget_exceeded = false;
};

struct DecisionTranscript {
    std::vector<TrialRecord> trials;
    Sat final_answer = Sat::UNSAT;
    std::size_t usable_trials = 0;
    Integer D;
    std::uint64_t seed = 0;
    OracleKind oracle = OracleKind::Groebner;
};

std::vector<Integer> sample_alpha(unsigned m, const Integer& D, RandomStream& rng);

// Randomized HNP -> HN reduction: specialize at uniform alpha in {1..D}^m and
// take the majority over trials (ties resolve to UNSAT).
DecisionTranscript hnp_decide_randomized(const PolynomialSystem& s, const ReductionConfig& cfg);

struct EquisatReport {
    Sat parametric_answer = Sat::UNSAT;
    std::size_t total = 0;       // specializations attempted
    std::size_t sat_count = 0;
    std::size_t skipped = 0;     // budget-exceeded specializations
    Rational sat_fraction = 0;
    Rational unsat_bound = 0;             // s * 2^s / D
    std::optional<Rational> exact_bound;  // deg(a) / D when a certificate exists
    std::optional<Rational> sat_bound;    // 1 - 2^((s log s)^c) / D in paper mode
    bool bound_holds = true;
    bool exhaustive = false;
};

// Empirical equisatisfiability: sat fraction over alpha in {1..D}^m versus the
// applicable bound.  Exhaustive mode enumerates the whole cube.
EquisatReport equisat_experiment(const PolynomialSystem& s, const Integer& D, std::size_t trials,
                                 std::uint64_t seed, bool exhaustive = false,
                                 std::optional<unsigned long> paper_c = std::nullopt,
                                 const Budget& budget = Budget{});

struct IdentityLemmaReport {
    Rational zero_fraction = 0;
    Rational bound = 0;  // deg(f) / |S|
    bool holds = true;
    std::size_t points = 0;
    bool exhaustive = false;
};

// Pr(f(r) = 0) for r uniform in {lo..hi}^vars versus the deg/|S| bound.
// Sampled mode allows three binomial standard deviations of slack.
IdentityLemmaReport identity_lemma_check(const Polynomial<Integer>& f, const Integer& lo,
                                         const Integer& hi, bool exhaustive,
                                         std::size_t trials = 100000, std::uint64_t seed = 0,
                                         std::size_t max_points = 2000000);

}  // namespace hnp
