#include "hnp/modp.hpp"

#include <algorithm>
#include <set>

namespace hnp {

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi; ++p)
        if (is_prime(Integer(static_cast<unsigned long>(p)))) out.push_back(p);
    return out;
}

namespace {

// Satisfiability over F_p itself (not its closure): the field equations
// y^p - y restrict the variety to the rational points, after which the unit
// ideal test applies.
Sat decide_over_fp(const std::vector<Polynomial<Integer>>& polys, std::uint64_t p,
                   const Budget& budget) {
    std::vector<Polynomial<Fp>> reduced;
    reduced.reserve(polys.size());
    std::set<unsigned> vars;
    for (const auto& f : polys) {
        reduced.push_back(reduce_mod_p(f, p));
        for (const auto& [mo, c] : f.terms())
            for (const auto& [v, e] : mo.exps) vars.insert(v);
    }
    for (unsigned v : vars)
        reduced.push_back(Polynomial<Fp>::term(Monomial::var(v, Integer(static_cast<unsigned long>(p))), Fp(1, p)) -
                          Polynomial<Fp>::term(Monomial::var(v), Fp(1, p)));
    return hn_decide(reduced, budget);
}

}  // namespace

ModpReport hn_decide_modp(const std::vector<Polynomial<Integer>>& polys,
                          const PrimeSamplerConfig& cfg, const Budget& budget) {
    cfg.validate();
    std::vector<std::uint64_t> primes = primes_in_range(cfg.prime_lo, cfg.prime_hi);
    if (primes.size() < cfg.sample_count)
        throw std::invalid_argument("range contains fewer primes than sample_count");

    // sample without replacement (exhaustive when the range is exactly covered)
    std::vector<std::uint64_t> chosen;
    if (primes.size() == cfg.sample_count) {
        chosen = primes;
    } else {
        RandomStream rng(cfg.seed);
        for (std::size_t i = 0; i < cfg.sample_count; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.below(primes.size() - i));
            std::swap(primes[i], primes[j]);
            chosen.push_back(primes[i]);
        }
        std::sort(chosen.begin(), chosen.end());
    }

    ModpReport rep;
    std::size_t sat = 0;
    for (std::uint64_t p : chosen) {
        Sat a = decide_over_fp(polys, p, budget);
        if (a == Sat::SAT) ++sat;
        rep.per_prime.emplace_back(p, a);
    }
    rep.density = make_rational(Integer(static_cast<unsigned long>(sat)),
                                Integer(static_cast<unsigned long>(chosen.size())));
    rep.answer = rep.density >= cfg.tau ? Sat::SAT : Sat::UNSAT;
    return rep;
}

std::vector<std::pair<std::uint64_t, Sat>> prime_density_report(
    const std::vector<Polynomial<Integer>>& polys, std::uint64_t lo, std::uint64_t hi,
    const Budget& budget) {
    std::vector<std::pair<std::uint64_t, Sat>> out;
    for (std::uint64_t p : primes_in_range(lo, hi))
        out.emplace_back(p, decide_over_fp(polys, p, budget));
    return out;
}

}  // namespace hnp
