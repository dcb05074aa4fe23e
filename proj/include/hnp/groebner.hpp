#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hnp/system.hpp"

namespace hnp {

enum class Sat { SAT, UNSAT };
inline const char* to_cstring(Sat s) { return s == Sat::SAT ? "SAT" : "UNSAT"; }

// Resource caps.  Exceeding a cap is a first-class outcome (BudgetExceeded),
// never a wrong answer.
struct Budget {
    std::size_t max_basis = 4096;
    std::size_t max_terms = 500000;        // per-polynomial term cap
    std::size_t max_reductions = 20000000;  // total reduction steps
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& cap)
        : std::runtime_error("budget exceeded: " + cap) {}
};

template <class F>
struct GroebnerBasis {
    std::vector<Polynomial<F>> generators;
    MonomialOrder order;
    // cofactors[i][j]: generators[i] = sum_j cofactors[i][j] * input[j]
    std::optional<std::vector<std::vector<Polynomial<F>>>> cofactors;
};

namespace detail {

template <class F>
struct TrackedPoly {
    Polynomial<F> p;
    std::vector<Polynomial<F>> cof;  // empty when not tracking
};

// Full reduction of h modulo the polys in basis (tracking optional).  Every
// subtraction counts against the reduction budget.
template <class F>
TrackedPoly<F> reduce_tracked(TrackedPoly<F> h, const std::vector<TrackedPoly<F>>& basis,
                              const MonomialOrder& order, bool track, const Budget& budget,
                              std::size_t& reductions) {
    TrackedPoly<F> rem;
    if (track) rem.cof.resize(h.cof.size());
    while (!h.p.is_zero()) {
        auto [hm, hc] = h.p.leading_term(order);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.p.is_zero()) continue;
            auto [gm, gc] = g.p.leading_term(order);
            if (!gm.divides(hm)) continue;
            if (++reductions > budget.max_reductions) throw BudgetExceeded("reductions");
            Monomial q = hm.divide_by(gm);
            F c = coeff_exact_div(hc, gc);
            h.p = h.p - g.p.times_monomial(q, c);
            if (h.p.term_count() > budget.max_terms) throw BudgetExceeded("terms");
            if (track)
                for (std::size_t j = 0; j < h.cof.size(); ++j)
                    h.cof[j] = h.cof[j] - g.cof[j].times_monomial(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.p.add_term(hm, hc);
            h.p.add_term(hm, -hc);
        }
    }
    if (track) rem.cof = std::move(h.cof);
    return rem;
}

}  // namespace detail

// Buchberger with the normal pair-selection strategy, coprime-leading-term and
// chain criteria, returning the reduced basis.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const MonomialOrder& order,
                            bool track_cofactors = false, const Budget& budget = Budget{}) {
    using TP = detail::TrackedPoly<F>;
    const std::size_t k = gens.size();
    std::size_t reductions = 0;

    std::vector<TP> basis;
    for (std::size_t j = 0; j < k; ++j) {
        if (gens[j].is_zero()) continue;
        TP t;
        t.p = gens[j];
        if (track_cofactors) {
            t.cof.resize(k);
            t.cof[j] = Polynomial<F>(coeff_one(gens[j].leading_term_canonical().second));
        }
        basis.push_back(std::move(t));
    }

    struct Pair {
        std::size_t i, j;
        Monomial l;
        Integer deg;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs = [&](std::size_t idx) {
        for (std::size_t i = 0; i < idx; ++i) {
            Monomial l = lcm(basis[i].p.leading_term(order).first,
                             basis[idx].p.leading_term(order).first);
            pairs.push_back({i, idx, l, l.total_degree()});
        }
    };
    for (std::size_t i = 0; i < basis.size(); ++i) push_pairs(i);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree first
        auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        });
        Pair pr = *best;
        pairs.erase(best);
        handled.insert({pr.i, pr.j});

        auto [mi, ci] = basis[pr.i].p.leading_term(order);
        auto [mj, cj] = basis[pr.j].p.leading_term(order);
        if (mi.coprime_with(mj)) continue;  // first Buchberger criterion
        // chain criterion
        bool chained = false;
        for (std::size_t l = 0; l < basis.size() && !chained; ++l) {
            if (l == pr.i || l == pr.j) continue;
            if (!basis[l].p.leading_term(order).first.divides(pr.l)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(pr.i, l)) && handled.count(key(pr.j, l))) chained = true;
        }
        if (chained) continue;

        // S-polynomial with cofactors
        Monomial ui = pr.l.divide_by(mi), uj = pr.l.divide_by(mj);
        TP s;
        s.p = basis[pr.i].p.times_monomial(ui, coeff_exact_div(coeff_one(ci), ci)) -
              basis[pr.j].p.times_monomial(uj, coeff_exact_div(coeff_one(cj), cj));
        if (track_cofactors) {
            s.cof.resize(k);
            for (std::size_t t = 0; t < k; ++t)
                s.cof[t] =
                    basis[pr.i].cof[t].times_monomial(ui, coeff_exact_div(coeff_one(ci), ci)) -
                    basis[pr.j].cof[t].times_monomial(uj, coeff_exact_div(coeff_one(cj), cj));
        }
        TP r = detail::reduce_tracked(std::move(s), basis, order, track_cofactors, budget,
                                      reductions);
        if (r.p.is_zero()) continue;
        basis.push_back(std::move(r));
        if (basis.size() > budget.max_basis) throw BudgetExceeded("basis size");
        push_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        Monomial mi = basis[i].p.leading_term(order).first;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            Monomial mj = basis[j].p.leading_term(order).first;
            if (mj.divides(mi) && !(mi == mj && j > i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<TP> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // inter-reduce tails and make monic
    GroebnerBasis<F> out;
    out.order = order;
    if (track_cofactors) out.cofactors.emplace();
    std::vector<TP> reduced = minimal;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<TP> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        TP r = detail::reduce_tracked(reduced[i], others, order, track_cofactors, budget,
                                      reductions);
        F lc = r.p.leading_term(order).second;
        F inv = coeff_exact_div(coeff_one(lc), lc);
        r.p = r.p.scaled(inv);
        if (track_cofactors)
            for (auto& c : r.cof) c = c.scaled(inv);
        reduced[i] = std::move(r);
    }
    // deterministic output order: by leading monomial, ascending
    std::sort(reduced.begin(), reduced.end(), [&](const TP& a, const TP& b) {
        return order.less(a.p.leading_term(order).first, b.p.leading_term(order).first);
    });
    for (auto& t : reduced) {
        out.generators.push_back(std::move(t.p));
        if (track_cofactors) out.cofactors->push_back(std::move(t.cof));
    }
    return out;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& g,
                          const Budget& budget = Budget{}) {
    std::vector<detail::TrackedPoly<F>> basis;
    for (const auto& p : g.generators) basis.push_back({p, {}});
    std::size_t reductions = 0;
    return detail::reduce_tracked<F>({f, {}}, basis, g.order, false, budget, reductions).p;
}

// Unit-ideal test: UNSAT iff the reduced basis is {1} (weak Nullstellensatz).
template <class F>
Sat hn_decide(const std::vector<Polynomial<F>>& polys, const Budget& budget = Budget{}) {
    GroebnerBasis<F> g = buchberger(polys, MonomialOrder::grevlex(), false, budget);
    for (const auto& p : g.generators)
        if (p.is_constant() && !p.is_zero()) return Sat::UNSAT;
    return Sat::SAT;
}

inline Sat hn_decide_integer(const std::vector<Polynomial<Integer>>& polys,
                             const Budget& budget = Budget{}) {
    std::vector<Polynomial<Rational>> q;
    q.reserve(polys.size());
    for (const auto& p : polys) q.push_back(to_rational(p));
    return hn_decide(q, budget);
}

struct EliminationResult {
    Sat answer;
    std::optional<Polynomial<Rational>> witness_a;  // pure-x, monic; present iff UNSAT
};

// Deterministic HNP oracle: flatten to Q[x,y] with the block order eliminating
// y; SAT iff no reduced-basis element lies purely in the parameters.
inline EliminationResult hnp_decide_elimination(const PolynomialSystem& s,
                                                const Budget& budget = Budget{}) {
    std::vector<Polynomial<Rational>> gens;
    gens.reserve(s.polys.size());
    for (const auto& p : s.polys) gens.push_back(to_rational(p));
    MonomialOrder order = MonomialOrder::elim_y(s.m);
    GroebnerBasis<Rational> g = buchberger(gens, order, false, budget);
    std::optional<Polynomial<Rational>> best;
    for (const auto& p : g.generators) {
        if (p.is_zero()) continue;
        if (p.block_degree(s.m, ~0u) == Degree(Integer(0))) {
            // pure-x element; keep the one with minimal leading term
            if (!best ||
                order.less(p.leading_term(order).first, best->leading_term(order).first))
                best = p;
        }
    }
    if (best) return {Sat::UNSAT, best};
    return {Sat::SAT, std::nullopt};
}

}  // namespace hnp
