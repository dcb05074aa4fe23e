#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hnp/groebner.hpp"
#include "hnp/rng.hpp"

namespace testutil {

using hnp::Fp;
using hnp::Integer;
using hnp::Monomial;
using hnp::Polynomial;

inline Polynomial<Fp> random_fp_poly(hnp::RandomStream& rng, std::uint64_t p, unsigned vars,
                                     unsigned max_deg, unsigned terms) {
    Polynomial<Fp> f;
    for (unsigned t = 0; t < terms; ++t) {
        Monomial mo;
        unsigned budget = max_deg;
        for (unsigned v = 0; v < vars; ++v) {
            unsigned e = static_cast<unsigned>(rng.below(budget + 1));
            budget -= e;
            mo = mo * Monomial::var(v, e);
        }
        f.add_term(mo, Fp(rng.below(p), p));
    }
    return f;
}

inline std::vector<Monomial> monomials_up_to(unsigned vars, unsigned deg) {
    std::vector<Monomial> out{Monomial::one()};
    for (unsigned d = 1; d <= deg; ++d) {
        std::vector<unsigned> e(vars, 0);
        // enumerate all exponent vectors of total degree exactly d
        std::function<void(unsigned, unsigned, Monomial)> rec = [&](unsigned v, unsigned left,
                                                                    Monomial acc) {
            if (v + 1 == vars) {
                out.push_back(acc * Monomial::var(v, left));
                return;
            }
            for (unsigned i = 0; i <= left; ++i)
                rec(v + 1, left - i, acc * Monomial::var(v, i));
        };
        rec(0, d, Monomial::one());
    }
    return out;
}

// Every S-polynomial of the basis reduces to zero.
inline bool spolys_reduce_to_zero(const hnp::GroebnerBasis<Fp>& g) {
    const auto& b = g.generators;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            auto [mi, ci] = b[i].leading_term(g.order);
            auto [mj, cj] = b[j].leading_term(g.order);
            Monomial l = lcm(mi, mj);
            Polynomial<Fp> s =
                b[i].times_monomial(l.divide_by(mi), ci.inverse()) -
                b[j].times_monomial(l.divide_by(mj), cj.inverse());
            if (!normal_form(s, g).is_zero()) return false;
        }
    return true;
}

// Membership up to total degree `deg` agrees between normal-form reduction and
// a brute-force row space of basis multiples (exact for graded orders, where
// reduction never raises the degree).
inline bool membership_matches_bruteforce(const hnp::GroebnerBasis<Fp>& g, std::uint64_t p,
                                          unsigned vars, unsigned deg, hnp::RandomStream& rng,
                                          unsigned probes) {
    std::vector<Monomial> cols = monomials_up_to(vars, deg);
    auto col_of = [&](const Monomial& mo) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (cols[i] == mo) return i;
        return cols.size();
    };
    // rows: m * b for every basis element b and monomial m with deg(m*b) <= deg
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& b : g.generators) {
        if (b.is_zero()) continue;
        Integer db = b.total_degree().finite();
        for (const auto& m : cols) {
            if (m.total_degree() + db > deg) continue;
            Polynomial<Fp> prod = b.times_monomial(m, Fp(1, p));
            std::vector<std::uint64_t> row(cols.size(), 0);
            for (const auto& [mo, c] : prod.terms()) row[col_of(mo)] = c.v;
            rows.push_back(std::move(row));
        }
    }
    // row echelon over F_p
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Fp inv = Fp(rows[rank][col], p).inverse();
        for (auto& x : rows[rank]) x = (Fp(x, p) * inv).v;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Fp factor(rows[r][col], p);
            for (std::size_t cix = 0; cix < cols.size(); ++cix)
                rows[r][cix] = (Fp(rows[r][cix], p) - factor * Fp(rows[rank][cix], p)).v;
        }
        ++rank;
    }
    rows.resize(rank);

    auto in_span = [&](const Polynomial<Fp>& h) {
        std::vector<std::uint64_t> v(cols.size(), 0);
        for (const auto& [mo, c] : h.terms()) v[col_of(mo)] = c.v;
        for (const auto& row : rows) {
            std::size_t lead = 0;
            while (lead < cols.size() && row[lead] == 0) ++lead;
            if (lead == cols.size() || v[lead] == 0) continue;
            Fp factor(v[lead], p);
            for (std::size_t i = 0; i < cols.size(); ++i)
                v[i] = (Fp(v[i], p) - factor * Fp(row[i], p)).v;
        }
        for (auto x : v)
            if (x != 0) return false;
        return true;
    };

    for (unsigned t = 0; t < probes; ++t) {
        Polynomial<Fp> h = random_fp_poly(rng, p, vars, deg, 4);
        if (in_span(h) != normal_form(h, g).is_zero()) return false;
    }
    // membership must also hold for explicit combinations of the basis
    for (unsigned t = 0; t < 2; ++t) {
        Polynomial<Fp> h;
        for (const auto& b : g.generators) {
            Monomial m;
            if (b.total_degree().finite() < deg)
                m = Monomial::var(static_cast<unsigned>(rng.below(vars)), 1);
            Polynomial<Fp> prod = b.times_monomial(m, Fp(rng.below(p), p));
            if (!(prod.total_degree() <= hnp::Degree(Integer(deg)))) continue;
            h = h + prod;
        }
        if (!h.is_zero() && !normal_form(h, g).is_zero()) return false;
    }
    return true;
}

}  // namespace testutil
