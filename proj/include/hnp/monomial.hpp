#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hnp/scalar.hpp"

namespace hnp {

// Degree with a distinguished minus-infinity value (degree of the zero
// polynomial), so max-based degree formulas stay correct.
struct Degree {
    bool minus_inf = true;
    Integer value = 0;

    Degree() = default;
    Degree(Integer v) : minus_inf(false), value(std::move(v)) {}
    static Degree neg_infinity() { return Degree(); }

    bool is_finite() const { return !minus_inf; }
    // finite value; throws on -inf
    const Integer& finite() const {
        if (minus_inf) throw std::domain_error("degree of zero polynomial");
        return value;
    }

    friend bool operator==(const Degree& a, const Degree& b) {
        if (a.minus_inf || b.minus_inf) return a.minus_inf == b.minus_inf;
        return a.value == b.value;
    }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (a.minus_inf) return !b.minus_inf;
        if (b.minus_inf) return false;
        return a.value < b.value;
    }
    friend bool operator<=(const Degree& a, const Degree& b) { return a < b || a == b; }
    friend Degree max(const Degree& a, const Degree& b) { return a < b ? b : a; }
};

// Sparse exponent vector: (variable index, positive exponent) pairs sorted by
// variable index.  Exponents are arbitrary-precision: inputs may carry
// binary-encoded powers that only normalization brings down to <= 2.
struct Monomial {
    std::vector<std::pair<unsigned, Integer>> exps;

    static Monomial one() { return Monomial{}; }
    static Monomial var(unsigned index, Integer e = 1) {
        Monomial mo;
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e > 0) mo.exps.emplace_back(index, std::move(e));
        return mo;
    }

    bool is_one() const { return exps.empty(); }

    Integer exponent(unsigned index) const {
        for (const auto& [v, e] : exps)
            if (v == index) return e;
        return 0;
    }

    Integer total_degree() const {
        Integer d = 0;
        for (const auto& [v, e] : exps) d += e;
        return d;
    }

    // degree restricted to variable indices in [lo, hi)
    Integer block_degree(unsigned lo, unsigned hi) const {
        Integer d = 0;
        for (const auto& [v, e] : exps)
            if (v >= lo && v < hi) d += e;
        return d;
    }

    unsigned max_var_index() const {
        unsigned mx = 0;
        for (const auto& [v, e] : exps) mx = std::max(mx, v + 1);
        return mx;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto ia = a.exps.begin(), ib = b.exps.begin();
        while (ia != a.exps.end() || ib != b.exps.end()) {
            if (ib == b.exps.end() || (ia != a.exps.end() && ia->first < ib->first))
                r.exps.push_back(*ia++);
            else if (ia == a.exps.end() || ib->first < ia->first)
                r.exps.push_back(*ib++);
            else {
                r.exps.emplace_back(ia->first, ia->second + ib->second);
                ++ia, ++ib;
            }
        }
        return r;
    }

    bool divides(const Monomial& other) const {
        for (const auto& [v, e] : exps)
            if (other.exponent(v) < e) return false;
        return true;
    }

    // this / other; requires other.divides(*this)
    Monomial divide_by(const Monomial& other) const {
        Monomial r;
        for (const auto& [v, e] : exps) {
            Integer d = e - other.exponent(v);
            if (d < 0) throw std::domain_error("monomial division not exact");
            if (d > 0) r.exps.emplace_back(v, d);
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto ia = a.exps.begin(), ib = b.exps.begin();
        while (ia != a.exps.end() || ib != b.exps.end()) {
            if (ib == b.exps.end() || (ia != a.exps.end() && ia->first < ib->first))
                r.exps.push_back(*ia++);
            else if (ia == a.exps.end() || ib->first < ia->first)
                r.exps.push_back(*ib++);
            else {
                r.exps.emplace_back(ia->first, std::max(ia->second, ib->second));
                ++ia, ++ib;
            }
        }
        return r;
    }

    bool coprime_with(const Monomial& b) const {
        for (const auto& [v, e] : exps)
            if (b.exponent(v) > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

namespace detail {
// lex on full exponent vectors, lower variable index more significant
inline int lex_compare(const Monomial& a, const Monomial& b) {
    auto ia = a.exps.begin(), ib = b.exps.begin();
    while (ia != a.exps.end() && ib != b.exps.end()) {
        if (ia->first != ib->first)
            return ia->first < ib->first ? 1 : -1;  // extra variable present wins
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    if (ia != a.exps.end()) return 1;
    if (ib != b.exps.end()) return -1;
    return 0;
}

// graded reverse lex restricted to [lo, hi)
inline int grevlex_block_compare(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
    Integer da = a.block_degree(lo, hi), db = b.block_degree(lo, hi);
    if (da != db) return da > db ? 1 : -1;
    // ties: scan variables from hi-1 downwards; smaller exponent in the last
    // differing variable is greater
    auto ia = a.exps.rbegin(), ib = b.exps.rbegin();
    auto skip = [&](auto& it, const auto& end) {
        while (it != end && !(it->first >= lo && it->first < hi)) ++it;
    };
    skip(ia, a.exps.rend());
    skip(ib, b.exps.rend());
    while (ia != a.exps.rend() && ib != b.exps.rend()) {
        if (ia->first != ib->first) return ia->first > ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia, ++ib;
        skip(ia, a.exps.rend());
        skip(ib, b.exps.rend());
    }
    if (ia != a.exps.rend()) return -1;
    if (ib != b.exps.rend()) return 1;
    return 0;
}
}  // namespace detail

// Canonical order used for term maps and serialization: graded lex over the
// whole index space (parameter block first, then variable block).
inline int canonical_compare(const Monomial& a, const Monomial& b) {
    Integer da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    return detail::lex_compare(a, b);
}

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b) < 0;
    }
};

// Monomial orders for the Groebner engine.  ElimY is the block order that
// eliminates the y-block (indices >= split): any monomial containing a
// y-variable ranks above every pure-x monomial.
struct MonomialOrder {
    enum class Kind { Lex, GrevLex, ElimY } kind = Kind::GrevLex;
    unsigned split = 0;  // x-block is [0, split), y-block is [split, ...)

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder elim_y(unsigned split) { return {Kind::ElimY, split}; }

    int compare(const Monomial& a, const Monomial& b) const {
        constexpr unsigned kAll = ~0u;
        switch (kind) {
            case Kind::Lex:
                return detail::lex_compare(a, b);
            case Kind::GrevLex:
                return detail::grevlex_block_compare(a, b, 0, kAll);
            case Kind::ElimY: {
                int c = detail::grevlex_block_compare(a, b, split, kAll);
                if (c != 0) return c;
                return detail::grevlex_block_compare(a, b, 0, split);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

}  // namespace hnp
