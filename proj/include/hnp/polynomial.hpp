#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hnp/monomial.hpp"
#include "hnp/scalar.hpp"

namespace hnp {

// Sparse multivariate polynomial over a coefficient ring R.  Terms are kept in
// a map ordered by the canonical (graded-lex) order; zero coefficients are
// never stored.
template <class R>
class Polynomial {
public:
    using TermMap = std::map<Monomial, R, CanonicalLess>;

    Polynomial() = default;
    explicit Polynomial(R constant) {
        if (!coeff_is_zero(constant)) terms_[Monomial::one()] = std::move(constant);
    }
    static Polynomial term(Monomial mo, R c) {
        Polynomial p;
        if (!coeff_is_zero(c)) p.terms_[std::move(mo)] = std::move(c);
        return p;
    }
    static Polynomial variable(unsigned index) {
        return term(Monomial::var(index), R(1));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    R constant_term() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? R() : it->second;
    }

    R coefficient(const Monomial& mo) const {
        auto it = terms_.find(mo);
        if (it == terms_.end()) return R();
        return it->second;
    }

    void add_term(const Monomial& mo, const R& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(mo, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    Degree total_degree() const {
        if (terms_.empty()) return Degree::neg_infinity();
        Degree d = Degree::neg_infinity();
        for (const auto& [mo, c] : terms_) d = max(d, Degree(mo.total_degree()));
        return d;
    }
    Degree block_degree(unsigned lo, unsigned hi) const {
        if (terms_.empty()) return Degree::neg_infinity();
        Degree d = Degree::neg_infinity();
        for (const auto& [mo, c] : terms_) d = max(d, Degree(mo.block_degree(lo, hi)));
        return d;
    }

    unsigned max_var_index() const {
        unsigned mx = 0;
        for (const auto& [mo, c] : terms_) mx = std::max(mx, mo.max_var_index());
        return mx;
    }

    // leading term w.r.t. an arbitrary monomial order (linear scan)
    std::pair<Monomial, R> leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    // leading term w.r.t. the canonical order
    std::pair<Monomial, R> leading_term_canonical() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return {terms_.rbegin()->first, terms_.rbegin()->second};
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [mo, c] : b.terms_) r.add_term(mo, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [mo, c] : b.terms_) r.add_term(mo, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [mo, c] : terms_) r.terms_[mo] = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial scaled(const R& c) const {
        Polynomial r;
        if (coeff_is_zero(c)) return r;
        for (const auto& [mo, k] : terms_) {
            R prod = k * c;
            if (!coeff_is_zero(prod)) r.terms_[mo] = prod;
        }
        return r;
    }
    Polynomial times_monomial(const Monomial& mo, const R& c) const {
        Polynomial r;
        if (coeff_is_zero(c)) return r;
        for (const auto& [m2, k] : terms_) {
            R prod = k * c;
            if (!coeff_is_zero(prod)) r.terms_[mo * m2] = prod;
        }
        return r;
    }

    Polynomial pow(const Integer& e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        if (!e.fits_ulong_p()) throw std::overflow_error("exponent too large to expand");
        unsigned long n = e.get_ui();
        Polynomial result{R(1)};
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            base = (n >>= 1) ? base * base : base;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    // substitute variables < values.size() having an entry; remaining
    // variables stay symbolic
    Polynomial substitute(const std::map<unsigned, Polynomial>& values) const {
        Polynomial result;
        for (const auto& [mo, c] : terms_) {
            Polynomial term{c};
            Monomial residual;
            for (const auto& [v, e] : mo.exps) {
                auto it = values.find(v);
                if (it == values.end())
                    residual = residual * Monomial::var(v, e);
                else
                    term = term * it->second.pow(e);
            }
            result = result + term.times_monomial(residual, coeff_one(c));
        }
        return result;
    }

    std::string to_string(const std::function<std::string(unsigned)>& var_name) const;

private:
    TermMap terms_;
};

template <class R>
std::string Polynomial<R>::to_string(const std::function<std::string(unsigned)>& var_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // canonical order, highest first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = coeff_to_string(it->second);
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) out << "-", cs = cs.substr(1);
        } else {
            out << (negative ? " - " : " + ");
            if (negative) cs = cs.substr(1);
        }
        first = false;
        const Monomial& mo = it->first;
        if (mo.is_one()) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            bool firstvar = true;
            for (const auto& [v, e] : mo.exps) {
                if (!firstvar) out << "*";
                firstvar = false;
                out << var_name(v);
                if (e != 1) out << "^" << e.get_str();
            }
        }
    }
    return out.str();
}

// --- conversions -----------------------------------------------------------

inline Polynomial<Rational> to_rational(const Polynomial<Integer>& p) {
    Polynomial<Rational> r;
    for (const auto& [mo, c] : p.terms()) r.add_term(mo, Rational(c));
    return r;
}

// lcm of coefficient denominators
inline Integer denominator_lcm(const Polynomial<Rational>& p) {
    Integer l = 1;
    for (const auto& [mo, c] : p.terms()) l = int_lcm(l, c.get_den());
    return l;
}

// requires all coefficients integral
inline Polynomial<Integer> to_integer(const Polynomial<Rational>& p) {
    Polynomial<Integer> r;
    for (const auto& [mo, c] : p.terms()) {
        if (c.get_den() != 1) throw std::domain_error("non-integer coefficient");
        r.add_term(mo, c.get_num());
    }
    return r;
}

// scale by the denominator lcm and return the integer polynomial
inline Polynomial<Integer> clear_rational_denominators(const Polynomial<Rational>& p,
                                                       Integer* scale_out = nullptr) {
    Integer l = denominator_lcm(p);
    if (scale_out) *scale_out = l;
    return to_integer(p.scaled(Rational(l)));
}

// gcd of all integer coefficients (0 for the zero polynomial)
inline Integer content(const Polynomial<Integer>& p) {
    Integer g = 0;
    for (const auto& [mo, c] : p.terms()) g = int_gcd(g, c);
    return g;
}

inline Polynomial<Integer> divide_content(const Polynomial<Integer>& p, const Integer& g) {
    Polynomial<Integer> r;
    for (const auto& [mo, c] : p.terms()) r.add_term(mo, int_divexact(c, g));
    return r;
}

inline Polynomial<Fp> reduce_mod_p(const Polynomial<Integer>& f, std::uint64_t p) {
    if (!is_prime(Integer(static_cast<unsigned long>(p))))
        throw std::invalid_argument("modulus is not prime");
    Polynomial<Fp> r;
    for (const auto& [mo, c] : f.terms()) r.add_term(mo, Fp::from_integer(c, p));
    return r;
}

// substitute integer values for variables with index < alpha.size() offset by
// base: variable (base + i) := alpha[i]
template <class R>
Polynomial<R> specialize_block(const Polynomial<R>& f, unsigned base,
                               const std::vector<Integer>& alpha) {
    std::map<unsigned, Polynomial<R>> values;
    for (unsigned i = 0; i < alpha.size(); ++i)
        values[base + i] = Polynomial<R>(R(alpha[i]));
    return f.substitute(values);
}

// exact division: returns a/b when b divides a in R[vars], nullopt otherwise
template <class R>
std::optional<Polynomial<R>> try_divide(const Polynomial<R>& a, const Polynomial<R>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial<R> rem = a, quot;
    auto [lm, lc] = b.leading_term_canonical();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term_canonical();
        if (!lm.divides(rm)) return std::nullopt;
        R q;
        try {
            q = coeff_exact_div(rc, lc);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        if (!(q * lc == rc)) return std::nullopt;
        Monomial qm = rm.divide_by(lm);
        quot.add_term(qm, q);
        rem = rem - b.times_monomial(qm, q);
    }
    return quot;
}

}  // namespace hnp
