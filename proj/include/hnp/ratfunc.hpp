#pragma once

#include <vector>

#include "hnp/system.hpp"

namespace hnp {

// Coefficient in the fraction field of Q[x]: num/den with num in Q[x] and a
// nonzero den in Z[x].  Both live on the parameter block.
struct RatFunc {
    Polynomial<Rational> num;
    Polynomial<Integer> den = Polynomial<Integer>(Integer(1));
};

// Polynomial in y with rational-function coefficients; the monomial holds the
// y-part only.
struct RatFuncPoly {
    std::vector<std::pair<Monomial, RatFunc>> terms;
};

// lcm in Z[x], resolved through exact-division probes; falls back to the
// product when neither argument divides the other.
inline Polynomial<Integer> poly_lcm(const Polynomial<Integer>& a, const Polynomial<Integer>& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm with zero polynomial");
    if (try_divide(a, b)) return a;
    if (try_divide(b, a)) return b;
    return a * b;
}

// Scale each polynomial by the lcm of its coefficient denominators (polynomial
// and rational), producing Z[x][y] polynomials with the same zero set over the
// closure of Q(x).
inline std::vector<Polynomial<Integer>> clear_denominators(const std::vector<RatFuncPoly>& polys) {
    std::vector<Polynomial<Integer>> out;
    out.reserve(polys.size());
    for (const auto& f : polys) {
        Polynomial<Integer> den_lcm{Integer(1)};
        for (const auto& [mo, c] : f.terms) {
            if (c.den.is_zero()) throw std::domain_error("zero denominator");
            den_lcm = poly_lcm(den_lcm, c.den);
        }
        Polynomial<Rational> scaled;
        for (const auto& [mo, c] : f.terms) {
            auto cof = try_divide(to_rational(den_lcm), to_rational(c.den));
            if (!cof) throw std::logic_error("denominator does not divide lcm");
            scaled = scaled + (c.num * *cof).times_monomial(mo, Rational(1));
        }
        out.push_back(clear_rational_denominators(scaled));
    }
    return out;
}

}  // namespace hnp
