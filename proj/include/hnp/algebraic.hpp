#pragma once

#include <optional>
#include <vector>

#include "hnp/ratfunc.hpp"
#include "hnp/system.hpp"
#include "hnp/univar.hpp"

namespace hnp {

using PolyQ = Polynomial<Rational>;
using PolyZ = Polynomial<Integer>;

// Integral scaling of a monic polynomial with fraction coefficients:
// g(y) = d^(deg f) * f(y/d) is monic with polynomial coefficients, and alpha a
// root of f implies d*alpha a root of g.
struct IntegralScaling {
    UnivarPoly<PolyQ> g;  // monic, coefficients in Q[x]
    PolyQ d;              // the applied denominator (element of Q[x])
};

IntegralScaling make_integral(const std::vector<RatFunc>& monic_coeffs);

// Polynomial of degree deg(p)*deg(q) having alpha + c*beta among its roots
// for all roots alpha of p, beta of q; realized as Res_z(p(y - c z), q(z)).
UnivarPoly<Rational> minpoly_sum(const UnivarPoly<Rational>& p, const UnivarPoly<Rational>& q,
                                 const Integer& c);

struct PrimitiveElementResult {
    bool degenerate = false;  // no separable full-degree candidate in the bound
    Integer c = 0;
    UnivarPoly<Rational> minpoly;
    Integer bound = 0;  // l^2 m^2 + 1
};

// Least c in {1..l^2 m^2 + 1} for which minpoly_sum(p, q, c) is squarefree of
// full degree l*m; p, q are assumed irreducible over Q.
PrimitiveElementResult primitive_element(const UnivarPoly<Rational>& p,
                                         const UnivarPoly<Rational>& q);

// Solution witness (m, P_1..P_n, b): beta_i = P_i(theta)/b for theta a root of
// the monic minimal polynomial m(x, y).
struct SolutionWitness {
    UnivarPoly<PolyQ> minpoly;          // monic in y, coefficients in Q[x]
    std::vector<UnivarPoly<PolyZ>> p;   // P_i in Z[x][y]
    PolyZ b;                            // nonzero element of Z[x]
};

// g_i(y) = b^2 f_i(P_1(y)/b, ..., P_n(y)/b); witness is valid iff every g_i is
// divisible by the minimal polynomial.  Requires the system normalized
// (deg_y f_i <= 2).
bool check_witness(const PolynomialSystem& s, const SolutionWitness& w);

struct WitnessSpecialization {
    bool b_nonzero = false;
    UnivarPoly<Rational> specialized_minpoly;  // m(alpha, y), monic, nonconstant
    Rational b_value = 0;
    // symbolic check: f_i(alpha, P(omega)/b(alpha)) = 0 modulo m(alpha, y)
    bool solution_verified = false;
};

WitnessSpecialization specialize_witness(const PolynomialSystem& s, const SolutionWitness& w,
                                         const std::vector<Integer>& alpha);

}  // namespace hnp
