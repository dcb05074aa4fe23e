#include "hnp/algebraic.hpp"

namespace hnp {

IntegralScaling make_integral(const std::vector<RatFunc>& monic_coeffs) {
    if (monic_coeffs.empty()) throw std::domain_error("empty coefficient list");
    const RatFunc& lead = monic_coeffs.back();
    if (!(lead.num == PolyQ(Rational(1))) || !(lead.den == PolyZ(Integer(1))))
        throw std::invalid_argument("make_integral requires a monic input");

    // d = lcm of polynomial denominators times the lcm of rational
    // denominators of the numerators
    PolyZ den_lcm{Integer(1)};
    Integer num_lcm = 1;
    for (const auto& c : monic_coeffs) {
        if (c.den.is_zero()) throw std::domain_error("zero denominator");
        den_lcm = poly_lcm(den_lcm, c.den);
        num_lcm = int_lcm(num_lcm, denominator_lcm(c.num));
    }
    PolyQ d = to_rational(den_lcm).scaled(Rational(num_lcm));

    const std::size_t n = monic_coeffs.size() - 1;  // degree
    std::vector<PolyQ> g(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const RatFunc& c = monic_coeffs[i];
        // coefficient of y^i in d^n f(y/d) is c_i * d^(n-i)
        PolyQ dpow{Rational(1)};
        for (std::size_t j = 0; j < n - i; ++j) dpow = dpow * d;
        auto quot = try_divide(c.num * dpow, to_rational(c.den));
        if (!quot) throw std::logic_error("denominator does not divide scaling");
        g[i] = *quot;
    }
    return {UnivarPoly<PolyQ>(std::move(g)), d};
}

namespace {

// split a bivariate polynomial (vars: 0 = y, 1 = z) into a univariate in z
// with coefficients in Q[y]
UnivarPoly<PolyQ> by_z_degree(const PolyQ& f) {
    std::vector<PolyQ> coeffs;
    for (const auto& [mo, c] : f.terms()) {
        Integer ez = mo.exponent(1);
        if (!ez.fits_ulong_p()) throw std::overflow_error("z-degree too large");
        std::size_t e = ez.get_ui();
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        Monomial ypart = Monomial::var(0, mo.exponent(0));
        coeffs[e].add_term(ypart, c);
    }
    return UnivarPoly<PolyQ>(std::move(coeffs));
}

UnivarPoly<Rational> to_univar(const PolyQ& f) {
    std::vector<Rational> coeffs;
    for (const auto& [mo, c] : f.terms()) {
        Integer e = mo.exponent(0);
        std::size_t i = e.get_ui();
        if (coeffs.size() <= i) coeffs.resize(i + 1, Rational(0));
        coeffs[i] = c;
    }
    return UnivarPoly<Rational>(std::move(coeffs));
}

}  // namespace

UnivarPoly<Rational> minpoly_sum(const UnivarPoly<Rational>& p, const UnivarPoly<Rational>& q,
                                 const Integer& c) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("zero input polynomial");
    // p(y - c z) as a bivariate polynomial, vars 0 = y, 1 = z
    PolyQ w = PolyQ::variable(0) - PolyQ::variable(1).scaled(Rational(c));
    PolyQ a;
    PolyQ wpow{Rational(1)};
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        a = a + wpow.scaled(p.coeffs()[i]);
        wpow = wpow * w;
    }
    UnivarPoly<PolyQ> az = by_z_degree(a);
    std::vector<PolyQ> qz;
    for (const auto& qc : q.coeffs()) qz.emplace_back(qc);
    PolyQ res = sylvester_resultant(az, UnivarPoly<PolyQ>(std::move(qz)));
    UnivarPoly<Rational> out = to_univar(res);
    // the resultant of monic inputs is the root-sum polynomial up to sign;
    // normalize to monic
    if (!out.is_zero()) out = out.scaled(Rational(1) / out.leading());
    return out;
}

PrimitiveElementResult primitive_element(const UnivarPoly<Rational>& p,
                                         const UnivarPoly<Rational>& q) {
    if (p.degree() < 1 || q.degree() < 1)
        throw std::invalid_argument("primitive_element requires degree >= 1 inputs");
    // squarefreeness sanity check on the inputs
    if (!(discriminant(p) != 0) || !(discriminant(q) != 0))
        throw std::invalid_argument("input polynomial has a repeated root");

    long l = p.degree(), m = q.degree();
    Integer bound = Integer(l) * l * m * m + 1;
    long target = l * m;

    PrimitiveElementResult out;
    out.bound = bound;
    // conjugate generators (p = q) never span a degree l*m compositum; the
    // squarefree-full-degree proxy would accept a non-primitive candidate here
    if (p == q) {
        out.degenerate = true;
        return out;
    }
    for (Integer c = 1; c <= bound; ++c) {
        UnivarPoly<Rational> h = minpoly_sum(p, q, c);
        if (h.degree() != target) continue;
        if (discriminant(h) != 0) {
            out.c = c;
            out.minpoly = h;
            return out;
        }
    }
    out.degenerate = true;
    return out;
}

namespace {

// evaluate an element of Q[x] at integer parameters
Rational eval_at(const PolyQ& f, const std::vector<Integer>& alpha) {
    PolyQ v = specialize_block(f, 0, alpha);
    if (!v.is_constant()) throw std::invalid_argument("polynomial not pure in parameters");
    return v.constant_term();
}

// g_i(y) = b^2 f_i(P_1(y)/b,...) for one f_i, as a univariate in y with
// coefficients in Q[x]
UnivarPoly<PolyQ> clear_and_substitute(const PolynomialSystem& s, const SolutionWitness& w,
                                       const Polynomial<Integer>& f) {
    PolyQ b = to_rational(w.b);
    std::vector<UnivarPoly<PolyQ>> p;  // P_i lifted to Q[x] coefficients
    for (const auto& pi : w.p) {
        std::vector<PolyQ> cs;
        for (const auto& c : pi.coeffs()) cs.push_back(to_rational(c));
        p.emplace_back(std::move(cs));
    }

    UnivarPoly<PolyQ> acc;
    for (const auto& [mo, c] : f.terms()) {
        Integer ydeg = mo.block_degree(s.m, s.m + s.n);
        if (ydeg > 2) throw std::invalid_argument("check_witness requires deg_y <= 2");
        // x-part of the term, as an element of Q[x]
        Monomial xpart;
        for (const auto& [v, e] : mo.exps)
            if (v < s.m) xpart = xpart * Monomial::var(v, e);
        PolyQ scalar = PolyQ::term(xpart, Rational(c));
        // multiply by b^(2 - ydeg)
        for (Integer j = ydeg; j < 2; ++j) scalar = scalar * b;

        UnivarPoly<PolyQ> term = UnivarPoly<PolyQ>::constant(scalar);
        for (const auto& [v, e] : mo.exps) {
            if (v < s.m) continue;
            unsigned idx = v - s.m;
            if (idx >= p.size()) throw std::invalid_argument("witness is missing a P_i");
            if (!e.fits_ulong_p()) throw std::overflow_error("exponent too large");
            term = term * p[idx].pow(e.get_ui());
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace

bool check_witness(const PolynomialSystem& s, const SolutionWitness& w) {
    if (w.b.is_zero()) throw std::invalid_argument("witness has b = 0");
    if (!w.minpoly.is_monic()) throw std::invalid_argument("witness minpoly must be monic");
    if (w.p.size() != s.n) throw std::invalid_argument("witness needs one P_i per variable");
    for (const auto& f : s.polys) {
        UnivarPoly<PolyQ> g = clear_and_substitute(s, w, f);
        if (!g.rem_by_monic(w.minpoly).is_zero()) return false;
    }
    return true;
}

WitnessSpecialization specialize_witness(const PolynomialSystem& s, const SolutionWitness& w,
                                         const std::vector<Integer>& alpha) {
    if (!check_witness(s, w)) throw std::invalid_argument("invalid witness");
    if (alpha.size() != s.m) throw std::invalid_argument("alpha length != parameter count");

    WitnessSpecialization out;
    // m(alpha, y)
    std::vector<Rational> mc;
    for (const auto& c : w.minpoly.coeffs()) mc.push_back(eval_at(c, alpha));
    out.specialized_minpoly = UnivarPoly<Rational>(std::move(mc));

    out.b_value = eval_at(to_rational(w.b), alpha);
    out.b_nonzero = out.b_value != 0;
    if (!out.b_nonzero) return out;

    // each g_i(alpha, y) must reduce to 0 modulo m(alpha, y); combined with
    // b(alpha) != 0 this certifies that (P_i(alpha, omega)/b(alpha)) solves
    // the specialized system for any root omega of m(alpha, y)
    bool ok = true;
    for (const auto& f : s.polys) {
        UnivarPoly<PolyQ> g = clear_and_substitute(s, w, f);
        std::vector<Rational> gc;
        for (const auto& c : g.coeffs()) gc.push_back(eval_at(c, alpha));
        UnivarPoly<Rational> gq{std::move(gc)};
        if (!gq.rem_by_monic(out.specialized_minpoly).is_zero()) ok = false;
    }
    out.solution_verified = ok;
    return out;
}

}  // namespace hnp
