#include "hnp/certificate.hpp"

#include <map>

namespace hnp {

namespace {

bool pure_x(const Polynomial<Integer>& p, unsigned m) {
    return p.is_zero() || p.block_degree(m, ~0u) == Degree(Integer(0));
}

Degree deg_x(const Polynomial<Integer>& p, unsigned m) { return p.block_degree(0, m); }
Degree deg_y(const Polynomial<Integer>& p, unsigned m) { return p.block_degree(m, ~0u); }

}  // namespace

CertificateReport verify_certificate(const PolynomialSystem& s,
                                     const NullstellensatzCertificate& cert) {
    if (cert.cofactors.size() != s.k())
        throw std::invalid_argument("certificate has wrong number of cofactors");
    CertificateReport rep;

    if (cert.a.is_zero()) {
        rep.reason = "a is zero";
        return rep;
    }
    if (!pure_x(cert.a, s.m)) {
        rep.reason = "a involves system variables";
        return rep;
    }
    if (cert.scaling <= 0) {
        rep.reason = "scaling must be positive";
        return rep;
    }

    Polynomial<Integer> sum;
    rep.deg_y_max = Degree::neg_infinity();
    rep.deg_x_max = deg_x(cert.a, s.m);
    for (std::size_t i = 0; i < s.k(); ++i) {
        Polynomial<Integer> gi_fi = cert.cofactors[i] * s.polys[i];
        sum = sum + gi_fi;
        rep.deg_y_max = max(rep.deg_y_max, deg_y(gi_fi, s.m));
        rep.deg_x_max = max(rep.deg_x_max, deg_x(gi_fi, s.m));
    }
    if (!(sum == cert.a.scaled(cert.scaling))) {
        rep.reason = "identity scaling*a = sum g_i f_i does not hold";
        return rep;
    }
    rep.valid = true;

    Integer k(static_cast<unsigned long>(s.k()));
    Integer two_k = int_pow(Integer(2), static_cast<unsigned long>(s.k()));
    rep.within_thm_bounds =
        rep.deg_y_max <= Degree(two_k) && rep.deg_x_max <= Degree(k * two_k);
    return rep;
}

NullstellensatzCertificate find_certificate(const PolynomialSystem& s, const Budget& budget) {
    std::vector<Polynomial<Rational>> gens;
    for (const auto& p : s.polys) gens.push_back(to_rational(p));
    MonomialOrder order = MonomialOrder::elim_y(s.m);
    GroebnerBasis<Rational> g = buchberger(gens, order, /*track=*/true, budget);

    std::optional<std::size_t> witness;
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        const auto& p = g.generators[i];
        if (p.is_zero() || !(p.block_degree(s.m, ~0u) == Degree(Integer(0)))) continue;
        if (!witness || order.less(p.leading_term(order).first,
                                   g.generators[*witness].leading_term(order).first))
            witness = i;
    }
    if (!witness)
        throw std::invalid_argument("find_certificate called on a SAT instance");

    const Polynomial<Rational>& a_q = g.generators[*witness];
    const auto& cof_q = (*g.cofactors)[*witness];

    Integer lam = denominator_lcm(a_q);
    for (const auto& c : cof_q) lam = int_lcm(lam, denominator_lcm(c));

    NullstellensatzCertificate cert;
    cert.a = to_integer(a_q.scaled(Rational(lam)));
    for (const auto& c : cof_q) cert.cofactors.push_back(to_integer(c.scaled(Rational(lam))));

    Integer g0 = content(cert.a);
    for (const auto& c : cert.cofactors) g0 = int_gcd(g0, content(c));
    if (g0 > 1) {
        cert.a = divide_content(cert.a, g0);
        for (auto& c : cert.cofactors) c = divide_content(c, g0);
    }
    // sign convention: positive leading coefficient for a
    if (cert.a.leading_term_canonical().second < 0) {
        cert.a = -cert.a;
        for (auto& c : cert.cofactors) c = -c;
    }
    cert.scaling = 1;
    return cert;
}

namespace {

// enumerate monomials on variable indices [lo, hi) with total degree <= d
void enumerate_monomials(unsigned lo, unsigned hi, long d, Monomial prefix,
                         std::vector<Monomial>& out) {
    if (lo == hi) {
        out.push_back(prefix);
        return;
    }
    for (long e = 0; e <= d; ++e) {
        Monomial next = prefix;
        if (e > 0) next = next * Monomial::var(lo, Integer(e));
        enumerate_monomials(lo + 1, hi, d - e, next, out);
    }
}

std::vector<Monomial> monomials_up_to(unsigned lo, unsigned hi, long d) {
    std::vector<Monomial> out;
    if (d >= 0) enumerate_monomials(lo, hi, d, Monomial::one(), out);
    return out;
}

// One Macaulay solve at exact caps (dy, dx); returns a certificate or nullopt.
std::optional<NullstellensatzCertificate> solve_at(const PolynomialSystem& s, long dy, long dx,
                                                   std::size_t max_unknowns) {
    const unsigned m = s.m, n = s.n;
    struct Unknown {
        std::size_t poly;
        Monomial mono;
    };
    std::vector<Unknown> unknowns;
    for (std::size_t i = 0; i < s.k(); ++i) {
        Degree dyf = s.polys[i].block_degree(m, m + n);
        long cap_y = dy;
        if (dyf.is_finite()) cap_y -= static_cast<long>(dyf.finite().get_si());
        if (cap_y < 0) continue;
        std::vector<Monomial> ys = monomials_up_to(m, m + n, cap_y);
        std::vector<Monomial> xs = monomials_up_to(0, m, dx);
        for (const auto& ym : ys)
            for (const auto& xm : xs) unknowns.push_back({i, xm * ym});
    }
    if (unknowns.empty()) return std::nullopt;
    if (unknowns.size() > max_unknowns) throw BudgetExceeded("macaulay unknowns");

    // rows: monomials of sum g_i f_i that must cancel (everything a cannot
    // absorb: any y-degree > 0, or pure-x degree > dx)
    std::map<Monomial, std::map<std::size_t, Rational>, CanonicalLess> rows;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto& f = s.polys[unknowns[u].poly];
        for (const auto& [mo, c] : f.terms()) {
            Monomial prod = mo * unknowns[u].mono;
            bool must_cancel = prod.block_degree(m, ~0u) > 0 ||
                               prod.total_degree() > dx;
            if (must_cancel) rows[prod][u] += Rational(c);
        }
    }

    // Gaussian elimination to reduced row echelon form
    std::vector<std::vector<Rational>> mat;
    for (auto& [mo, row] : rows) {
        std::vector<Rational> dense(unknowns.size());
        for (auto& [u, c] : row) dense[u] = c;
        mat.push_back(std::move(dense));
    }
    const std::size_t ncols = unknowns.size();
    std::vector<long> pivot_of_col(ncols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < mat.size(); ++col) {
        std::size_t sel = rank;
        while (sel < mat.size() && mat[sel][col] == 0) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[rank], mat[sel]);
        Rational inv = Rational(1) / mat[rank][col];
        for (auto& v : mat[rank]) v *= inv;
        for (std::size_t r = 0; r < mat.size(); ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            Rational f = mat[r][col];
            for (std::size_t c2 = col; c2 < ncols; ++c2) mat[r][c2] -= f * mat[rank][c2];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    // kernel basis: one vector per free column
    for (std::size_t freec = 0; freec < ncols; ++freec) {
        if (pivot_of_col[freec] >= 0) continue;
        std::vector<Rational> sol(ncols);
        sol[freec] = 1;
        for (std::size_t col = 0; col < ncols; ++col) {
            long pr = pivot_of_col[col];
            if (pr >= 0) sol[col] = -mat[static_cast<std::size_t>(pr)][freec];
        }
        // assemble cofactors and a
        std::vector<Polynomial<Rational>> cof(s.k());
        for (std::size_t u = 0; u < ncols; ++u)
            if (!(sol[u] == 0))
                cof[unknowns[u].poly].add_term(unknowns[u].mono, sol[u]);
        Polynomial<Rational> a;
        for (std::size_t i = 0; i < s.k(); ++i) a = a + cof[i] * to_rational(s.polys[i]);
        if (a.is_zero()) continue;

        Integer lam = denominator_lcm(a);
        for (const auto& c : cof) lam = int_lcm(lam, denominator_lcm(c));
        NullstellensatzCertificate cert;
        cert.a = to_integer(a.scaled(Rational(lam)));
        for (const auto& c : cof) cert.cofactors.push_back(to_integer(c.scaled(Rational(lam))));
        Integer g0 = content(cert.a);
        for (const auto& c : cert.cofactors) g0 = int_gcd(g0, content(c));
        if (g0 > 1) {
            cert.a = divide_content(cert.a, g0);
            for (auto& c : cert.cofactors) c = divide_content(c, g0);
        }
        if (cert.a.leading_term_canonical().second < 0) {
            cert.a = -cert.a;
            for (auto& c : cert.cofactors) c = -c;
        }
        cert.scaling = 1;
        return cert;
    }
    return std::nullopt;
}

}  // namespace

std::optional<NullstellensatzCertificate> bounded_degree_search(const PolynomialSystem& s,
                                                                const Integer& d_y,
                                                                const Integer& d_x,
                                                                std::size_t max_unknowns) {
    if (!d_y.fits_slong_p() || !d_x.fits_slong_p()) throw BudgetExceeded("macaulay degree caps");
    long dy = d_y.get_si(), dx = d_x.get_si();
    // sweep smaller degree boxes first; the last stage is the full box, so the
    // overall search space is exactly (d_y, d_x)
    for (long t = 1;; ++t) {
        long cy = std::min(dy, t), cx = std::min(dx, 2 * t);
        auto cert = solve_at(s, cy, cx, max_unknowns);
        if (cert) return cert;
        if (cy == dy && cx == dx) return std::nullopt;
    }
}

}  // namespace hnp
