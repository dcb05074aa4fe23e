#pragma once

#include <optional>
#include <vector>

#include "hnp/groebner.hpp"
#include "hnp/system.hpp"

namespace hnp {

// (a, g_1..g_k) witnessing scaling*a = sum g_i f_i with a a nonzero element
// of Z[x].  Certificates produced here are content-normalized (scaling = 1).
struct NullstellensatzCertificate {
    Polynomial<Integer> a;
    std::vector<Polynomial<Integer>> cofactors;
    Integer scaling = 1;
};

struct CertificateReport {
    bool valid = false;
    Degree deg_y_max;  // max over i of deg_y(g_i f_i)
    Degree deg_x_max;  // max of deg_x(a) and deg_x(g_i f_i)
    bool within_thm_bounds = false;
    std::string reason;  // set when invalid
};

CertificateReport verify_certificate(const PolynomialSystem& s,
                                     const NullstellensatzCertificate& cert);

// Extraction via cofactor-tracked elimination Groebner; precondition: the
// elimination oracle answers UNSAT.
NullstellensatzCertificate find_certificate(const PolynomialSystem& s,
                                            const Budget& budget = Budget{});

// Linear-algebra search over cofactors of bounded degree: deg_y(g_i) <=
// d_y - deg_y(f_i), deg_x(g_i) <= d_x, and a supported on x-monomials of
// degree <= d_x.  Sweeps sub-degrees first and returns the first hit.
std::optional<NullstellensatzCertificate> bounded_degree_search(const PolynomialSystem& s,
                                                                const Integer& d_y,
                                                                const Integer& d_x,
                                                                std::size_t max_unknowns = 200000);

}  // namespace hnp
