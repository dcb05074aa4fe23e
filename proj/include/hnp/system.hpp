#pragma once

#include <string>
#include <vector>

#include "hnp/polynomial.hpp"

namespace hnp {

// Element of Z[x][y]: integer-coefficient polynomial on the joint index space
// with the declared split (parameters are indices [0, m), variables are
// [m, m+n)).
struct ParamPolynomial {
    Polynomial<Integer> poly;
    unsigned m = 0;
    unsigned n = 0;

    Degree deg_x() const { return poly.block_degree(0, m); }
    Degree deg_y() const { return poly.block_degree(m, m + n); }

    void check_indices() const {
        if (poly.max_var_index() > m + n)
            throw std::invalid_argument("variable index out of declared range");
    }
};

// Substitute x_i := alpha_i; the result lives on the y block only (indices
// keep their absolute position m..m+n-1).
inline Polynomial<Integer> specialize(const ParamPolynomial& f,
                                      const std::vector<Integer>& alpha) {
    if (alpha.size() != f.m) throw std::invalid_argument("alpha length != parameter count");
    return specialize_block(f.poly, 0, alpha);
}

// The instance S = {f_1,...,f_k} plus metadata.
struct PolynomialSystem {
    std::vector<Polynomial<Integer>> polys;
    unsigned m = 0;
    unsigned n = 0;
    std::vector<std::string> param_names;  // may be empty: defaults x1..xm
    std::vector<std::string> var_names;    // may be empty: defaults y1..yn

    std::size_t k() const { return polys.size(); }

    ParamPolynomial at(std::size_t i) const { return ParamPolynomial{polys[i], m, n}; }

    std::string name_of(unsigned index) const {
        if (index < m)
            return index < param_names.size() ? param_names[index]
                                              : "x" + std::to_string(index + 1);
        unsigned j = index - m;
        return j < var_names.size() ? var_names[j] : "y" + std::to_string(j + 1);
    }

    std::vector<Polynomial<Integer>> specialized(const std::vector<Integer>& alpha) const {
        std::vector<Polynomial<Integer>> out;
        out.reserve(polys.size());
        for (const auto& f : polys) out.push_back(specialize(ParamPolynomial{f, m, n}, alpha));
        return out;
    }
};

// s = max(m, n, k); meaningful once the system is normalized.
inline unsigned long size_measure(const PolynomialSystem& s) {
    unsigned long r = std::max<unsigned long>(s.m, s.n);
    return std::max<unsigned long>(r, s.k());
}

}  // namespace hnp
