#pragma once

#include <utility>
#include <vector>

#include "hnp/system.hpp"

namespace hnp {

// Record of the fresh variables introduced by normalization.  Each fresh
// variable has exactly one defining equation in the normalized system; a
// solution of the original system is recovered by projecting the fresh
// variables away.
struct NormalizationMap {
    struct Def {
        unsigned var_index;    // absolute index of the introduced y-variable
        std::size_t eq_index;  // position of its defining equation in the output
    };
    std::vector<Def> defs;
    unsigned orig_m = 0, orig_n = 0;
    std::size_t orig_k = 0;
    unsigned norm_n = 0;
    std::size_t norm_k = 0;
};

// Equisatisfiable transform to combined degree <= 2 with coefficients in
// {-1, 0, 1}.  The parameter count m is unchanged.
std::pair<PolynomialSystem, NormalizationMap> normalize_system(const PolynomialSystem& s);

}  // namespace hnp
