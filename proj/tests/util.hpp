#pragma once

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "hnp/groebner.hpp"
#include "hnp/sysio.hpp"

namespace testutil {

inline std::string corpus_dir() {
    const char* env = std::getenv("HNP_CORPUS");
    return env ? env : "corpus";
}

inline hnp::PolynomialSystem corpus_system(const std::string& name) {
    return hnp::load_system_file(corpus_dir() + "/" + name + ".sys");
}

struct LabeledSystem {
    std::string name;
    hnp::Sat label;
};

inline std::vector<LabeledSystem> corpus_labels() {
    std::ifstream in(corpus_dir() + "/labels.csv");
    if (!in) throw std::runtime_error("cannot open corpus labels");
    std::vector<LabeledSystem> out;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        out.push_back({line.substr(0, c1),
                       line.substr(c1 + 1, c2 - c1 - 1) == "SAT" ? hnp::Sat::SAT
                                                                  : hnp::Sat::UNSAT});
    }
    return out;
}

// polynomial from an expression in an existing system's namespace
inline hnp::Polynomial<hnp::Integer> poly(const std::string& expr,
                                          const hnp::PolynomialSystem& s) {
    return hnp::parse_polynomial(expr, s);
}

}  // namespace testutil
