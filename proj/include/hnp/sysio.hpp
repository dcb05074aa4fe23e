#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hnp/system.hpp"

namespace hnp {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          column(col_) {}
};

// Result of parsing: coefficients may still be rational; callers route the
// polynomials through clear_denominators to obtain a PolynomialSystem.
struct ParsedSystem {
    std::vector<Polynomial<Rational>> polys;
    unsigned m = 0;
    unsigned n = 0;
    std::vector<std::string> param_names;
    std::vector<std::string> var_names;
};

ParsedSystem parse_system(const std::string& text);

// parse + per-polynomial denominator clearing
PolynomialSystem load_system(const std::string& text);
PolynomialSystem load_system_file(const std::string& path);

std::string render_polynomial(const Polynomial<Integer>& p, const PolynomialSystem& s);
std::string render_system(const PolynomialSystem& s);

// Parse a single polynomial expression in the namespace of an existing system
// (used by the certificate / witness file formats).
Polynomial<Integer> parse_polynomial(const std::string& expr, const PolynomialSystem& s);

}  // namespace hnp
