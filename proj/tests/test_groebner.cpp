#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "checks.hpp"
#include "util.hpp"

using namespace hnp;
using testutil::poly;

TEST_CASE("hn_decide textbook cases") {
    PolynomialSystem s1 = load_system("params\nvars y\neq y\neq y + 1\n");
    CHECK(hn_decide_integer(s1.polys) == Sat::UNSAT);

    PolynomialSystem s2 = load_system("params\nvars x y\neq x*y - 1\n");
    CHECK(hn_decide_integer(s2.polys) == Sat::SAT);

    PolynomialSystem s3 = load_system("params\nvars x y\neq x*y - 1\neq y\n");
    CHECK(hn_decide_integer(s3.polys) == Sat::UNSAT);

    PolynomialSystem s4 = load_system("params\nvars y\neq y^2 - 2\n");
    CHECK(hn_decide_integer(s4.polys) == Sat::SAT);  // irrational root still a root

    CHECK(hn_decide_integer({}) == Sat::SAT);  // empty system, zero ideal
}

TEST_CASE("reduced basis is canonical and monic") {
    PolynomialSystem s = load_system("params\nvars x y\neq x^2 + y^2 - 1\neq x - y\n");
    std::vector<Polynomial<Rational>> gens;
    for (const auto& p : s.polys) gens.push_back(to_rational(p));
    auto g1 = buchberger(gens, MonomialOrder::grevlex());
    std::reverse(gens.begin(), gens.end());
    auto g2 = buchberger(gens, MonomialOrder::grevlex());
    CHECK(g1.generators == g2.generators);  // input order does not matter
    for (const auto& p : g1.generators)
        CHECK(p.leading_term(g1.order).second == Rational(1));
}

TEST_CASE("normal_form is idempotent and linear") {
    PolynomialSystem s = load_system("params\nvars x y\neq x^2 - y\neq y^2 - x\n");
    std::vector<Polynomial<Rational>> gens;
    for (const auto& p : s.polys) gens.push_back(to_rational(p));
    auto g = buchberger(gens, MonomialOrder::grevlex());
    RandomStream rng(17);
    for (int i = 0; i < 10; ++i) {
        Polynomial<Rational> h;
        for (int t = 0; t < 5; ++t)
            h.add_term(Monomial::var(0, rng.below(4)) * Monomial::var(1, rng.below(4)),
                       Rational(static_cast<long>(rng.below(9)) - 4));
        Polynomial<Rational> nf = normal_form(h, g);
        CHECK(normal_form(nf, g) == nf);
        CHECK(normal_form(h - nf, g).is_zero());
    }
}

TEST_CASE("cofactor tracking reproduces basis elements") {
    std::vector<std::string> sources = {
        "params\nvars x y\neq x^2 - y\neq y^2 - x\n",
        "params\nvars x y\neq x*y - 1\neq x + y - 3\n",
        "params x\nvars y\neq y - x\neq y^2 - x\n",
    };
    for (const auto& src : sources) {
        PolynomialSystem s = load_system(src);
        std::vector<Polynomial<Rational>> gens;
        for (const auto& p : s.polys) gens.push_back(to_rational(p));
        auto g = buchberger(gens, MonomialOrder::elim_y(s.m), true);
        REQUIRE(g.cofactors.has_value());
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
            Polynomial<Rational> acc;
            for (std::size_t j = 0; j < gens.size(); ++j)
                acc = acc + (*g.cofactors)[i][j] * gens[j];
            CHECK(acc == g.generators[i]);
        }
    }
}

TEST_CASE("elimination oracle on hand cases") {
    PolynomialSystem s = testutil::corpus_system("yx_y2x");
    EliminationResult r = hnp_decide_elimination(s);
    CHECK(r.answer == Sat::UNSAT);
    REQUIRE(r.witness_a.has_value());
    // witness is monic x^2 - x up to scale
    Polynomial<Integer> wa = clear_rational_denominators(*r.witness_a);
    Polynomial<Integer> expect = poly("x^2 - x", s);
    CHECK(divide_content(wa, content(wa)) == expect);

    CHECK(hnp_decide_elimination(testutil::corpus_system("xy1")).answer == Sat::SAT);
    CHECK(hnp_decide_elimination(testutil::corpus_system("y_yp1")).answer == Sat::UNSAT);
    CHECK_FALSE(hnp_decide_elimination(testutil::corpus_system("y2x")).witness_a.has_value());
}

TEST_CASE("elimination witness is pure in the parameters") {
    for (const auto& entry : testutil::corpus_labels()) {
        PolynomialSystem s = testutil::corpus_system(entry.name);
        EliminationResult r = hnp_decide_elimination(s);
        if (r.answer == Sat::UNSAT) {
            REQUIRE(r.witness_a.has_value());
            CHECK(r.witness_a->block_degree(s.m, ~0u) == Degree(Integer(0)));
            CHECK_FALSE(r.witness_a->is_zero());
        }
    }
}

TEST_CASE("budget exhaustion is a first-class outcome") {
    PolynomialSystem s = load_system(
        "params\nvars x y z\neq x^3*y - z^2 - 1\neq y^3*z - x^2 - 1\neq z^3*x - y^2 - 1\n");
    Budget tiny;
    tiny.max_reductions = 10;
    std::vector<Polynomial<Rational>> gens;
    for (const auto& p : s.polys) gens.push_back(to_rational(p));
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex(), false, tiny), BudgetExceeded);
}

TEST_CASE("random F31 systems: S-polynomials and brute-force membership") {
    const std::uint64_t p = 31;
    RandomStream rng(2024);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        std::vector<Polynomial<Fp>> gens;
        std::size_t count = 1 + rng.below(3);
        for (std::size_t j = 0; j < count; ++j)
            gens.push_back(testutil::random_fp_poly(rng, p, 2, 3, 3));
        auto g = buchberger(gens, MonomialOrder::grevlex());
        if (g.generators.empty()) continue;
        CHECK(testutil::spolys_reduce_to_zero(g));
        CHECK(testutil::membership_matches_bruteforce(g, p, 2, 4, rng, 5));
        ++checked;
    }
    CHECK(checked >= 50);
}
