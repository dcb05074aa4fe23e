#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hnp/polynomial.hpp"
#include "hnp/rng.hpp"

using namespace hnp;

namespace {

using PZ = Polynomial<Integer>;

PZ random_poly(RandomStream& rng, unsigned vars, unsigned max_deg, unsigned terms) {
    PZ p;
    for (unsigned t = 0; t < terms; ++t) {
        Monomial mo;
        for (unsigned v = 0; v < vars; ++v)
            mo = mo * Monomial::var(v, Integer(static_cast<unsigned long>(rng.below(max_deg + 1))));
        p.add_term(mo, Integer(static_cast<long>(rng.below(21)) - 10));
    }
    return p;
}

Integer eval(const PZ& p, const std::vector<Integer>& point) {
    PZ v = specialize_block(p, 0, point);
    REQUIRE(v.is_constant());
    return v.constant_term();
}

}  // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a = Monomial::var(0, 2) * Monomial::var(1, 3);
    Monomial b = Monomial::var(0, 1) * Monomial::var(2, 4);
    CHECK(a.total_degree() == 5);
    CHECK((a * b).exponent(0) == 3);
    CHECK((a * b).exponent(2) == 4);
    CHECK(lcm(a, b).exponent(0) == 2);
    CHECK(b.divides(a * b));
    CHECK_FALSE(a.divides(b));
    CHECK((a * b).divide_by(b) == a);
    CHECK(Monomial::var(0).coprime_with(Monomial::var(1)));
    CHECK_FALSE(a.coprime_with(b));
    CHECK(a.block_degree(0, 1) == 2);
    CHECK(a.block_degree(1, 3) == 3);
}

TEST_CASE("monomial orders") {
    Monomial x = Monomial::var(0), y = Monomial::var(1);
    // canonical = graded lex: x^2 > xy > y^2 > x > y > 1
    CHECK(canonical_compare(x * x, x * y) > 0);
    CHECK(canonical_compare(x * y, y * y) > 0);
    CHECK(canonical_compare(y * y, x) > 0);
    CHECK(canonical_compare(x, y) > 0);
    CHECK(canonical_compare(y, Monomial::one()) > 0);

    // elimination order: any monomial with a y-factor beats any pure-x one
    MonomialOrder elim = MonomialOrder::elim_y(1);
    CHECK(elim.less(x * x * x, y));
    CHECK(elim.less(x, y * x));
    CHECK(elim.less(y, y * y));

    MonomialOrder grev = MonomialOrder::grevlex();
    CHECK(grev.less(y, x));
    CHECK(grev.less(x, x * y));
}

TEST_CASE("arbitrary-precision exponents survive monomial ops") {
    Integer huge("123456789012345678901234567890");
    Monomial a = Monomial::var(0, huge);
    CHECK(a.total_degree() == huge);
    CHECK((a * a).exponent(0) == huge * 2);
    CHECK(a.divides(a * a));
}

TEST_CASE("polynomial ring axioms on random samples") {
    RandomStream rng(42);
    for (int i = 0; i < 30; ++i) {
        PZ a = random_poly(rng, 3, 3, 4);
        PZ b = random_poly(rng, 3, 3, 4);
        PZ c = random_poly(rng, 3, 3, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == PZ());
        CHECK(a * PZ(Integer(1)) == a);
        CHECK(a * PZ() == PZ());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    RandomStream rng(7);
    for (int i = 0; i < 20; ++i) {
        PZ a = random_poly(rng, 2, 3, 4);
        PZ b = random_poly(rng, 2, 3, 4);
        std::vector<Integer> pt = {Integer(static_cast<long>(rng.below(19)) - 9),
                                   Integer(static_cast<long>(rng.below(19)) - 9)};
        CHECK(eval(a + b, pt) == eval(a, pt) + eval(b, pt));
        CHECK(eval(a * b, pt) == eval(a, pt) * eval(b, pt));
    }
}

TEST_CASE("reduce_mod_p commutes with arithmetic") {
    RandomStream rng(11);
    for (int i = 0; i < 20; ++i) {
        PZ a = random_poly(rng, 2, 3, 4);
        PZ b = random_poly(rng, 2, 3, 4);
        CHECK(reduce_mod_p(a * b, 31) == reduce_mod_p(a, 31) * reduce_mod_p(b, 31));
        CHECK(reduce_mod_p(a + b, 31) == reduce_mod_p(a, 31) + reduce_mod_p(b, 31));
    }
    CHECK_THROWS_AS(reduce_mod_p(PZ(Integer(1)), 30), std::invalid_argument);
}

TEST_CASE("try_divide is exact division") {
    RandomStream rng(3);
    for (int i = 0; i < 20; ++i) {
        PZ a = random_poly(rng, 2, 2, 3);
        PZ b = random_poly(rng, 2, 2, 3);
        if (b.is_zero()) continue;
        auto q = try_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    // x+1 does not divide x^2+1
    PZ x = PZ::variable(0);
    CHECK_FALSE(try_divide(x * x + PZ(Integer(1)), x + PZ(Integer(1))).has_value());
    CHECK_THROWS_AS(try_divide(x, PZ()), std::domain_error);
}

TEST_CASE("pow and constants") {
    PZ x = PZ::variable(0);
    CHECK((x + PZ(Integer(1))).pow(2) == x * x + x.scaled(Integer(2)) + PZ(Integer(1)));
    CHECK(x.pow(0) == PZ(Integer(1)));
    CHECK(PZ().total_degree() == Degree::neg_infinity());
    CHECK(PZ(Integer(5)).total_degree() == Degree(Integer(0)));
}

TEST_CASE("content and denominators") {
    PZ x = PZ::variable(0);
    PZ p = x.scaled(Integer(6)) + PZ(Integer(9));
    CHECK(content(p) == 3);
    CHECK(divide_content(p, Integer(3)) == x.scaled(Integer(2)) + PZ(Integer(3)));

    Polynomial<Rational> q;
    q.add_term(Monomial::var(0), make_rational(1, 2));
    q.add_term(Monomial::one(), make_rational(1, 3));
    CHECK(denominator_lcm(q) == 6);
    PZ cleared = clear_rational_denominators(q);
    CHECK(cleared == x.scaled(Integer(3)) + PZ(Integer(2)));
}

TEST_CASE("Fp field arithmetic") {
    Fp a(3, 7), b(5, 7);
    CHECK((a + b).v == 1);
    CHECK((a * b).v == 1);
    CHECK((a - b).v == 5);
    CHECK((-a).v == 4);
    CHECK((a / b).v == 2);  // 3 * 5^{-1} = 3 * 3 = 9 = 2
    CHECK(a.inverse().v == 5);
    // modulus-free constants adopt the operand's modulus
    CHECK((Fp(1) + Fp(6, 7)).v == 0);
    CHECK_THROWS_AS((void)(Fp(1, 5) + Fp(1, 7)), std::invalid_argument);
    CHECK(is_prime(Integer(97)));
    CHECK_FALSE(is_prime(Integer(91)));
}

TEST_CASE("random streams are deterministic and disjoint") {
    RandomStream a(123, 0), b(123, 0), c(123, 1);
    CHECK(a.next_word() == b.next_word());
    CHECK(a.next_word() == b.next_word());
    RandomStream d(123, 1);
    CHECK(c.next_word() == d.next_word());
    RandomStream e(123, 0), f(123, 1);
    CHECK(e.next_word() != f.next_word());
}

TEST_CASE("uniform_1_to covers the range") {
    RandomStream rng(5);
    CHECK(rng.uniform_1_to(1) == 1);
    std::vector<int> counts(6, 0);
    for (int i = 0; i < 60000; ++i) {
        Integer v = rng.uniform_1_to(6);
        REQUIRE(v >= 1);
        REQUIRE(v <= 6);
        counts[v.get_ui() - 1]++;
    }
    for (int c : counts) {
        // 1/6 +- 0.01 of 60000
        CHECK(c > 9400);
        CHECK(c < 10600);
    }
    // arbitrary-precision draws stay in range
    Integer big = int_pow(10, 30);
    for (int i = 0; i < 100; ++i) {
        Integer v = rng.uniform_1_to(big);
        CHECK(v >= 1);
        CHECK(v <= big);
    }
}
