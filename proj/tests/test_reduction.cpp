#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hnp/reduction.hpp"
#include "util.hpp"

using namespace hnp;

TEST_CASE("compute_D") {
    CHECK(compute_D(2, 1) == 12);   // exponent 2*log2(2) = 2
    CHECK(compute_D(1, 1) == 3);    // exponent 0
    CHECK(compute_D(1, 7) == 3);
    CHECK(compute_D(4, 1) == 768);  // exponent 8
    CHECK(compute_D(2, 2) == 48);   // exponent 4
    CHECK(compute_D(3, 1) == 96);   // ceil(3*log2(3)) = 5
    CHECK(compute_D(4, 2) == 3 * int_pow(2, 64));
    CHECK_THROWS_AS(compute_D(2, 0), std::invalid_argument);
}

TEST_CASE("sample_alpha") {
    RandomStream rng(4, 0);
    std::vector<Integer> ones = sample_alpha(3, 1, rng);
    CHECK(ones == std::vector<Integer>{1, 1, 1});

    RandomStream r1(8, 2), r2(8, 2);
    CHECK(sample_alpha(4, Integer(1000000), r1) == sample_alpha(4, Integer(1000000), r2));

    for (const Integer& v : sample_alpha(50, Integer(10), rng)) {
        CHECK(v >= 1);
        CHECK(v <= 10);
    }
}

TEST_CASE("randomized reduction on hand systems") {
    ReductionConfig cfg;
    cfg.explicit_D = Integer(1000000);
    cfg.trials = 5;
    cfg.seed = 7;

    DecisionTranscript un = hnp_decide_randomized(testutil::corpus_system("yx_y2x"), cfg);
    CHECK(un.final_answer == Sat::UNSAT);
    CHECK(un.trials.size() == 5);
    CHECK(un.usable_trials == 5);

    DecisionTranscript sat = hnp_decide_randomized(testutil::corpus_system("xy1"), cfg);
    CHECK(sat.final_answer == Sat::SAT);
    for (const auto& t : sat.trials) CHECK(*t.answer == Sat::SAT);  // alpha >= 1 never kills b=x

    DecisionTranscript triv = hnp_decide_randomized(testutil::corpus_system("y_yp1"), cfg);
    for (const auto& t : triv.trials) CHECK(*t.answer == Sat::UNSAT);
}

TEST_CASE("transcripts replay byte-identically") {
    ReductionConfig cfg;
    cfg.explicit_D = Integer(1000000);
    cfg.trials = 4;
    cfg.seed = 12;
    PolynomialSystem s = testutil::corpus_system("y2x");
    DecisionTranscript a = hnp_decide_randomized(s, cfg);
    DecisionTranscript b = hnp_decide_randomized(s, cfg);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].alpha == b.trials[i].alpha);
        CHECK(*a.trials[i].answer == *b.trials[i].answer);
    }
    cfg.seed = 13;
    DecisionTranscript c = hnp_decide_randomized(s, cfg);
    bool same = true;
    for (std::size_t i = 0; i < a.trials.size(); ++i)
        if (!(a.trials[i].alpha == c.trials[i].alpha)) same = false;
    CHECK_FALSE(same);
}

TEST_CASE("paper-mode D uses the size measure") {
    PolynomialSystem s = testutil::corpus_system("yx_y2x");  // m=1, n=1, k=2 -> s=2
    ReductionConfig cfg;
    cfg.paper_c = 1;
    CHECK(cfg.effective_D(s) == 12);
    cfg.explicit_D = Integer(0);
    CHECK_THROWS_AS(cfg.effective_D(s), std::invalid_argument);
}

TEST_CASE("modp oracle path with amplification") {
    ReductionConfig cfg;
    cfg.explicit_D = Integer(50);
    cfg.trials = 3;
    cfg.seed = 3;
    cfg.oracle = OracleKind::Modp;
    cfg.modp.prime_lo = 2;
    cfg.modp.prime_hi = 300;
    cfg.modp.sample_count = 20;

    CHECK(hnp_decide_randomized(testutil::corpus_system("y_yp1"), cfg).final_answer ==
          Sat::UNSAT);
    CHECK(hnp_decide_randomized(testutil::corpus_system("yx4"), cfg).final_answer == Sat::SAT);
}

TEST_CASE("equisat experiment, exhaustive hand values") {
    EquisatReport r =
        equisat_experiment(testutil::corpus_system("yx_y2x"), 50, 0, 0, /*exhaustive=*/true);
    CHECK(r.parametric_answer == Sat::UNSAT);
    CHECK(r.total == 50);
    CHECK(r.sat_count == 1);  // only alpha = 1 satisfies alpha^2 = alpha
    CHECK(r.sat_fraction == make_rational(1, 50));
    REQUIRE(r.exact_bound.has_value());
    CHECK(*r.exact_bound == make_rational(2, 50));
    CHECK(r.bound_holds);

    EquisatReport r2 =
        equisat_experiment(testutil::corpus_system("xy1"), 50, 0, 0, /*exhaustive=*/true);
    CHECK(r2.parametric_answer == Sat::SAT);
    CHECK(r2.sat_fraction == 1);

    EquisatReport r3 =
        equisat_experiment(testutil::corpus_system("y_yp1"), 20, 0, 0, /*exhaustive=*/true);
    CHECK(r3.sat_fraction == 0);
    CHECK(r3.bound_holds);
}

TEST_CASE("equisat experiment, sampled mode") {
    EquisatReport r = equisat_experiment(testutil::corpus_system("yx_y2x"), Integer(1000000),
                                         40, /*seed=*/9, /*exhaustive=*/false);
    CHECK(r.total == 40);
    CHECK(r.sat_count == 0);  // failure probability 2/10^6 per trial
    CHECK(r.bound_holds);
    CHECK(r.unsat_bound == make_rational(Integer(2) * 4, Integer(1000000)));  // s*2^s/D, s=2
}

TEST_CASE("equisat paper bound field") {
    EquisatReport r = equisat_experiment(testutil::corpus_system("xy1"), Integer(12), 0, 0,
                                         /*exhaustive=*/true, 1ul);
    REQUIRE(r.sat_bound.has_value());
    // s = 1 for {x*y - 1}: D_paper = 3, bound = 1 - 1/12
    CHECK(*r.sat_bound == Rational(1) - make_rational(1, 12));
    CHECK(r.bound_holds);
}

TEST_CASE("identity lemma, exhaustive hand values") {
    Polynomial<Integer> x1x2 =
        Polynomial<Integer>::variable(0) * Polynomial<Integer>::variable(1);
    IdentityLemmaReport r = identity_lemma_check(x1x2, 0, 9, /*exhaustive=*/true);
    CHECK(r.points == 100);
    CHECK(r.zero_fraction == make_rational(19, 100));
    CHECK(r.bound == make_rational(2, 10));
    CHECK(r.holds);

    IdentityLemmaReport c = identity_lemma_check(Polynomial<Integer>(Integer(7)), 0, 9, true);
    CHECK(c.zero_fraction == 0);
    CHECK(c.holds);

    // x - 5 over {1..10}: bound is tight
    Polynomial<Integer> xm5 = Polynomial<Integer>::variable(0) - Polynomial<Integer>(Integer(5));
    IdentityLemmaReport t = identity_lemma_check(xm5, 1, 10, true);
    CHECK(t.zero_fraction == make_rational(1, 10));
    CHECK(t.bound == make_rational(1, 10));
    CHECK(t.holds);

    CHECK_THROWS_AS(identity_lemma_check(Polynomial<Integer>(), 0, 9, true),
                    std::invalid_argument);
}

TEST_CASE("identity lemma, sampled mode stays within binomial slack") {
    Polynomial<Integer> x1x2 =
        Polynomial<Integer>::variable(0) * Polynomial<Integer>::variable(1);
    IdentityLemmaReport r = identity_lemma_check(x1x2, 0, 9, /*exhaustive=*/false, 20000, 77);
    CHECK(r.points == 20000);
    CHECK(r.holds);
    // empirical fraction near 19/100
    double f = r.zero_fraction.get_d();
    CHECK(f > 0.15);
    CHECK(f < 0.25);
}

TEST_CASE("exhaustive budgets are enforced") {
    Polynomial<Integer> f = Polynomial<Integer>::variable(0) * Polynomial<Integer>::variable(1) *
                            Polynomial<Integer>::variable(2);
    CHECK_THROWS_AS(identity_lemma_check(f, 0, 999, /*exhaustive=*/true), BudgetExceeded);
}
