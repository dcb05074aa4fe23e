#include "hnp/reduction.hpp"

#include <mpfr.h>

#include <cmath>

namespace hnp {

namespace {

// ceil((s * log2 s)^c) as an exact integer; exact whenever s is a power of two
Integer ceil_exponent(unsigned long s, unsigned long c) {
    mpfr_t x;
    mpfr_init2(x, 256);
    mpfr_set_ui(x, s, MPFR_RNDN);
    mpfr_log2(x, x, MPFR_RNDN);
    mpfr_mul_ui(x, x, s, MPFR_RNDN);
    mpfr_pow_ui(x, x, c, MPFR_RNDN);
    mpfr_ceil(x, x);
    Integer e;
    mpfr_get_z(e.get_mpz_t(), x, MPFR_RNDN);
    mpfr_clear(x);
    return e;
}

}  // namespace

Integer compute_D(unsigned long s, unsigned long c) {
    if (c < 1) throw std::invalid_argument("c must be >= 1");
    if (s <= 1) return 3;
    Integer e = ceil_exponent(s, c);
    if (!e.fits_ulong_p()) throw std::overflow_error("exponent of D too large");
    Integer d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), e.get_ui());
    return 3 * d;
}

std::vector<Integer> sample_alpha(unsigned m, const Integer& D, RandomStream& rng) {
    std::vector<Integer> alpha;
    alpha.reserve(m);
    for (unsigned i = 0; i < m; ++i) alpha.push_back(rng.uniform_1_to(D));
    return alpha;
}

namespace {

std::optional<Sat> run_oracle(const std::vector<Polynomial<Integer>>& polys,
                              const ReductionConfig& cfg, RandomStream& rng,
                              bool& budget_exceeded) {
    try {
        if (cfg.oracle == OracleKind::Groebner) return hn_decide_integer(polys, cfg.budget);
        // modp oracle with one-sided amplification: SAT iff every repetition
        // says SAT
        for (std::size_t r = 0; r < std::max<std::size_t>(cfg.amplification, 1); ++r) {
            PrimeSamplerConfig pc = cfg.modp;
            pc.seed = rng.next_word();
            if (hn_decide_modp(polys, pc, cfg.budget).answer == Sat::UNSAT) return Sat::UNSAT;
        }
        return Sat::SAT;
    } catch (const BudgetExceeded&) {
        budget_exceeded = true;
        return std::nullopt;
    }
}

}  // namespace

DecisionTranscript hnp_decide_randomized(const PolynomialSystem& s, const ReductionConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    DecisionTranscript out;
    out.D = cfg.effective_D(s);
    out.seed = cfg.seed;
    out.oracle = cfg.oracle;

    std::size_t sat = 0, unsat = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        RandomStream rng(cfg.seed, t);
        TrialRecord rec;
        rec.alpha = sample_alpha(s.m, out.D, rng);
        rec.answer = run_oracle(s.specialized(rec.alpha), cfg, rng, rec.budget_exceeded);
        if (rec.answer) {
            ++out.usable_trials;
            (*rec.answer == Sat::SAT ? sat : unsat)++;
        }
        out.trials.push_back(std::move(rec));
    }
    out.final_answer = sat > unsat ? Sat::SAT : Sat::UNSAT;
    return out;
}

namespace {

Rational frac(std::size_t num, std::size_t den) {
    return make_rational(Integer(static_cast<unsigned long>(num)),
                         Integer(static_cast<unsigned long>(den)));
}

// advance a vector over {1..D}^m in odometer order; false when wrapped
bool next_point(std::vector<Integer>& v, const Integer& D) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < D) {
            ++v[i];
            for (std::size_t j = 0; j < i; ++j) v[j] = 1;
            return true;
        }
    }
    return false;
}

}  // namespace

EquisatReport equisat_experiment(const PolynomialSystem& s, const Integer& D, std::size_t trials,
                                 std::uint64_t seed, bool exhaustive,
                                 std::optional<unsigned long> paper_c, const Budget& budget) {
    if (D < 1) throw std::invalid_argument("D must be >= 1");
    EquisatReport rep;
    rep.exhaustive = exhaustive;
    rep.parametric_answer = hnp_decide_elimination(s, budget).answer;

    unsigned long sm = size_measure(s);
    Integer two_s = 1;
    mpz_mul_2exp(two_s.get_mpz_t(), two_s.get_mpz_t(), sm);
    rep.unsat_bound = make_rational(Integer(sm) * two_s, D);
    if (paper_c) {
        Integer e = compute_D(sm, *paper_c) / 3;  // 2^((s log s)^c) rounded up
        rep.sat_bound = Rational(1) - make_rational(e, D);
    }
    if (rep.parametric_answer == Sat::UNSAT) {
        try {
            NullstellensatzCertificate cert = find_certificate(s, budget);
            Degree dg = cert.a.total_degree();
            if (!dg.minus_inf) rep.exact_bound = make_rational(dg.value, D);
        } catch (const BudgetExceeded&) {
        }
    }

    auto run_one = [&](const std::vector<Integer>& alpha) {
        ++rep.total;
        try {
            if (hn_decide_integer(s.specialized(alpha), budget) == Sat::SAT) ++rep.sat_count;
        } catch (const BudgetExceeded&) {
            ++rep.skipped;
        }
    };

    if (exhaustive) {
        if (s.m == 0) {
            run_one({});
        } else {
            Integer count = 1;
            for (unsigned i = 0; i < s.m; ++i) count *= D;
            if (!count.fits_ulong_p() || count.get_ui() > 10000000)
                throw std::invalid_argument("exhaustive cube too large");
            std::vector<Integer> alpha(s.m, Integer(1));
            do {
                run_one(alpha);
            } while (next_point(alpha, D));
        }
    } else {
        if (trials < 1) throw std::invalid_argument("trials must be >= 1");
        for (std::size_t t = 0; t < trials; ++t) {
            RandomStream rng(seed, t);
            run_one(sample_alpha(s.m, D, rng));
        }
    }

    std::size_t decided = rep.total - rep.skipped;
    rep.sat_fraction = decided ? frac(rep.sat_count, decided) : Rational(0);

    if (decided == 0) {
        rep.bound_holds = false;
    } else if (rep.parametric_answer == Sat::UNSAT) {
        Rational bound = rep.exact_bound ? *rep.exact_bound : rep.unsat_bound;
        if (exhaustive) {
            rep.bound_holds = rep.sat_fraction <= bound;
        } else {
            // binomial slack: three standard deviations at the bound rate
            double p = std::min(1.0, bound.get_d());
            double slack = 3.0 * std::sqrt(std::max(p * (1 - p), 1e-12) * decided);
            rep.bound_holds = rep.sat_count <= p * decided + slack;
        }
    } else {
        rep.bound_holds = !rep.sat_bound || rep.sat_fraction >= *rep.sat_bound ||
                          (!exhaustive && *rep.sat_bound < 1);
    }
    return rep;
}

IdentityLemmaReport identity_lemma_check(const Polynomial<Integer>& f, const Integer& lo,
                                         const Integer& hi, bool exhaustive, std::size_t trials,
                                         std::uint64_t seed, std::size_t max_points) {
    if (f.is_zero()) throw std::invalid_argument("identity lemma applies to nonzero polynomials");
    if (hi < lo) throw std::invalid_argument("empty range");
    Integer card = hi - lo + 1;

    // the variables that actually occur
    std::vector<unsigned> vars;
    for (const auto& [mo, c] : f.terms())
        for (const auto& [v, e] : mo.exps)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());

    Degree dg = f.total_degree();
    IdentityLemmaReport rep;
    rep.exhaustive = exhaustive;
    rep.bound = make_rational(dg.value, card);

    auto is_zero_at = [&](const std::vector<Integer>& point) {
        std::map<unsigned, Polynomial<Integer>> values;
        for (std::size_t i = 0; i < vars.size(); ++i)
            values[vars[i]] = Polynomial<Integer>(point[i]);
        return f.substitute(values).is_zero();
    };

    std::size_t zeros = 0;
    if (exhaustive) {
        Integer count = 1;
        for (std::size_t i = 0; i < vars.size(); ++i) count *= card;
        if (!count.fits_ulong_p() || count.get_ui() > max_points)
            throw BudgetExceeded("exhaustive point count");
        std::vector<Integer> offs(vars.size(), Integer(1));
        do {
            std::vector<Integer> point;
            point.reserve(vars.size());
            for (const auto& o : offs) point.push_back(lo + o - 1);
            if (is_zero_at(point)) ++zeros;
            ++rep.points;
        } while (next_point(offs, card));
    } else {
        if (trials < 1) throw std::invalid_argument("trials must be >= 1");
        RandomStream rng(seed);
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<Integer> point;
            point.reserve(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i)
                point.push_back(lo + rng.uniform_1_to(card) - 1);
            if (is_zero_at(point)) ++zeros;
            ++rep.points;
        }
    }

    rep.zero_fraction = frac(zeros, rep.points);
    if (exhaustive) {
        rep.holds = rep.zero_fraction <= rep.bound;
    } else {
        double p = std::min(1.0, rep.bound.get_d());
        double slack = 3.0 * std::sqrt(std::max(p * (1 - p), 1e-12) * rep.points);
        rep.holds = zeros <= p * rep.points + slack;
    }
    return rep;
}

}  // namespace hnp
