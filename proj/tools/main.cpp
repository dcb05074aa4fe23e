#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnp/algebraic.hpp"
#include "hnp/certificate.hpp"
#include "hnp/groebner.hpp"
#include "hnp/modp.hpp"
#include "hnp/normalize.hpp"
#include "hnp/reduction.hpp"
#include "hnp/sysio.hpp"

using json = nlohmann::ordered_json;
using namespace hnp;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw CLI::ValidationError("range", "expected lo..hi");
    return {std::stoull(s.substr(0, pos)), std::stoull(s.substr(pos + 2))};
}

Rational parse_tau(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, pos)), Integer(s.substr(pos + 1)));
}

// univariate expression in a single variable named y (or the first var of a
// one-variable namespace)
UnivarPoly<Rational> parse_univar(const std::string& expr) {
    PolynomialSystem ns;
    ns.m = 0;
    ns.n = 1;
    ns.var_names = {"y"};
    Polynomial<Integer> p = parse_polynomial(expr, ns);
    std::vector<Rational> c;
    for (const auto& [mo, k] : p.terms()) {
        Integer e = mo.exponent(0);
        if (!e.fits_ulong_p()) throw std::overflow_error("degree too large");
        std::size_t i = e.get_ui();
        if (c.size() <= i) c.resize(i + 1, Rational(0));
        c[i] = Rational(k);
    }
    return UnivarPoly<Rational>(std::move(c));
}

std::string univar_to_string(const UnivarPoly<Rational>& p) {
    Polynomial<Rational> q;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        q.add_term(Monomial::var(0, Integer(static_cast<unsigned long>(i))), p.coeffs()[i]);
    return q.to_string([](unsigned) { return std::string("y"); });
}

json alpha_json(const std::vector<Integer>& alpha) {
    json a = json::array();
    for (const auto& v : alpha) a.push_back(v.get_str());
    return a;
}

json certificate_json(const PolynomialSystem& s, const NullstellensatzCertificate& cert) {
    json g = json::array();
    for (const auto& c : cert.cofactors) g.push_back(render_polynomial(c, s));
    return json{{"a", render_polynomial(cert.a, s)}, {"g", g}, {"scaling", cert.scaling.get_str()}};
}

NullstellensatzCertificate certificate_from_json(const PolynomialSystem& s, const json& j) {
    NullstellensatzCertificate cert;
    cert.a = parse_polynomial(j.at("a").get<std::string>(), s);
    for (const auto& g : j.at("g")) cert.cofactors.push_back(parse_polynomial(g.get<std::string>(), s));
    if (j.contains("scaling")) cert.scaling = Integer(j["scaling"].get<std::string>());
    return cert;
}

// witness JSON: {"minpoly": [expr per y-power], "P": [[expr per y-power]],
// "b": expr}, all expressions over the system's parameters
SolutionWitness witness_from_json(const PolynomialSystem& s, const json& j) {
    PolynomialSystem xs;  // parameter-only namespace
    xs.m = s.m;
    xs.n = 0;
    xs.param_names = s.param_names;
    SolutionWitness w;
    std::vector<PolyQ> mc;
    for (const auto& e : j.at("minpoly"))
        mc.push_back(to_rational(parse_polynomial(e.get<std::string>(), xs)));
    w.minpoly = UnivarPoly<PolyQ>(std::move(mc));
    for (const auto& pi : j.at("P")) {
        std::vector<PolyZ> pc;
        for (const auto& e : pi) pc.push_back(parse_polynomial(e.get<std::string>(), xs));
        w.p.emplace_back(std::move(pc));
    }
    w.b = parse_polynomial(j.at("b").get<std::string>(), xs);
    return w;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

std::string degree_str(const Degree& d) { return d.minus_inf ? "-inf" : d.value.get_str(); }

int run(int argc, char** argv) {
    CLI::App app{"polynomial system satisfiability toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the global budget flags after a subcommand

    Budget budget;
    app.add_option("--max-basis", budget.max_basis, "basis size cap")
        ->capture_default_str();
    app.add_option("--max-terms", budget.max_terms, "per-polynomial term cap")
        ->capture_default_str();
    app.add_option("--max-reductions", budget.max_reductions, "total reduction step cap")
        ->capture_default_str();

    std::string file, file2, expr, expr2, range = "2..500", tau = "1/5", alpha_csv;
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 5, samples = 25;
    std::string d_str;
    unsigned long paper_c = 0;
    std::string oracle = "groebner";
    bool exhaustive = false;
    long c_int = 1;
    std::string dy_str, dx_str;

    // normalize
    auto* norm = app.add_subcommand("normalize", "rewrite to combined degree <= 2");
    norm->add_option("file", file)->required();
    norm->callback([&] {
        PolynomialSystem s = load_system_file(file);
        auto [ns, map] = normalize_system(s);
        std::cout << render_system(ns);
        json defs = json::array();
        for (const auto& d : map.defs)
            defs.push_back({{"var", ns.name_of(d.var_index)}, {"eq_index", d.eq_index}});
        json j{{"orig", {{"m", map.orig_m}, {"n", map.orig_n}, {"k", map.orig_k}}},
               {"normalized", {{"m", map.orig_m}, {"n", map.norm_n}, {"k", map.norm_k}}},
               {"defs", defs}};
        std::cout << j.dump(2) << "\n";
    });

    // hn decide
    auto* hn = app.add_subcommand("hn", "parameter-free satisfiability");
    auto* hnd = hn->add_subcommand("decide", "exact Groebner oracle over Q");
    hnd->add_option("file", file)->required();
    hnd->callback([&] {
        Timer t;
        PolynomialSystem s = load_system_file(file);
        if (s.m != 0) throw CLI::ValidationError("decide", "system must be parameter-free");
        Sat a = hn_decide_integer(s.polys, budget);
        json j{{"instance", file}, {"answer", to_cstring(a)}, {"oracle", "groebner"},
               {"elapsed_ms", t.ms()}};
        std::cout << j.dump(2) << "\n";
    });
    auto* hnm = hn->add_subcommand("decide-modp", "heuristic prime-sampling oracle");
    hnm->add_option("file", file)->required();
    hnm->add_option("--primes", range);
    hnm->add_option("--samples", samples);
    hnm->add_option("--tau", tau);
    hnm->add_option("--seed", seed);
    hnm->callback([&] {
        Timer t;
        PolynomialSystem s = load_system_file(file);
        if (s.m != 0) throw CLI::ValidationError("decide-modp", "system must be parameter-free");
        PrimeSamplerConfig cfg;
        std::tie(cfg.prime_lo, cfg.prime_hi) = parse_range(range);
        cfg.sample_count = samples;
        cfg.tau = parse_tau(tau);
        cfg.seed = seed;
        ModpReport r = hn_decide_modp(s.polys, cfg, budget);
        json per = json::array();
        for (const auto& [p, a] : r.per_prime) per.push_back({{"p", p}, {"answer", to_cstring(a)}});
        json j{{"instance", file}, {"answer", to_cstring(r.answer)}, {"oracle", "modp"},
               {"heuristic", true},
               {"density", r.density.get_str()}, {"seed", seed}, {"per_prime", per},
               {"elapsed_ms", t.ms()}};
        std::cout << j.dump(2) << "\n";
    });
    auto* hnp_density = hn->add_subcommand("prime-density", "per-prime SAT table (CSV)");
    hnp_density->add_option("file", file)->required();
    hnp_density->add_option("--primes", range);
    hnp_density->callback([&] {
        PolynomialSystem s = load_system_file(file);
        if (s.m != 0)
            throw CLI::ValidationError("prime-density", "system must be parameter-free");
        auto [lo, hi] = parse_range(range);
        std::cout << "p,answer\n";
        for (const auto& [p, a] : prime_density_report(s.polys, lo, hi, budget))
            std::cout << p << "," << to_cstring(a) << "\n";
    });

    // hnp decide / decide-elim
    auto* hp = app.add_subcommand("hnp", "parametric satisfiability");
    auto* hpe = hp->add_subcommand("decide-elim", "deterministic elimination oracle");
    hpe->add_option("file", file)->required();
    hpe->callback([&] {
        Timer t;
        PolynomialSystem s = load_system_file(file);
        EliminationResult r = hnp_decide_elimination(s, budget);
        json j{{"instance", file}, {"answer", to_cstring(r.answer)}, {"oracle", "elimination"},
               {"elapsed_ms", t.ms()}};
        if (r.witness_a) {
            Polynomial<Integer> wa = clear_rational_denominators(*r.witness_a);
            j["witness_a"] = render_polynomial(wa, s);
        }
        std::cout << j.dump(2) << "\n";
    });
    auto* hpd = hp->add_subcommand("decide", "randomized specialization reduction");
    hpd->add_option("file", file)->required();
    hpd->add_option("--D", d_str);
    hpd->add_option("--paper-c", paper_c);
    hpd->add_option("--trials", trials);
    hpd->add_option("--oracle", oracle)->check(CLI::IsMember({"groebner", "modp"}));
    hpd->add_option("--seed", seed);
    hpd->callback([&] {
        Timer t;
        PolynomialSystem s = load_system_file(file);
        ReductionConfig cfg;
        if (!d_str.empty()) cfg.explicit_D = Integer(d_str);
        else cfg.paper_c = paper_c ? paper_c : 1;
        cfg.trials = trials;
        cfg.oracle = oracle == "modp" ? OracleKind::Modp : OracleKind::Groebner;
        cfg.seed = seed;
        cfg.budget = budget;
        DecisionTranscript r = hnp_decide_randomized(s, cfg);
        json tr = json::array();
        for (const auto& rec : r.trials)
            tr.push_back({{"alpha", alpha_json(rec.alpha)},
                          {"answer", rec.answer ? to_cstring(*rec.answer) : "NONE"},
                          {"budget_exceeded", rec.budget_exceeded}});
        json j{{"instance", file}, {"answer", to_cstring(r.final_answer)}, {"oracle", oracle},
               {"seed", seed}, {"D", r.D.get_str()}, {"trials", tr}, {"elapsed_ms", t.ms()}};
        std::cout << j.dump(2) << "\n";
    });

    // cert
    auto* cert = app.add_subcommand("cert", "unsatisfiability certificates");
    auto* cf = cert->add_subcommand("find", "extract a certificate (UNSAT systems)");
    cf->add_option("file", file)->required();
    cf->callback([&] {
        PolynomialSystem s = load_system_file(file);
        NullstellensatzCertificate c = find_certificate(s, budget);
        std::cout << certificate_json(s, c).dump(2) << "\n";
    });
    auto* cs = cert->add_subcommand("search", "bounded-degree linear-algebra search");
    cs->add_option("file", file)->required();
    cs->add_option("--dy", dy_str)->required();
    cs->add_option("--dx", dx_str)->required();
    cs->callback([&] {
        PolynomialSystem s = load_system_file(file);
        auto c = bounded_degree_search(s, Integer(dy_str), Integer(dx_str));
        if (c)
            std::cout << certificate_json(s, *c).dump(2) << "\n";
        else
            std::cout << json{{"found", false}}.dump(2) << "\n";
    });
    auto* cv = cert->add_subcommand("verify", "check a certificate file");
    cv->add_option("file", file)->required();
    cv->add_option("cert", file2)->required();
    cv->callback([&] {
        PolynomialSystem s = load_system_file(file);
        NullstellensatzCertificate c = certificate_from_json(s, load_json_file(file2));
        CertificateReport r = verify_certificate(s, c);
        json j{{"instance", file}, {"valid", r.valid},
               {"deg_y_max", degree_str(r.deg_y_max)}, {"deg_x_max", degree_str(r.deg_x_max)},
               {"within_bounds", r.within_thm_bounds}};
        if (!r.valid) j["reason"] = r.reason;
        std::cout << j.dump(2) << "\n";
    });

    // alg
    auto* alg = app.add_subcommand("alg", "univariate algebra utilities");
    auto* ar = alg->add_subcommand("resultant", "Sylvester resultant of two polynomials in y");
    ar->add_option("p", expr)->required();
    ar->add_option("q", expr2)->required();
    ar->callback([&] {
        Rational r = sylvester_resultant(parse_univar(expr), parse_univar(expr2));
        std::cout << json{{"resultant", r.get_str()}}.dump(2) << "\n";
    });
    auto* ad = alg->add_subcommand("disc", "discriminant of a polynomial in y");
    ad->add_option("p", expr)->required();
    ad->callback([&] {
        Rational r = discriminant(parse_univar(expr));
        std::cout << json{{"discriminant", r.get_str()}}.dump(2) << "\n";
    });
    auto* am = alg->add_subcommand("minpoly-sum", "polynomial with roots a + c*b");
    am->add_option("p", expr)->required();
    am->add_option("q", expr2)->required();
    am->add_option("--c", c_int);
    am->callback([&] {
        UnivarPoly<Rational> r = minpoly_sum(parse_univar(expr), parse_univar(expr2), c_int);
        std::cout << json{{"minpoly", univar_to_string(r)}}.dump(2) << "\n";
    });
    auto* ap = alg->add_subcommand("prim-elem", "primitive element of a compositum");
    ap->add_option("p", expr)->required();
    ap->add_option("q", expr2)->required();
    ap->callback([&] {
        PrimitiveElementResult r = primitive_element(parse_univar(expr), parse_univar(expr2));
        json j{{"degenerate", r.degenerate}, {"bound", r.bound.get_str()}};
        if (!r.degenerate) {
            j["c"] = r.c.get_str();
            j["minpoly"] = univar_to_string(r.minpoly);
        }
        std::cout << j.dump(2) << "\n";
    });
    auto* aw = alg->add_subcommand("witness-check", "validate a solution witness");
    aw->add_option("file", file)->required();
    aw->add_option("witness", file2)->required();
    aw->add_option("--alpha", alpha_csv, "comma-separated parameter values for specialization");
    aw->callback([&] {
        PolynomialSystem s = load_system_file(file);
        SolutionWitness w = witness_from_json(s, load_json_file(file2));
        bool ok = check_witness(s, w);
        json j{{"instance", file}, {"valid", ok}};
        if (ok && !alpha_csv.empty()) {
            std::vector<Integer> alpha;
            std::stringstream ss(alpha_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) alpha.emplace_back(tok);
            WitnessSpecialization sp = specialize_witness(s, w, alpha);
            j["specialization"] = json{{"alpha", alpha_json(alpha)},
                                       {"b_nonzero", sp.b_nonzero},
                                       {"b_value", sp.b_value.get_str()},
                                       {"minpoly", univar_to_string(sp.specialized_minpoly)},
                                       {"solution_verified", sp.solution_verified}};
        }
        std::cout << j.dump(2) << "\n";
    });

    // experiments
    auto* ex = app.add_subcommand("experiment", "empirical probability experiments");
    auto* ee = ex->add_subcommand("equisat", "specialization equisatisfiability (CSV)");
    ee->add_option("file", file)->required();
    ee->add_option("--D", d_str)->required();
    ee->add_option("--trials", trials);
    ee->add_option("--seed", seed);
    ee->add_flag("--exhaustive", exhaustive);
    ee->add_option("--paper-c", paper_c);
    ee->callback([&] {
        PolynomialSystem s = load_system_file(file);
        std::optional<unsigned long> pc;
        if (paper_c) pc = paper_c;
        EquisatReport r =
            equisat_experiment(s, Integer(d_str), trials, seed, exhaustive, pc, budget);
        std::cout << "instance,parametric,total,sat,skipped,sat_fraction,unsat_bound,"
                     "exact_bound,bound_holds,exhaustive\n";
        std::cout << file << "," << to_cstring(r.parametric_answer) << "," << r.total << ","
                  << r.sat_count << "," << r.skipped << "," << r.sat_fraction.get_str() << ","
                  << r.unsat_bound.get_str() << ","
                  << (r.exact_bound ? r.exact_bound->get_str() : "") << ","
                  << (r.bound_holds ? "yes" : "no") << "," << (r.exhaustive ? "yes" : "no")
                  << "\n";
    });
    auto* ei = ex->add_subcommand("identity-lemma", "vanishing probability vs d/|S| (CSV)");
    ei->add_option("expr", expr, "polynomial in v1..vN")->required();
    ei->add_option("--range", range)->required();
    ei->add_option("--trials", trials);
    ei->add_option("--seed", seed);
    ei->add_flag("--exhaustive", exhaustive);
    ei->callback([&] {
        PolynomialSystem ns;  // variables v1..v8
        ns.m = 0;
        ns.n = 8;
        for (int i = 1; i <= 8; ++i) ns.var_names.push_back("v" + std::to_string(i));
        Polynomial<Integer> f = parse_polynomial(expr, ns);
        auto [lo, hi] = parse_range(range);
        IdentityLemmaReport r =
            identity_lemma_check(f, Integer(static_cast<unsigned long>(lo)),
                                 Integer(static_cast<unsigned long>(hi)), exhaustive, trials, seed);
        std::cout << "expr,points,zero_fraction,bound,holds,exhaustive\n";
        std::cout << '"' << expr << "\"," << r.points << "," << r.zero_fraction.get_str() << ","
                  << r.bound.get_str() << "," << (r.holds ? "yes" : "no") << ","
                  << (r.exhaustive ? "yes" : "no") << "\n";
    });

    // suite
    std::string corpus_dir = "corpus";
    auto* suite = app.add_subcommand("suite", "corpus ground-truth checks (CSV)");
    suite->add_option("--corpus", corpus_dir);
    suite->add_option("--seed", seed);
    suite->callback([&] {
        std::ifstream labels(corpus_dir + "/labels.csv");
        if (!labels) throw std::runtime_error("cannot open " + corpus_dir + "/labels.csv");
        std::string line;
        std::getline(labels, line);  // header
        std::cout << "instance,label,elimination,randomized,normalized,pass\n";
        bool all_ok = true;
        std::vector<std::string> rows;
        while (std::getline(labels, line)) {
            if (line.empty()) continue;
            auto c1 = line.find(',');
            auto c2 = line.find(',', c1 + 1);
            std::string name = line.substr(0, c1);
            std::string label = line.substr(c1 + 1, c2 - c1 - 1);
            PolynomialSystem s = load_system_file(corpus_dir + "/" + name + ".sys");
            Sat want = label == "SAT" ? Sat::SAT : Sat::UNSAT;
            Sat elim = hnp_decide_elimination(s, budget).answer;
            ReductionConfig cfg;
            cfg.explicit_D = Integer(1000000);
            cfg.trials = 5;
            cfg.seed = seed;
            cfg.budget = budget;
            Sat rnd = hnp_decide_randomized(s, cfg).final_answer;
            Sat norm_ans = hnp_decide_elimination(normalize_system(s).first, budget).answer;
            bool ok = elim == want && rnd == want && norm_ans == want;
            all_ok = all_ok && ok;
            rows.push_back(name + "," + label + "," + to_cstring(elim) + "," + to_cstring(rnd) +
                           "," + to_cstring(norm_ans) + "," + (ok ? "pass" : "FAIL"));
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& r : rows) std::cout << r << "\n";
        if (!all_ok) throw std::runtime_error("suite failure");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors always map to 1
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
