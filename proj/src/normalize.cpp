#include "hnp/normalize.hpp"

#include <map>
#include <set>
#include <string>

namespace hnp {

namespace {

class Normalizer {
public:
    explicit Normalizer(const PolynomialSystem& s) : in_(s), next_(s.m + s.n) {
        for (unsigned i = 0; i < s.m + s.n; ++i) taken_.insert(s.name_of(i));
    }

    std::pair<PolynomialSystem, NormalizationMap> run() {
        std::vector<Polynomial<Integer>> transformed;
        for (const auto& f : in_.polys) transformed.push_back(transform(f));

        PolynomialSystem out;
        out.m = in_.m;
        out.param_names = in_.param_names;
        out.var_names = in_.var_names;
        out.var_names.resize(next_ - in_.m);
        for (const auto& [idx, name] : fresh_names_) out.var_names[idx - in_.m] = name;
        out.n = next_ - in_.m;
        out.polys = defs_;
        for (auto& f : transformed) out.polys.push_back(std::move(f));

        NormalizationMap map;
        map.orig_m = in_.m;
        map.orig_n = in_.n;
        map.orig_k = in_.k();
        map.norm_n = out.n;
        map.norm_k = out.k();
        for (std::size_t i = 0; i < def_vars_.size(); ++i)
            map.defs.push_back({def_vars_[i], i});

        check_postconditions(out);
        return {std::move(out), std::move(map)};
    }

private:
    // introduce fresh y-variable with defining polynomial (var - rhs)
    unsigned fresh(const Polynomial<Integer>& rhs, const std::string& hint) {
        unsigned idx = next_++;
        std::string name = hint;
        for (int suffix = 2; taken_.count(name); ++suffix)
            name = hint + "_" + std::to_string(suffix);
        taken_.insert(name);
        fresh_names_.emplace_back(idx, name);
        defs_.push_back(Polynomial<Integer>::variable(idx) - rhs);
        def_vars_.push_back(idx);
        return idx;
    }

    // variable representing the product of two variables
    unsigned prod_var(unsigned a, unsigned b) {
        auto key = std::minmax(a, b);
        auto it = prod_cache_.find(key);
        if (it != prod_cache_.end()) return it->second;
        Polynomial<Integer> rhs =
            Polynomial<Integer>::variable(key.first) * Polynomial<Integer>::variable(key.second);
        unsigned v = fresh(rhs, "t" + std::to_string(defs_.size() + 1));
        prod_cache_[key] = v;
        return v;
    }

    // variable representing 2*v; a copy h = v keeps the defining polynomial
    // d - v - h inside the {-1,0,1} coefficient set
    unsigned double_var(unsigned v) {
        auto it = dbl_cache_.find(v);
        if (it != dbl_cache_.end()) return it->second;
        Polynomial<Integer> x = Polynomial<Integer>::variable(v);
        unsigned h = fresh(x, "c" + std::to_string(defs_.size() + 1));
        unsigned d = fresh(x + Polynomial<Integer>::variable(h),
                           "d" + std::to_string(defs_.size() + 1));
        dbl_cache_[v] = d;
        return d;
    }

    unsigned one_var() {
        if (!one_) one_ = fresh(Polynomial<Integer>(Integer(1)), "u1");
        return *one_;
    }

    // variable representing base^e via iterated squaring (e >= 1)
    unsigned power_var(unsigned base, const Integer& e) {
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        std::vector<unsigned> squares(bits);  // squares[j] = base^(2^j)
        squares[0] = base;
        for (std::size_t j = 1; j < bits; ++j) squares[j] = prod_var(squares[j - 1], squares[j - 1]);
        std::vector<unsigned> factors;
        for (std::size_t j = 0; j < bits; ++j)
            if (mpz_tstbit(e.get_mpz_t(), j)) factors.push_back(squares[j]);
        unsigned acc = factors[0];
        for (std::size_t j = 1; j < factors.size(); ++j) acc = prod_var(acc, factors[j]);
        return acc;
    }

    // reduce a monomial to an equivalent monomial of combined degree <= 2
    Monomial flatten_monomial(const Monomial& mo) {
        if (mo.total_degree() <= 2) return mo;
        std::vector<unsigned> factors;
        for (const auto& [v, e] : mo.exps) {
            if (e == 1)
                factors.push_back(v);
            else
                factors.push_back(power_var(v, e));
        }
        while (factors.size() > 2) {
            unsigned w = prod_var(factors[factors.size() - 2], factors.back());
            factors.pop_back();
            factors.back() = w;
        }
        if (factors.size() == 1) return Monomial::var(factors[0]);
        return Monomial::var(factors[0]) * Monomial::var(factors[1]);
    }

    // single variable equivalent to the monomial (needed for doubling chains)
    unsigned monomial_as_var(const Monomial& mo) {
        Monomial flat = flatten_monomial(mo);
        if (flat.is_one()) return one_var();
        if (flat.exps.size() == 1 && flat.exps[0].second == 1) return flat.exps[0].first;
        if (flat.exps.size() == 1)  // v^2
            return prod_var(flat.exps[0].first, flat.exps[0].first);
        return prod_var(flat.exps[0].first, flat.exps[1].first);
    }

    Polynomial<Integer> transform(const Polynomial<Integer>& f) {
        Polynomial<Integer> out;
        for (const auto& [mo, c] : f.terms()) {
            Integer mag = abs(c);
            int sign = sgn(c);
            if (mag == 1) {
                out.add_term(flatten_monomial(mo), Integer(sign));
                continue;
            }
            // |c| >= 2: name the monomial, then build |c| by binary doubling
            unsigned t = monomial_as_var(mo);
            std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
            unsigned chain = t;  // chain = t * 2^j
            for (std::size_t j = 0; j < bits; ++j) {
                if (j > 0) chain = double_var(chain);
                if (mpz_tstbit(mag.get_mpz_t(), j))
                    out.add_term(Monomial::var(chain), Integer(sign));
            }
        }
        return out;
    }

    void check_postconditions(const PolynomialSystem& out) const {
        for (const auto& p : out.polys) {
            if (Degree(Integer(2)) < p.total_degree())
                throw std::logic_error("normalization produced degree > 2");
            for (const auto& [mo, c] : p.terms())
                if (c != 1 && c != -1)
                    throw std::logic_error("normalization produced coefficient outside {-1,0,1}");
        }
    }

    const PolynomialSystem& in_;
    unsigned next_;
    std::vector<Polynomial<Integer>> defs_;
    std::vector<unsigned> def_vars_;
    std::vector<std::pair<unsigned, std::string>> fresh_names_;
    std::set<std::string> taken_;
    std::map<std::pair<unsigned, unsigned>, unsigned> prod_cache_;
    std::map<unsigned, unsigned> dbl_cache_;
    std::optional<unsigned> one_;
};

}  // namespace

std::pair<PolynomialSystem, NormalizationMap> normalize_system(const PolynomialSystem& s) {
    return Normalizer(s).run();
}

}  // namespace hnp
