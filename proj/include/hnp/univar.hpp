#pragma once

#include <vector>

#include "hnp/polynomial.hpp"

namespace hnp {

// generic-coefficient helpers for nested polynomial rings
template <class R>
bool coeff_is_zero(const Polynomial<R>& p) {
    return p.is_zero();
}
template <class R>
Polynomial<R> coeff_one(const Polynomial<R>&) {
    return Polynomial<R>(R(1));
}
template <class R>
Polynomial<R> coeff_exact_div(const Polynomial<R>& a, const Polynomial<R>& b) {
    auto q = try_divide(a, b);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *q;
}
template <class R>
std::string coeff_to_string(const Polynomial<R>& p) {
    return p.to_string([](unsigned i) { return "v" + std::to_string(i + 1); });
}

// Dense univariate polynomial over a ring R; coefficient list c0..cN with a
// nonzero leading coefficient (empty = zero polynomial).
template <class R>
class UnivarPoly {
public:
    UnivarPoly() = default;
    explicit UnivarPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivarPoly constant(R c) {
        UnivarPoly p;
        if (!coeff_is_zero(c)) p.c_.push_back(std::move(c));
        return p;
    }

    const std::vector<R>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const R& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    R coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }

    bool is_monic() const { return !c_.empty() && c_.back() == coeff_one(c_.back()); }

    friend UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b) {
        std::vector<R> r(std::max(a.c_.size(), b.c_.size()), R());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] + b.c_[i];
        }
        return UnivarPoly(std::move(r));
    }
    friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) {
        std::vector<R> r(std::max(a.c_.size(), b.c_.size()), R());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] - b.c_[i];
        }
        return UnivarPoly(std::move(r));
    }
    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
        if (a.is_zero() || b.is_zero()) return UnivarPoly();
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UnivarPoly(std::move(r));
    }
    UnivarPoly scaled(const R& s) const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(c * s);
        return UnivarPoly(std::move(r));
    }
    friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) { return a.c_ == b.c_; }

    UnivarPoly derivative() const {
        if (c_.size() <= 1) return UnivarPoly();
        std::vector<R> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            R term = c_[i];
            for (std::size_t j = 1; j < i; ++j) term = term + c_[i];
            r.push_back(term);
        }
        return UnivarPoly(std::move(r));
    }

    template <class V>
    V evaluate(const V& point) const {
        V acc = V();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + V(*it);
        return acc;
    }

    UnivarPoly pow(unsigned long e) const {
        if (c_.empty()) {
            if (e == 0) throw std::domain_error("0^0 of zero polynomial");
            return UnivarPoly();
        }
        UnivarPoly result = constant(coeff_one(c_.back()));
        UnivarPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = (e >>= 1) ? base * base : base;
        }
        return result;
    }

    // remainder of division by a monic divisor (coefficients stay in R)
    UnivarPoly rem_by_monic(const UnivarPoly& d) const {
        if (!d.is_monic()) throw std::domain_error("division requires a monic divisor");
        UnivarPoly r = *this;
        while (r.degree() >= d.degree()) {
            R lead = r.c_.back();
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            std::vector<R> sub(shift, R());
            for (const auto& c : d.c_) sub.push_back(c * lead);
            r = r - UnivarPoly(std::move(sub));
        }
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

// Sylvester resultant via fraction-free Bareiss elimination; exact over any
// integral domain with exact division.
template <class R>
R sylvester_resultant(const UnivarPoly<R>& p, const UnivarPoly<R>& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
    long dp = p.degree(), dq = q.degree();
    R one = coeff_one(p.leading());
    if (dp == 0 && dq == 0) return one;
    if (dp == 0) {  // Res(c, q) = c^(deg q)
        R r = one;
        for (long i = 0; i < dq; ++i) r = r * p.leading();
        return r;
    }
    if (dq == 0) {
        R r = one;
        for (long i = 0; i < dp; ++i) r = r * q.leading();
        return r;
    }

    const std::size_t n = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<R>> a(n, std::vector<R>(n, R()));
    for (long row = 0; row < dq; ++row)
        for (long j = 0; j <= dp; ++j) a[row][row + j] = p.coefficient(dp - j);
    for (long row = 0; row < dp; ++row)
        for (long j = 0; j <= dq; ++j) a[dq + row][row + j] = q.coefficient(dq - j);

    // Bareiss
    R prev = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (coeff_is_zero(a[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && coeff_is_zero(a[swap_row][k])) ++swap_row;
            if (swap_row == n) return R();  // singular
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = coeff_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = R();
        }
        prev = a[k][k];
    }
    R det = a[n - 1][n - 1];
    return sign < 0 ? R() - det : det;
}

// disc(p) = (-1)^(N(N-1)/2) * Res(p, p') / lc(p)
template <class R>
R discriminant(const UnivarPoly<R>& p) {
    if (p.degree() < 1) throw std::domain_error("discriminant requires degree >= 1");
    UnivarPoly<R> d = p.derivative();
    R res = d.is_zero() ? R() : sylvester_resultant(p, d);
    R q = coeff_exact_div(res, p.leading());
    long n = p.degree();
    return (n * (n - 1) / 2) % 2 == 1 ? R() - q : q;
}

}  // namespace hnp
