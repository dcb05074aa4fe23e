#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hnp {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact quotient; throws if b does not divide a.
inline Integer int_divexact(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("inexact integer division");
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Deterministic trial-division primality check, adequate for desk-scale moduli.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Element of F_p for a runtime prime modulus p.  The modulus travels with the
// value; mixing distinct moduli is a usage error.  p == 0 marks a
// modulus-free small constant (produced by generic code such as R(1)); it
// adopts the other operand's modulus on first contact.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    explicit Fp(int value) : v(static_cast<std::uint64_t>(value)), p(0) {
        if (value < 0) throw std::invalid_argument("modulus-free Fp constant must be >= 0");
    }
    Fp(std::uint64_t value, std::uint64_t modulus)
        : v(modulus == 0 ? value : value % modulus), p(modulus) {}

    static Fp from_integer(const Integer& z, std::uint64_t modulus) {
        Integer r = z % static_cast<unsigned long>(modulus);
        if (r < 0) r += static_cast<unsigned long>(modulus);
        return Fp(r.get_ui(), modulus);
    }

    friend std::uint64_t common_modulus(const Fp& a, const Fp& b) {
        if (a.p == 0) return b.p;
        if (b.p == 0) return a.p;
        if (a.p != b.p) throw std::invalid_argument("mixed prime moduli");
        return a.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t m = common_modulus(a, b);
        if (m == 0) return Fp(a.v + b.v, 0);
        return Fp((a.v % m + b.v % m) % m, m);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t m = common_modulus(a, b);
        if (m == 0) {
            if (a.v < b.v) throw std::domain_error("negative modulus-free Fp value");
            return Fp(a.v - b.v, 0);
        }
        return Fp((a.v % m + m - b.v % m) % m, m);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t m = common_modulus(a, b);
        if (m == 0) return Fp(a.v * b.v, 0);
        return Fp(static_cast<std::uint64_t>(
                      (static_cast<unsigned __int128>(a.v % m) * (b.v % m)) % m),
                  m);
    }
    Fp operator-() const {
        if (p == 0) {
            if (v == 0) return Fp();
            throw std::domain_error("negation of modulus-free Fp value");
        }
        return Fp(p - v % p, p);
    }

    Fp inverse() const {
        if (v == 0) throw std::domain_error("inverse of zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(v);
        while (newr != 0) {
            std::int64_t q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(t), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v == 0 && b.v == 0) return true;
        return a.v == b.v && a.p == b.p;
    }
};

// --- generic coefficient helpers used by Polynomial<R> -------------------

inline bool coeff_is_zero(const Integer& c) { return c == 0; }
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Fp& c) { return c.v == 0; }

// "one of the same shape as the sample" (Fp needs the modulus carried over)
inline Integer coeff_one(const Integer&) { return Integer(1); }
inline Rational coeff_one(const Rational&) { return Rational(1); }
inline Fp coeff_one(const Fp& sample) { return Fp(1, sample.p); }

inline std::string coeff_to_string(const Integer& c) { return c.get_str(); }
inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_to_string(const Fp& c) { return std::to_string(c.v); }

// exact division in the coefficient ring (for fraction-free elimination)
inline Integer coeff_exact_div(const Integer& a, const Integer& b) { return int_divexact(a, b); }
inline Rational coeff_exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
}
inline Fp coeff_exact_div(const Fp& a, const Fp& b) { return a / b; }

}  // namespace hnp
