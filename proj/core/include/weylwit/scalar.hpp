#ifndef WEYLWIT_SCALAR_HPP
#define WEYLWIT_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace weylwit {

using BigInt = mpz_class;

/* Exact rational scalar. mpq_class keeps the canonical form we need:
 * gcd(|num|, den) = 1, den >= 1, zero stored as 0/1. */
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/* 2^k for k of either sign. */
inline Rational pow2(long k) {
    BigInt v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(v) : make_rational(1, v);
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/* Gaussian rational a + b*i with i^2 = -1.  The canonical imaginary unit
 * of this type doubles as the fixed square root of -1 used by the paired
 * block models. */
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long v) : re(v), im(0) {}          // NOLINT(google-explicit-constructor)
    GaussRational(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return {-re, -im}; }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    GaussRational inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rational n = norm();
        return {re / n, -im / n};
    }

    GaussRational pow(long e) const {
        GaussRational base = e >= 0 ? *this : inv();
        long n = e >= 0 ? e : -e;
        GaussRational acc(1);
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }
};

inline bool is_even_integer(const GaussRational& v) {
    return v.im == 0 && is_integer(v.re) && mpz_even_p(v.re.get_num().get_mpz_t());
}

/* Exact square root of a rational, if one exists in Q. */
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt num = r.get_num(), den = r.get_den();
    BigInt sn, sd;
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return make_rational(sn, sd);
}

/* Exact square root in Q(i), if one exists.  For a + bi with b != 0 the
 * root is x + yi with x^2 = (a + sqrt(a^2+b^2))/2, y = b/(2x). */
inline std::optional<GaussRational> gauss_sqrt(const GaussRational& v) {
    if (v.is_zero()) return GaussRational(0);
    if (v.im == 0) {
        if (auto s = rational_sqrt(v.re)) return GaussRational(*s);
        if (auto s = rational_sqrt(-v.re)) return GaussRational(Rational(0), *s);
        return std::nullopt;
    }
    auto n = rational_sqrt(v.norm());
    if (!n) return std::nullopt;
    Rational x2 = (v.re + *n) / 2;
    auto x = rational_sqrt(x2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = v.im / (2 * (*x));
    return GaussRational(*x, y);
}

/* Exact n-th root of a rational, if one exists in Q. */
inline std::optional<Rational> rational_nth_root(const Rational& r, unsigned long n) {
    if (n == 0) throw std::invalid_argument("0th root");
    if (r == 0) return Rational(0);
    bool neg = r < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    BigInt num = abs(r.get_num()), den = r.get_den();
    BigInt rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
    if (neg) rn = -rn;
    return make_rational(rn, rd);
}

/* h (h-1) (h-2) ... over `terms` factors. */
inline Rational falling_factorial(long h, int terms) {
    Rational v(1);
    for (int r = 0; r < terms; ++r) v *= Rational(h - r);
    return v;
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace weylwit

#endif
