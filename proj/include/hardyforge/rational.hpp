// Exact scalar arithmetic: arbitrary-precision rationals (GMP-backed) and
// Gaussian rationals a + b*i. These are the coefficient fields for every
// exact computation in the project; nothing here ever rounds.

#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace hardyforge {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(const Integer& n) { return Rational(n); }

// num/den reduced to lowest terms with positive denominator.
inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(long num, long den) { return rat(Integer(num), Integer(den)); }

// Parses "p/q" or "p".
inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return rat(Integer(s), Integer(1));
    return rat(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

// Canonical "p/q" string (denominator always printed, e.g. "9/4", "-6/1").
inline std::string rat_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return rat(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational out(1);
    while (n > 0) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// 2^e as a rational, e may be negative.
inline Rational pow2(long e) { return pow_rat(rat(2), e); }

inline double to_double(const Rational& q) { return q.get_d(); }

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const Rational& s, const GaussianRational& a) {
        return {s * a.re, s * a.im};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm_sq();
        if (n == 0) throw std::domain_error("division by zero Gaussian rational");
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    // z * (i*s), used by d/dx acting on e^{ikx/2}.
    GaussianRational times_i(const Rational& s) const { return {-im * s, re * s}; }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        os << rat_str(z.re);
        if (z.im != 0) os << (z.im > 0 ? "+" : "") << rat_str(z.im) << "i";
        return os;
    }
};

}  // namespace hardyforge
