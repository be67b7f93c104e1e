// Values of the form p + q*pi with rational p, q: the exact value ring of
// integrals of lattice trigonometric polynomials over [-pi, pi]. Equality is
// componentwise (pi is irrational). Sign queries use a rational enclosure of
// pi that widens on demand; they are decidable for the same reason.

#pragma once

#include "hardyforge/rational.hpp"

#include <ostream>
#include <string>

namespace hardyforge {

// Enclosure pi in [lo, hi] with `digits` correct decimal digits.
void pi_enclosure(int digits, Rational& lo, Rational& hi);

struct PiValue {
    Rational rat;  // rational part
    Rational pi;   // coefficient of pi

    PiValue() : rat(0), pi(0) {}
    explicit PiValue(Rational r) : rat(std::move(r)), pi(0) {}
    PiValue(Rational r, Rational p) : rat(std::move(r)), pi(std::move(p)) {}

    static PiValue pi_times(const Rational& c) { return {Rational(0), c}; }

    bool is_zero() const { return rat == 0 && pi == 0; }

    // -1, 0, +1; decided exactly (componentwise zero test first, then a
    // certified enclosure of pi widened until the interval excludes zero).
    int sign() const;

    friend PiValue operator+(const PiValue& a, const PiValue& b) {
        return {a.rat + b.rat, a.pi + b.pi};
    }
    friend PiValue operator-(const PiValue& a, const PiValue& b) {
        return {a.rat - b.rat, a.pi - b.pi};
    }
    PiValue operator-() const { return {-rat, -pi}; }
    friend PiValue operator*(const Rational& s, const PiValue& a) {
        return {s * a.rat, s * a.pi};
    }
    friend bool operator==(const PiValue& a, const PiValue& b) {
        return a.rat == b.rat && a.pi == b.pi;
    }
    friend bool operator<(const PiValue& a, const PiValue& b) { return (a - b).sign() < 0; }
    friend bool operator>=(const PiValue& a, const PiValue& b) { return (a - b).sign() >= 0; }

    double to_double() const;
    std::string str() const;  // e.g. "7/8*pi", "1/2 + 3/4*pi"

    friend std::ostream& operator<<(std::ostream& os, const PiValue& v) { return os << v.str(); }
};

// Complex value with PiValue components; what integrate() returns.
struct CPiValue {
    PiValue re;
    PiValue im;

    CPiValue() = default;
    CPiValue(PiValue r, PiValue i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    friend CPiValue operator+(const CPiValue& a, const CPiValue& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CPiValue operator-(const CPiValue& a, const CPiValue& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend bool operator==(const CPiValue& a, const CPiValue& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace hardyforge
