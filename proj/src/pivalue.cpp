#include "hardyforge/pivalue.hpp"

#include <stdexcept>

namespace hardyforge {

// First 120 decimal digits of pi (integer part included, decimal point
// dropped): pi = 3.14159...
static const char* kPiDigits =
    "3"
    "141592653589793238462643383279502884197169399375105820974944"
    "592307816406286208998628034825342117067982148086513282306647";

void pi_enclosure(int digits, Rational& lo, Rational& hi) {
    constexpr int kMaxDigits = 121;  // one integer digit + 120 fractional
    if (digits < 2) digits = 2;
    if (digits > kMaxDigits) throw std::logic_error("pi enclosure precision exhausted");
    Integer p(std::string(kPiDigits, kPiDigits + digits));
    Integer scale = pow_int(Integer(10), static_cast<unsigned long>(digits - 1));
    lo = rat(p, scale);
    hi = rat(p + 1, scale);
}

int PiValue::sign() const {
    if (pi == 0) return sgn(rat);
    if (rat == 0) return sgn(pi);
    if (sgn(rat) == sgn(pi)) return sgn(rat);
    // Mixed signs: bracket rat + pi*enclosure and widen until decisive.
    for (int digits : {65, 97, 121}) {
        Rational lo, hi;
        pi_enclosure(digits, lo, hi);
        Rational a = rat + pi * (pi > 0 ? lo : hi);
        Rational b = rat + pi * (pi > 0 ? hi : lo);
        if (a > 0) return 1;
        if (b < 0) return -1;
    }
    // rat + pi*x straddles zero across 120 digits of pi: unreachable for any
    // value this project produces (pi is irrational, so the true sign exists).
    throw std::logic_error("PiValue::sign undecided at maximum pi precision");
}

double PiValue::to_double() const {
    Rational lo, hi;
    pi_enclosure(40, lo, hi);
    return hardyforge::to_double(rat + pi * lo);
}

std::string PiValue::str() const {
    if (pi == 0) return rat_str(rat);
    std::string p = rat_str(pi) + "*pi";
    if (rat == 0) return p;
    return rat_str(rat) + " + " + p;
}

}  // namespace hardyforge
