// Exact algebra of trigonometric polynomials on the half-integer frequency
// lattice: finitely supported maps idx -> Gaussian-rational coefficient,
// where stored index idx stands for the frequency idx/2, i.e.
//
//   p(x) = sum_idx c_idx e^{i idx x / 2}.
//
// Doubling keeps indices integral; "integer lattice" (all stored indices
// even) is exactly the class of 2pi-periodic functions with 2pi-periodic
// derivatives. Integrals over [-pi, pi] are exact values in Q + Q*pi:
// index 0 contributes 2pi c_0, even nonzero indices vanish, odd indices
// contribute (4/idx) (-1)^{(idx-1)/2} c_idx.
//
// On top of the algebra sit exact verifiers for the derivative-splitting
// identity ("lemma31" here), its weighted/averaged inequality corollaries,
// and the closed-form integrals of e^{inx/2} sin(x/2).

#pragma once

#include "hardyforge/pivalue.hpp"
#include "hardyforge/rational.hpp"
#include "hardyforge/rng.hpp"

#include <map>
#include <string>

namespace hardyforge {

class HalfFreqPoly {
  public:
    using CoeffMap = std::map<long long, GaussianRational>;

    HalfFreqPoly() = default;

    static HalfFreqPoly constant(const GaussianRational& c);
    // e^{i idx x/2} scaled by c.
    static HalfFreqPoly exp_half(long long idx, const GaussianRational& c = GaussianRational(rat(1)));
    static HalfFreqPoly sin_half();                  // sin(x/2)
    static HalfFreqPoly cos_half();                  // cos(x/2)
    static HalfFreqPoly cos_x();                     // cos(x)
    static HalfFreqPoly sin_half_even_power(long j); // sin^{2j}(x/2)

    void add_term(long long idx, const GaussianRational& c);

    const CoeffMap& coeffs() const { return coeffs_; }
    GaussianRational coeff(long long idx) const;
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    // All stored indices even <=> 2pi-periodic with all derivatives periodic.
    bool on_integer_lattice() const;

    HalfFreqPoly derivative() const;
    HalfFreqPoly derivative(long order) const;
    HalfFreqPoly conjugate() const;
    HalfFreqPoly mod_squared() const;  // p * conj(p)

    CPiValue integrate() const;  // exact integral over [-pi, pi]

    friend HalfFreqPoly operator+(const HalfFreqPoly& a, const HalfFreqPoly& b);
    friend HalfFreqPoly operator-(const HalfFreqPoly& a, const HalfFreqPoly& b);
    friend HalfFreqPoly operator*(const HalfFreqPoly& a, const HalfFreqPoly& b);
    friend HalfFreqPoly operator*(const GaussianRational& s, const HalfFreqPoly& p);
    friend bool operator==(const HalfFreqPoly& a, const HalfFreqPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    CoeffMap coeffs_;
};

// Integral of |p|^2-type integrands: asserts the imaginary part vanishes and
// returns the real PiValue.
PiValue integrate_real(const HalfFreqPoly& p);

struct LemmaReport {
    bool admissible = true;
    std::string admissibility_error;
    PiValue lhs;
    PiValue rhs;
    PiValue margin;           // lhs - rhs
    bool exact_equal = false; // identity checks
    bool nonnegative = false; // margin sign via certified pi enclosure
};

// Exact identity: for integer-lattice u and k >= 1,
//   int |d^k(u sin(x/2))|^2 = sum_i alpha_i^k int |d^i u|^2
//                           + sum_i beta_i^k int |d^i u|^2 sin^2(x/2).
// Throws std::invalid_argument on half-integer frequencies.
LemmaReport verify_lemma31(const HalfFreqPoly& u, long k);

// int |u'|^2 sin^2(x/2) >= 1/16 int |u|^2 for zero-average integer-lattice u.
// Throws std::invalid_argument on nonzero average or half-integer input.
LemmaReport verify_lemma32(const HalfFreqPoly& u);

// int |d^k(u sin(x/2))|^2 >= sum_{i<k} (alpha_i^k + 1/16 beta_{i+1}^k) int |d^i u|^2,
// zero-average u. Admissibility violations are reported, not thrown.
LemmaReport verify_lemma33(const HalfFreqPoly& u, long k);

// int |u'|^2 sin^{2k}(x/2) >= (k-1)/2 int |u|^2 sin^{2k-2}(x/2) for k >= 2
// and int u sin^{2k-2}(x/2) = 0 (checked exactly).
LemmaReport verify_lemma35(const HalfFreqPoly& u, long k);

// int |d^k(u sin^2(x/2))|^2 >= alpha_{k-1}^k (alpha_{k-2}^{k-1} + 1/16 beta_{k-1}^{k-1})
//                              * int |d^{k-2} u|^2 for k >= 2, zero-average u.
LemmaReport verify_lemma36(const HalfFreqPoly& u, long k);

struct SupportIdentityReport {
    long n = 0, m = 0, k = 1;
    bool eq63 = false;  // 2^{2m} int |d^m u|^2           = pi/2 ((n+1)^{2m} + (n-1)^{2m})
    bool eq64 = false;  // 2^{2m} int |d^m u|^2 cos x     = -pi/2 (n^2-1)^m
    bool eq65 = false;  // 2^{2k} int |d^k(u sin(x/2))|^2 = pi/8 ((n+2)^{2k} + (n-2)^{2k} + 4 n^{2k})
    bool all = false;
};

// u := e^{inx/2} sin(x/2), built internally. m >= 0, k >= 1.
SupportIdentityReport verify_eqs_63_65(long n, long m, long k);

// Projections used to build admissible test functions exactly.
HalfFreqPoly project_zero_average(const HalfFreqPoly& u);
// Subtracts the multiple of 1 making int u sin^{2k-2}(x/2) = 0 (k >= 1).
HalfFreqPoly project_weighted_zero_average(const HalfFreqPoly& u, long k);

// Random coefficients with numerator/denominator height <= max_height on a
// random subset (<= max_modes) of the even doubled indices in
// [-max_doubled_index, max_doubled_index].
HalfFreqPoly random_integer_lattice_poly(Rng& rng, int max_modes = 13,
                                         int max_doubled_index = 12, int max_height = 20);

}  // namespace hardyforge
