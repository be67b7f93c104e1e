#include "hardyforge/trigpoly.hpp"

#include "hardyforge/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace hardyforge {

HalfFreqPoly HalfFreqPoly::constant(const GaussianRational& c) {
    HalfFreqPoly p;
    p.add_term(0, c);
    return p;
}

HalfFreqPoly HalfFreqPoly::exp_half(long long idx, const GaussianRational& c) {
    HalfFreqPoly p;
    p.add_term(idx, c);
    return p;
}

HalfFreqPoly HalfFreqPoly::sin_half() {
    // sin(x/2) = (e^{ix/2} - e^{-ix/2}) / (2i)
    HalfFreqPoly p;
    p.add_term(1, GaussianRational(rat(0), rat(-1, 2)));
    p.add_term(-1, GaussianRational(rat(0), rat(1, 2)));
    return p;
}

HalfFreqPoly HalfFreqPoly::cos_half() {
    HalfFreqPoly p;
    p.add_term(1, GaussianRational(rat(1, 2)));
    p.add_term(-1, GaussianRational(rat(1, 2)));
    return p;
}

HalfFreqPoly HalfFreqPoly::cos_x() {
    HalfFreqPoly p;
    p.add_term(2, GaussianRational(rat(1, 2)));
    p.add_term(-2, GaussianRational(rat(1, 2)));
    return p;
}

HalfFreqPoly HalfFreqPoly::sin_half_even_power(long j) {
    if (j < 0) throw std::out_of_range("sin power must be >= 0");
    HalfFreqPoly sq = sin_half() * sin_half();
    HalfFreqPoly out = constant(GaussianRational(rat(1)));
    for (long i = 0; i < j; ++i) out = out * sq;
    return out;
}

void HalfFreqPoly::add_term(long long idx, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        coeffs_.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

GaussianRational HalfFreqPoly::coeff(long long idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? GaussianRational() : it->second;
}

bool HalfFreqPoly::on_integer_lattice() const {
    for (const auto& [idx, c] : coeffs_)
        if (idx % 2 != 0) return false;
    return true;
}

HalfFreqPoly HalfFreqPoly::derivative() const {
    HalfFreqPoly out;
    for (const auto& [idx, c] : coeffs_) {
        if (idx == 0) continue;
        out.add_term(idx, c.times_i(rat(idx, 2)));  // d/dx e^{ikx/2} = (ik/2) e^{ikx/2}
    }
    return out;
}

HalfFreqPoly HalfFreqPoly::derivative(long order) const {
    HalfFreqPoly out = *this;
    for (long i = 0; i < order; ++i) out = out.derivative();
    return out;
}

HalfFreqPoly HalfFreqPoly::conjugate() const {
    HalfFreqPoly out;
    for (const auto& [idx, c] : coeffs_) out.add_term(-idx, c.conj());
    return out;
}

HalfFreqPoly HalfFreqPoly::mod_squared() const { return (*this) * conjugate(); }

CPiValue HalfFreqPoly::integrate() const {
    GaussianRational rational_part;  // sum over odd indices
    GaussianRational pi_part;        // 2 * c_0
    for (const auto& [idx, c] : coeffs_) {
        if (idx == 0) {
            pi_part += rat(2) * c;
        } else if (idx % 2 != 0) {
            // int e^{ikx/2} = (4/k) sin(k pi/2) = (4/k) (-1)^{(k-1)/2}
            long long half = (idx - 1) / 2;  // idx odd: exact division
            Rational factor = rat(4, idx);
            if (half % 2 != 0) factor = -factor;
            rational_part += factor * c;
        }
        // even idx != 0 integrates to zero
    }
    return {PiValue(rational_part.re, pi_part.re), PiValue(rational_part.im, pi_part.im)};
}

HalfFreqPoly operator+(const HalfFreqPoly& a, const HalfFreqPoly& b) {
    HalfFreqPoly out = a;
    for (const auto& [idx, c] : b.coeffs_) out.add_term(idx, c);
    return out;
}

HalfFreqPoly operator-(const HalfFreqPoly& a, const HalfFreqPoly& b) {
    HalfFreqPoly out = a;
    for (const auto& [idx, c] : b.coeffs_) out.add_term(idx, -c);
    return out;
}

HalfFreqPoly operator*(const HalfFreqPoly& a, const HalfFreqPoly& b) {
    HalfFreqPoly out;
    for (const auto& [ia, ca] : a.coeffs_)
        for (const auto& [ib, cb] : b.coeffs_) out.add_term(ia + ib, ca * cb);
    return out;
}

HalfFreqPoly operator*(const GaussianRational& s, const HalfFreqPoly& p) {
    HalfFreqPoly out;
    for (const auto& [idx, c] : p.coeffs_) out.add_term(idx, s * c);
    return out;
}

PiValue integrate_real(const HalfFreqPoly& p) {
    CPiValue v = p.integrate();
    if (!v.im.is_zero()) throw std::logic_error("integrand of |.|^2 type had imaginary integral");
    return v.re;
}

namespace {

void require_integer_lattice(const HalfFreqPoly& u, const char* who) {
    if (!u.on_integer_lattice())
        throw std::invalid_argument(std::string(who) + ": half-integer frequencies present");
}

LemmaReport margin_report(PiValue lhs, PiValue rhs) {
    LemmaReport r;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.margin = r.lhs - r.rhs;
    r.exact_equal = r.margin.is_zero();
    r.nonnegative = r.margin.sign() >= 0;
    return r;
}

LemmaReport inadmissible(std::string why) {
    LemmaReport r;
    r.admissible = false;
    r.admissibility_error = std::move(why);
    return r;
}

}  // namespace

LemmaReport verify_lemma31(const HalfFreqPoly& u, long k) {
    if (k < 1) throw std::out_of_range("k must be >= 1");
    require_integer_lattice(u, "verify_lemma31");

    const auto table = constant_table(k);
    HalfFreqPoly sin2 = HalfFreqPoly::sin_half_even_power(1);

    PiValue lhs = integrate_real((u * HalfFreqPoly::sin_half()).derivative(k).mod_squared());
    PiValue rhs;
    HalfFreqPoly du = u;
    for (long i = 0; i <= k; ++i) {
        HalfFreqPoly sq = du.mod_squared();
        rhs = rhs + table->alpha[i] * integrate_real(sq);
        rhs = rhs + table->beta[i] * integrate_real(sq * sin2);
        du = du.derivative();
    }
    return margin_report(lhs, rhs);
}

LemmaReport verify_lemma32(const HalfFreqPoly& u) {
    require_integer_lattice(u, "verify_lemma32");
    if (!u.coeff(0).is_zero()) throw std::invalid_argument("verify_lemma32: nonzero average");

    PiValue lhs = integrate_real(u.derivative().mod_squared() * HalfFreqPoly::sin_half_even_power(1));
    PiValue rhs = rat(1, 16) * integrate_real(u.mod_squared());
    return margin_report(lhs, rhs);
}

LemmaReport verify_lemma33(const HalfFreqPoly& u, long k) {
    if (k < 1) throw std::out_of_range("k must be >= 1");
    if (!u.on_integer_lattice()) return inadmissible("half-integer frequencies present");
    if (!u.coeff(0).is_zero()) return inadmissible("nonzero average");

    const auto table = constant_table(k);
    PiValue lhs = integrate_real((u * HalfFreqPoly::sin_half()).derivative(k).mod_squared());
    PiValue rhs;
    HalfFreqPoly du = u;
    for (long i = 0; i < k; ++i) {
        Rational coeff = table->alpha[i] + rat(1, 16) * table->beta[i + 1];
        rhs = rhs + coeff * integrate_real(du.mod_squared());
        du = du.derivative();
    }
    return margin_report(lhs, rhs);
}

LemmaReport verify_lemma35(const HalfFreqPoly& u, long k) {
    if (k < 2) throw std::out_of_range("verify_lemma35: requires k >= 2");
    if (!u.on_integer_lattice()) return inadmissible("half-integer frequencies present");
    HalfFreqPoly weight = HalfFreqPoly::sin_half_even_power(k - 1);  // sin^{2k-2}
    if (!(u * weight).integrate().is_zero()) return inadmissible("weighted average nonzero");

    PiValue lhs =
        integrate_real(u.derivative().mod_squared() * HalfFreqPoly::sin_half_even_power(k));
    PiValue rhs = rat(k - 1, 2) * integrate_real(u.mod_squared() * weight);
    return margin_report(lhs, rhs);
}

LemmaReport verify_lemma36(const HalfFreqPoly& u, long k) {
    if (k < 2) throw std::out_of_range("verify_lemma36: requires k >= 2");
    if (!u.on_integer_lattice()) return inadmissible("half-integer frequencies present");
    if (!u.coeff(0).is_zero()) return inadmissible("nonzero average");

    Rational coeff = alpha(k, k - 1) * (alpha(k - 1, k - 2) + rat(1, 16) * beta(k - 1, k - 1));
    PiValue lhs = integrate_real(
        (u * HalfFreqPoly::sin_half_even_power(1)).derivative(k).mod_squared());
    PiValue rhs = coeff * integrate_real(u.derivative(k - 2).mod_squared());
    return margin_report(lhs, rhs);
}

SupportIdentityReport verify_eqs_63_65(long n, long m, long k) {
    if (m < 0) throw std::out_of_range("m must be >= 0");
    if (k < 1) throw std::out_of_range("k must be >= 1");
    SupportIdentityReport r;
    r.n = n;
    r.m = m;
    r.k = k;

    HalfFreqPoly u = HalfFreqPoly::exp_half(n) * HalfFreqPoly::sin_half();
    HalfFreqPoly dmu_sq = u.derivative(m).mod_squared();

    PiValue lhs63 = pow2(2 * m) * integrate_real(dmu_sq);
    Rational np1 = pow_rat(rat(n + 1), 2 * m), nm1 = pow_rat(rat(n - 1), 2 * m);
    r.eq63 = (lhs63 == PiValue::pi_times(rat(1, 2) * (np1 + nm1)));

    PiValue lhs64 = pow2(2 * m) * integrate_real(dmu_sq * HalfFreqPoly::cos_x());
    r.eq64 = (lhs64 == PiValue::pi_times(rat(-1, 2) * pow_rat(rat(n) * rat(n) - 1, m)));

    PiValue lhs65 =
        pow2(2 * k) * integrate_real((u * HalfFreqPoly::sin_half()).derivative(k).mod_squared());
    Rational rhs65 = pow_rat(rat(n + 2), 2 * k) + pow_rat(rat(n - 2), 2 * k) +
                     rat(4) * pow_rat(rat(n), 2 * k);
    r.eq65 = (lhs65 == PiValue::pi_times(rat(1, 8) * rhs65));

    r.all = r.eq63 && r.eq64 && r.eq65;
    return r;
}

HalfFreqPoly project_zero_average(const HalfFreqPoly& u) {
    HalfFreqPoly out = u;
    out.add_term(0, -u.coeff(0));
    return out;
}

HalfFreqPoly project_weighted_zero_average(const HalfFreqPoly& u, long k) {
    if (k < 1) throw std::out_of_range("k must be >= 1");
    HalfFreqPoly weight = HalfFreqPoly::sin_half_even_power(k - 1);
    // For integer-lattice u both integrals are pure pi multiples, so the
    // correction c = int(u w) / int(w) is an exact Gaussian rational.
    CPiValue num = (u * weight).integrate();
    CPiValue den = weight.integrate();
    if (num.re.rat != 0 || num.im.rat != 0)
        throw std::invalid_argument("projection needs an integer-lattice input");
    GaussianRational c(num.re.pi / den.re.pi, num.im.pi / den.re.pi);
    return u - HalfFreqPoly::constant(c);
}

HalfFreqPoly random_integer_lattice_poly(Rng& rng, int max_modes, int max_doubled_index,
                                         int max_height) {
    std::vector<long long> lattice;
    for (long long idx = -max_doubled_index; idx <= max_doubled_index; ++idx)
        if (idx % 2 == 0) lattice.push_back(idx);

    int modes = static_cast<int>(rng.next_int(1, max_modes));
    HalfFreqPoly p;
    for (int t = 0; t < modes; ++t) {
        long long idx = lattice[rng.next_below(lattice.size())];
        Rational re = rat(rng.next_int(-max_height, max_height), rng.next_int(1, max_height));
        Rational im = rat(rng.next_int(-max_height, max_height), rng.next_int(1, max_height));
        p.add_term(idx, GaussianRational(re, im));
    }
    return p;
}

}  // namespace hardyforge
