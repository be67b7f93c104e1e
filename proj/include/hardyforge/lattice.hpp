// Finitely supported sequences on Z, the backward difference D and discrete
// Laplacian stencils, weighted quadratic forms, and the exact Parseval
// bridges between sequence sums and trig-polynomial integrals.
//
// Sequences come in two scalar modes sharing one implementation: exact
// (Gaussian rational) and numeric (complex double). The Fourier transform is
// stored UNNORMALIZED, G(u)(x) = sum u(n) e^{-inx}; every Parseval statement
// is checked in the form 2pi * sum = integral, which keeps the whole bridge
// inside exact arithmetic (the (2pi)^{-1/2} normalization is irrational).

#pragma once

#include "hardyforge/rational.hpp"
#include "hardyforge/rng.hpp"
#include "hardyforge/trigpoly.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardyforge {

template <class S>
struct SeqTraits;

template <>
struct SeqTraits<GaussianRational> {
    using Real = Rational;
    static Real abs_sq(const GaussianRational& z) { return z.norm_sq(); }
    static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
    static Real int_pow(long long n, long e) { return pow_rat(rat(static_cast<long>(n)), e); }
    static Real half_shift_pow(long long n, long e) {
        return pow_rat(rat(2 * static_cast<long>(n) - 1, 2), e);
    }
    static Real from_rational(const Rational& q) { return q; }
};

template <>
struct SeqTraits<std::complex<double>> {
    using Real = double;
    static Real abs_sq(const std::complex<double>& z) {
        return z.real() * z.real() + z.imag() * z.imag();
    }
    static bool is_zero(const std::complex<double>& z) { return z.real() == 0 && z.imag() == 0; }
    static Real int_pow(long long n, long e) { return signed_pow(static_cast<double>(n), e); }
    static Real half_shift_pow(long long n, long e) {
        return signed_pow(static_cast<double>(n) - 0.5, e);
    }
    static Real from_rational(const Rational& q) { return to_double(q); }

    // Repeated multiplication: deterministic across libm versions.
    static double signed_pow(double base, long e) {
        if (e == 0) return 1.0;
        double b = e > 0 ? base : 1.0 / base;
        long n = e > 0 ? e : -e;
        double out = 1.0;
        while (n > 0) {
            if (n & 1) out *= b;
            b *= b;
            n >>= 1;
        }
        return out;
    }
};

template <class S>
class FinSeq {
  public:
    using Scalar = S;
    using Real = typename SeqTraits<S>::Real;

    FinSeq() = default;
    FinSeq(long long lo, std::vector<S> vals) : lo_(lo), vals_(std::move(vals)) {}

    static FinSeq delta(long long n, S value) { return FinSeq(n, {std::move(value)}); }

    long long lo() const { return lo_; }
    long long hi() const { return lo_ + static_cast<long long>(vals_.size()) - 1; }
    bool empty() const { return vals_.empty(); }

    S at(long long n) const {
        if (vals_.empty() || n < lo_ || n > hi()) return S{};
        return vals_[static_cast<std::size_t>(n - lo_)];
    }

    void set(long long n, S value) {
        if (vals_.empty()) {
            lo_ = n;
            vals_.push_back(std::move(value));
            return;
        }
        if (n < lo_) {
            vals_.insert(vals_.begin(), static_cast<std::size_t>(lo_ - n), S{});
            lo_ = n;
        } else if (n > hi()) {
            vals_.resize(static_cast<std::size_t>(n - lo_ + 1), S{});
        }
        vals_[static_cast<std::size_t>(n - lo_)] = std::move(value);
    }

    bool is_zero() const {
        for (const auto& v : vals_)
            if (!SeqTraits<S>::is_zero(v)) return false;
        return true;
    }

    bool supported_on_nonneg() const {
        for (long long n = lo_; n < 0 && n <= hi(); ++n)
            if (!SeqTraits<S>::is_zero(at(n))) return false;
        return true;
    }

    // u(i) = 0 for 0 <= i < count.
    bool zero_prefix(long long count) const {
        for (long long n = 0; n < count; ++n)
            if (!SeqTraits<S>::is_zero(at(n))) return false;
        return true;
    }

  private:
    long long lo_ = 0;
    std::vector<S> vals_;
};

using ExactSeq = FinSeq<GaussianRational>;
using NumSeq = FinSeq<std::complex<double>>;

NumSeq to_numeric(const ExactSeq& u);

// (Du)(n) = u(n) - u(n-1)
template <class S>
FinSeq<S> backward_diff(const FinSeq<S>& u) {
    if (u.empty()) return u;
    FinSeq<S> out(u.lo(), std::vector<S>(static_cast<std::size_t>(u.hi() - u.lo() + 2)));
    for (long long n = u.lo(); n <= u.hi() + 1; ++n) out.set(n, u.at(n) - u.at(n - 1));
    return out;
}

// (Lap u)(n) = 2u(n) - u(n-1) - u(n+1)
template <class S>
FinSeq<S> laplacian(const FinSeq<S>& u) {
    if (u.empty()) return u;
    FinSeq<S> out(u.lo() - 1, std::vector<S>(static_cast<std::size_t>(u.hi() - u.lo() + 3)));
    for (long long n = u.lo() - 1; n <= u.hi() + 1; ++n) {
        S two_u = u.at(n) + u.at(n);
        out.set(n, two_u - u.at(n - 1) - u.at(n + 1));
    }
    return out;
}

template <class S>
FinSeq<S> laplacian_power(const FinSeq<S>& u, long m) {
    if (m < 0) throw std::out_of_range("laplacian power must be >= 0");
    FinSeq<S> out = u;
    for (long i = 0; i < m; ++i) out = laplacian(out);
    return out;
}

template <class S>
FinSeq<S> d_laplacian_power(const FinSeq<S>& u, long m) {
    return backward_diff(laplacian_power(u, m));
}

// Unnormalized transform G(u)(x) = sum u(n) e^{-inx} (doubled index -2n).
HalfFreqPoly fourier(const ExactSeq& u);

enum class Domain { integers, positive };  // sum over Z vs over n >= 1

enum class WeightKind { unit, int_pow, half_shift_pow };

// sum_{n in domain} |u(n)|^2 * w(n) with w = 1, n^e or (n - 1/2)^e.
// Negative e with int_pow skips n = 0 and requires u(0) = 0.
template <class S>
typename SeqTraits<S>::Real weighted_sq_sum(const FinSeq<S>& u, WeightKind w, long e, Domain dom) {
    using T = SeqTraits<S>;
    if (w == WeightKind::int_pow && e < 0 && !T::is_zero(u.at(0)))
        throw std::invalid_argument("negative power weight requires u(0) = 0");
    typename T::Real acc{};
    for (long long n = u.lo(); n <= u.hi(); ++n) {
        if (dom == Domain::positive && n < 1) continue;
        if (w == WeightKind::int_pow && e < 0 && n == 0) continue;
        const S& v = u.at(n);
        if (T::is_zero(v)) continue;
        typename T::Real sq = T::abs_sq(v);
        switch (w) {
            case WeightKind::unit: acc += sq; break;
            case WeightKind::int_pow: acc += sq * T::int_pow(n, e); break;
            case WeightKind::half_shift_pow: acc += sq * T::half_shift_pow(n, e); break;
        }
    }
    return acc;
}

// Moment sum |u|^2 n^p; n = 0 excluded when p < 0 (then u(0) = 0 required).
template <class S>
typename SeqTraits<S>::Real moment(const FinSeq<S>& u, long p, Domain dom) {
    return weighted_sq_sum(u, p == 0 ? WeightKind::unit : WeightKind::int_pow, p, dom);
}

// The quadratic forms appearing on the inequality sides.
enum class FormId {
    diff_sq_half_pow,    // sum |Du|^2 (n-1/2)^{2k}
    diff_sq_pow,         // sum |Du|^2 n^{2k}
    lap_sq,              // sum |Lap^m u|^2
    d_lap_sq,            // sum |D Lap^m u|^2
    lap_sq_pow,          // sum |Lap^m u|^2 n^{2k}
    d_lap_sq_half_pow,   // sum |D Lap^m u|^2 (n-1/2)^{2k}
    moment_pow,          // sum |u|^2 n^p
};

struct FormParams {
    long k = 1;
    long m = 1;
    long p = 0;
    Domain domain = Domain::positive;
};

template <class S>
typename SeqTraits<S>::Real form(const FinSeq<S>& u, FormId id, const FormParams& params) {
    switch (id) {
        case FormId::diff_sq_half_pow:
            return weighted_sq_sum(backward_diff(u), WeightKind::half_shift_pow, 2 * params.k,
                                   params.domain);
        case FormId::diff_sq_pow:
            return weighted_sq_sum(backward_diff(u), WeightKind::int_pow, 2 * params.k,
                                   params.domain);
        case FormId::lap_sq:
            return weighted_sq_sum(laplacian_power(u, params.m), WeightKind::unit, 0,
                                   params.domain);
        case FormId::d_lap_sq:
            return weighted_sq_sum(d_laplacian_power(u, params.m), WeightKind::unit, 0,
                                   params.domain);
        case FormId::lap_sq_pow:
            return weighted_sq_sum(laplacian_power(u, params.m), WeightKind::int_pow, 2 * params.k,
                                   params.domain);
        case FormId::d_lap_sq_half_pow:
            return weighted_sq_sum(d_laplacian_power(u, params.m), WeightKind::half_shift_pow,
                                   2 * params.k, params.domain);
        case FormId::moment_pow:
            return moment(u, params.p, params.domain);
    }
    throw std::invalid_argument("unknown form id");
}

struct ParsevalReport {
    bool eq_moment = false;       // 2pi sum |u|^2 n^{2(k-j)}        = int |d^{k-j} G|^2
    bool eq_diff = false;         // 2pi sum |Du|^2 (n-1/2)^{2k}     = 4 int |d^k(G sin(x/2))|^2
    bool eq_lap_energy = false;   // 2pi sum |Lap^m u|^2             = 4^{2m} int |G|^2 sin^{4m}
    bool eq_lap_symbol = false;   // G(Lap^m u)                      = 4^m sin^{2m}(x/2) G(u)
    bool all = false;
};

// Exact verification of the Parseval bridges; requires 0 <= j <= k, m >= 0.
ParsevalReport parseval_bridge(const ExactSeq& u, long k, long j, long m);

// sum_{j, j', j' != j/2} C(2m-k, j) C(j, j') (-1/2)^j (2j'-j)^{-k} v(2j'-j).
GaussianRational side_condition(const ExactSeq& v, long m, long k);

// Random exact sequence with support inside [-window, window] (or shifted by
// the caller), rational coefficient heights <= max_height.
ExactSeq random_exact_seq(Rng& rng, long long lo, long long hi, int max_terms, int max_height);

}  // namespace hardyforge
