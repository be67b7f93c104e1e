#include "hardyforge/lattice.hpp"

#include "hardyforge/combinatorics.hpp"

namespace hardyforge {

NumSeq to_numeric(const ExactSeq& u) {
    if (u.empty()) return {};
    std::vector<std::complex<double>> vals;
    vals.reserve(static_cast<std::size_t>(u.hi() - u.lo() + 1));
    for (long long n = u.lo(); n <= u.hi(); ++n) {
        const GaussianRational& z = u.at(n);
        vals.emplace_back(to_double(z.re), to_double(z.im));
    }
    return NumSeq(u.lo(), std::move(vals));
}

HalfFreqPoly fourier(const ExactSeq& u) {
    HalfFreqPoly g;
    for (long long n = u.lo(); n <= u.hi(); ++n) g.add_term(-2 * n, u.at(n));
    return g;
}

namespace {

// asserts "2pi * lattice_sum == integral" for a rational lattice sum
bool two_pi_sum_equals(const Rational& lattice_sum, const PiValue& integral) {
    return integral == PiValue::pi_times(rat(2) * lattice_sum);
}

}  // namespace

ParsevalReport parseval_bridge(const ExactSeq& u, long k, long j, long m) {
    if (k < 1) throw std::out_of_range("k must be >= 1");
    if (j < 0 || j > k) throw std::out_of_range("j must be in [0, k]");
    if (m < 0) throw std::out_of_range("m must be >= 0");

    ParsevalReport r;
    HalfFreqPoly g = fourier(u);

    // (moment bridge) sum |u|^2 n^{2(k-j)}  vs  int |d^{k-j} G|^2
    Rational lhs_moment = moment(u, 2 * (k - j), Domain::integers);
    r.eq_moment = two_pi_sum_equals(lhs_moment, integrate_real(g.derivative(k - j).mod_squared()));

    // (difference bridge) sum |Du|^2 (n-1/2)^{2k}  vs  4 int |d^k(G sin(x/2))|^2
    Rational lhs_diff =
        weighted_sq_sum(backward_diff(u), WeightKind::half_shift_pow, 2 * k, Domain::integers);
    PiValue rhs_diff =
        rat(4) * integrate_real((g * HalfFreqPoly::sin_half()).derivative(k).mod_squared());
    r.eq_diff = two_pi_sum_equals(lhs_diff, rhs_diff);

    // (Laplacian energy) sum |Lap^m u|^2  vs  4^{2m} int |G|^2 sin^{4m}(x/2)
    Rational lhs_lap = weighted_sq_sum(laplacian_power(u, m), WeightKind::unit, 0, Domain::integers);
    PiValue rhs_lap =
        pow2(4 * m) * integrate_real(g.mod_squared() * HalfFreqPoly::sin_half_even_power(2 * m));
    r.eq_lap_energy = two_pi_sum_equals(lhs_lap, rhs_lap);

    // (symbol identity) G(Lap^m u) = 4^m sin^{2m}(x/2) G(u) as polynomials
    HalfFreqPoly lhs_sym = fourier(laplacian_power(u, m));
    HalfFreqPoly rhs_sym =
        GaussianRational(pow2(2 * m)) * (HalfFreqPoly::sin_half_even_power(m) * g);
    r.eq_lap_symbol = (lhs_sym == rhs_sym);

    r.all = r.eq_moment && r.eq_diff && r.eq_lap_energy && r.eq_lap_symbol;
    return r;
}

GaussianRational side_condition(const ExactSeq& v, long m, long k) {
    if (m < 1) throw std::out_of_range("m must be >= 1");
    if (k < 0) throw std::out_of_range("k must be >= 0");
    GaussianRational acc;
    for (long j = 0; j <= 2 * m - k; ++j) {
        Rational outer = rat(binom(2 * m - k, j)) * pow_rat(rat(-1, 2), j);
        for (long jp = 0; jp <= j; ++jp) {
            long long arg = 2 * jp - j;
            if (arg == 0) continue;  // j' = j/2 excluded by the summation constraint
            GaussianRational val = v.at(arg);
            if (val.is_zero()) continue;
            Rational c = outer * rat(binom(j, jp)) * pow_rat(rat(static_cast<long>(arg)), -k);
            acc += c * val;
        }
    }
    return acc;
}

ExactSeq random_exact_seq(Rng& rng, long long lo, long long hi, int max_terms, int max_height) {
    ExactSeq u;
    int terms = static_cast<int>(rng.next_int(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        long long n = rng.next_int(lo, hi);
        Rational re = rat(rng.next_int(-max_height, max_height), rng.next_int(1, max_height));
        Rational im = rat(rng.next_int(-max_height, max_height), rng.next_int(1, max_height));
        u.set(n, u.at(n) + GaussianRational(re, im));
    }
    return u;
}

}  // namespace hardyforge
