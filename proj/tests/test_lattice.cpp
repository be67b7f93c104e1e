#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardyforge/lattice.hpp"

#include <cmath>

using namespace hardyforge;

namespace {

GaussianRational gr(long num, long den = 1) { return GaussianRational(rat(num, den)); }

ExactSeq delta(long long n) { return ExactSeq::delta(n, gr(1)); }

// independent evaluation of |z|^2 sums in plain double arithmetic
double dsum_moment(const ExactSeq& u, long p, bool positive_only) {
    double acc = 0;
    for (long long n = u.lo(); n <= u.hi(); ++n) {
        if (positive_only && n < 1) continue;
        if (p < 0 && n == 0) continue;
        GaussianRational z = u.at(n);
        double sq = to_double(z.re) * to_double(z.re) + to_double(z.im) * to_double(z.im);
        acc += sq * std::pow(static_cast<double>(n), static_cast<double>(p));
    }
    return acc;
}

}  // namespace

TEST_CASE("backward difference") {
    ExactSeq d1 = delta(1);
    ExactSeq diff = backward_diff(d1);
    CHECK(diff.at(1) == gr(1));
    CHECK(diff.at(2) == gr(-1));
    CHECK(diff.at(0).is_zero());

    ExactSeq block;  // constant 1 on [1, 5]
    for (long long n = 1; n <= 5; ++n) block.set(n, gr(1));
    ExactSeq db = backward_diff(block);
    CHECK(db.at(1) == gr(1));
    CHECK(db.at(6) == gr(-1));
    for (long long n = 2; n <= 5; ++n) CHECK(db.at(n).is_zero());

    ExactSeq ramp;  // u(n) = n on [1, 3]
    for (long long n = 1; n <= 3; ++n) ramp.set(n, gr(n));
    ExactSeq dr = backward_diff(ramp);
    for (long long n = 1; n <= 3; ++n) CHECK(dr.at(n) == gr(1));
    CHECK(dr.at(4) == gr(-3));
}

TEST_CASE("discrete Laplacian stencils") {
    ExactSeq d0 = delta(0);
    ExactSeq lap = laplacian(d0);
    CHECK(lap.at(-1) == gr(-1));
    CHECK(lap.at(0) == gr(2));
    CHECK(lap.at(1) == gr(-1));

    ExactSeq linear;  // u(n) = n on [-6, 6]; interior second difference vanishes
    for (long long n = -6; n <= 6; ++n) linear.set(n, gr(n));
    ExactSeq ll = laplacian(linear);
    for (long long n = -5; n <= 5; ++n) CHECK(ll.at(n).is_zero());

    ExactSeq lap2 = laplacian_power(d0, 2);  // stencil convolved with itself
    CHECK(lap2.at(-2) == gr(1));
    CHECK(lap2.at(-1) == gr(-4));
    CHECK(lap2.at(0) == gr(6));
    CHECK(lap2.at(1) == gr(-4));
    CHECK(lap2.at(2) == gr(1));

    CHECK(d_laplacian_power(d0, 1).at(-1) == gr(-1));  // D applied after Lap
}

TEST_CASE("unnormalized Fourier transform") {
    CHECK(fourier(delta(0)) == HalfFreqPoly::constant(gr(1)));
    CHECK(fourier(delta(1)) == HalfFreqPoly::exp_half(-2));  // e^{-ix}

    // delta_1 - delta_0: e^{-ix} - 1 = -2i e^{-ix/2} sin(x/2)
    ExactSeq u = delta(1);
    u.set(0, gr(-1));
    HalfFreqPoly lhs = fourier(u);
    HalfFreqPoly rhs = GaussianRational(rat(0), rat(-2)) *
                       (HalfFreqPoly::exp_half(-1) * HalfFreqPoly::sin_half());
    CHECK(lhs == rhs);

    // linear + injective: coefficients read back at doubled index -2n
    Rng rng(3);
    ExactSeq r = random_exact_seq(rng, -9, 9, 12, 9);
    HalfFreqPoly g = fourier(r);
    for (long long n = r.lo(); n <= r.hi(); ++n) CHECK(g.coeff(-2 * n) == r.at(n));
}

TEST_CASE("Parseval bridges: hand case delta_1, k = 1") {
    ExactSeq u = delta(1);
    // sum |Du|^2 (n-1/2)^2 = 1/4 + 9/4 = 5/2
    Rational lhs = weighted_sq_sum(backward_diff(u), WeightKind::half_shift_pow, 2,
                                   Domain::integers);
    CHECK(lhs == rat(5, 2));
    // Fourier side: 4 * int |d(e^{-ix} sin(x/2))|^2 = 4 * (5/8) * 2pi/(2pi) ... = 5pi
    PiValue fourier_side =
        rat(4) *
        integrate_real((fourier(u) * HalfFreqPoly::sin_half()).derivative(1).mod_squared());
    CHECK(fourier_side == PiValue::pi_times(rat(5)));  // = 2pi * 5/2

    ParsevalReport rep = parseval_bridge(u, 1, 1, 1);  // j = k: plain Parseval
    CHECK(rep.all);
    CHECK(moment(u, 0, Domain::integers) == rat(1));
}

TEST_CASE("Parseval bridges: random exact sequences") {
    Rng rng(20240601);
    for (int t = 0; t < 50; ++t) {
        ExactSeq u = random_exact_seq(rng, -20, 20, 20, 20);
        long k = rng.next_int(1, 5);
        long j = rng.next_int(0, k);
        long m = rng.next_int(0, 2);
        ParsevalReport rep = parseval_bridge(u, k, j, m);
        CHECK(rep.eq_moment);
        CHECK(rep.eq_diff);
        CHECK(rep.eq_lap_energy);
        CHECK(rep.eq_lap_symbol);
    }
    CHECK_THROWS_AS(parseval_bridge(delta(1), 1, 2, 1), std::out_of_range);
}

TEST_CASE("side condition sums") {
    // v = delta_1, m = 1, k = 1: only j = 1, j' = 1 contributes: -1/2
    CHECK(side_condition(delta(1), 1, 1) == gr(-1, 2));

    // supported on N_0 with a 2m-zero prefix: vanishes for 1 <= k <= 2m
    Rng rng(31);
    for (long m = 1; m <= 3; ++m) {
        ExactSeq v = random_exact_seq(rng, 2 * m, 2 * m + 20, 15, 9);
        for (long k = 1; k <= 2 * m; ++k) CHECK(side_condition(v, m, k).is_zero());
    }
    // one more zero: vanishes for 0 <= k <= 2m as well
    for (long m = 1; m <= 3; ++m) {
        ExactSeq v = random_exact_seq(rng, 2 * m + 1, 2 * m + 20, 15, 9);
        for (long k = 0; k <= 2 * m; ++k) CHECK(side_condition(v, m, k).is_zero());
    }

    // independent double-precision transcription of the double sum
    for (int t = 0; t < 10; ++t) {
        ExactSeq v = random_exact_seq(rng, -6, 6, 10, 9);
        v.set(0, GaussianRational());
        long m = rng.next_int(1, 3);
        long k = rng.next_int(1, 2 * m);
        double expect = 0;
        for (long j = 0; j <= 2 * m - k; ++j)
            for (long jp = 0; jp <= j; ++jp) {
                if (2 * jp == j) continue;
                double arg = static_cast<double>(2 * jp - j);
                expect += to_double(rat(binom(2 * m - k, j) * binom(j, jp))) *
                          std::pow(-0.5, static_cast<double>(j)) *
                          std::pow(arg, static_cast<double>(-k)) * to_double(v.at(2 * jp - j).re);
            }
        CHECK(std::abs(to_double(side_condition(v, m, k).re) - expect) <= 1e-12 *
                  std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("quadratic forms against naive summation") {
    ExactSeq d1 = delta(1);
    CHECK(moment(d1, -2, Domain::positive) == rat(1));
    FormParams p;
    p.m = 1;
    CHECK(form(d1, FormId::lap_sq, p) == rat(6));  // 1 + 4 + 1

    ExactSeq u;  // delta_2 + delta_3: Lap u = -1, 1, 1, -1 on n = 1..4
    u.set(2, gr(1));
    u.set(3, gr(1));
    CHECK(form(u, FormId::lap_sq, p) == rat(4));

    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        ExactSeq v = random_exact_seq(rng, -8, 8, 10, 9);
        v.set(0, GaussianRational());
        // moments vs double-loop oracle
        for (long pw : {-2L, 0L, 2L, 4L}) {
            double oracle = dsum_moment(v, pw, false);
            CHECK(std::abs(to_double(moment(v, pw, Domain::integers)) - oracle) <=
                  1e-11 * std::max(1.0, std::abs(oracle)));
        }
        // difference energy vs oracle
        ExactSeq dv = backward_diff(v);
        double oracle = 0;
        for (long long n = dv.lo(); n <= dv.hi(); ++n) {
            GaussianRational z = dv.at(n);
            double sq = to_double(z.re) * to_double(z.re) + to_double(z.im) * to_double(z.im);
            oracle += sq * std::pow(static_cast<double>(n) - 0.5, 4.0);
        }
        FormParams fp;
        fp.k = 2;
        fp.domain = Domain::integers;
        CHECK(std::abs(to_double(form(v, FormId::diff_sq_half_pow, fp)) - oracle) <=
              1e-11 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("numeric mode agrees with exact mode") {
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        ExactSeq v = random_exact_seq(rng, -10, 10, 12, 20);
        v.set(0, GaussianRational());
        NumSeq w = to_numeric(v);
        for (FormId id : {FormId::diff_sq_half_pow, FormId::diff_sq_pow, FormId::lap_sq,
                          FormId::d_lap_sq, FormId::lap_sq_pow, FormId::d_lap_sq_half_pow}) {
            FormParams fp;
            fp.k = 2;
            fp.m = 2;
            fp.domain = Domain::integers;
            double exact = to_double(form(v, id, fp));
            double numeric = form(w, id, fp);
            CHECK(std::abs(exact - numeric) <= 1e-12 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("negative moments require a zero at the origin") {
    ExactSeq u = delta(0);
    CHECK_THROWS_AS(moment(u, -2, Domain::integers), std::invalid_argument);
    NumSeq w = to_numeric(delta(0));
    CHECK_THROWS_AS(moment(w, -4, Domain::integers), std::invalid_argument);
}
