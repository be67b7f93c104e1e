#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardyforge/trigpoly.hpp"

using namespace hardyforge;

namespace {
GaussianRational gr(long num, long den = 1) { return GaussianRational(rat(num, den)); }
}  // namespace

TEST_CASE("pi enclosure and PiValue signs") {
    Rational lo, hi;
    pi_enclosure(65, lo, hi);
    CHECK(lo < hi);
    CHECK(lo > rat(3));
    CHECK(hi < rat(4));

    CHECK(PiValue(rat(-3), rat(1)).sign() == 1);        // pi > 3
    CHECK(PiValue(rat(22, 7), rat(-1)).sign() == 1);    // 22/7 > pi
    CHECK(PiValue(rat(-22, 7), rat(1)).sign() == -1);
    CHECK(PiValue(rat(-314159, 100000), rat(1)).sign() == 1);
    CHECK(PiValue(rat(-3141593, 1000000), rat(1)).sign() == -1);
    CHECK(PiValue().sign() == 0);
    CHECK(PiValue(rat(0), rat(-2)).sign() == -1);
    CHECK(PiValue::pi_times(rat(7, 8)) == PiValue(rat(0), rat(7, 8)));
    CHECK(PiValue(rat(1), rat(1)) >= PiValue(rat(0), rat(1)));
}

TEST_CASE("derivatives") {
    HalfFreqPoly half_cos_half = GaussianRational(rat(1, 2)) * HalfFreqPoly::cos_half();
    CHECK(HalfFreqPoly::sin_half().derivative() == half_cos_half);
    CHECK(HalfFreqPoly::constant(gr(3)).derivative().is_zero());

    // d e^{inx} = in e^{inx} (doubled index 2n)
    HalfFreqPoly e2 = HalfFreqPoly::exp_half(4);  // e^{2ix}
    CHECK(e2.derivative() == HalfFreqPoly::exp_half(4, GaussianRational(rat(0), rat(2))));
    CHECK(e2.derivative(3) == HalfFreqPoly::exp_half(4, GaussianRational(rat(0), rat(-8))));
}

TEST_CASE("products and mod_squared") {
    // sin^2(x/2) = 1/2 - 1/2 cos x
    HalfFreqPoly sin_sq = HalfFreqPoly::sin_half() * HalfFreqPoly::sin_half();
    HalfFreqPoly expected = HalfFreqPoly::constant(gr(1, 2)) -
                            (GaussianRational(rat(1, 2)) * HalfFreqPoly::cos_x());
    CHECK(sin_sq == expected);
    CHECK(sin_sq == HalfFreqPoly::sin_half_even_power(1));

    CHECK(HalfFreqPoly::exp_half(7).mod_squared() == HalfFreqPoly::constant(gr(1)));

    // e^{ix} sin(x/2) = (e^{3ix/2} - e^{ix/2}) / (2i)
    HalfFreqPoly prod = HalfFreqPoly::exp_half(2) * HalfFreqPoly::sin_half();
    CHECK(prod.coeff(3) == GaussianRational(rat(0), rat(-1, 2)));
    CHECK(prod.coeff(1) == GaussianRational(rat(0), rat(1, 2)));
    CHECK(prod.term_count() == 2);
}

TEST_CASE("exact integration over [-pi, pi]") {
    CHECK(HalfFreqPoly::constant(gr(1)).integrate().re == PiValue(rat(0), rat(2)));  // 2pi
    CHECK(integrate_real(HalfFreqPoly::sin_half_even_power(1)) == PiValue::pi_times(rat(1)));
    CHECK(HalfFreqPoly::cos_half().integrate().re == PiValue(rat(4), rat(0)));
    CHECK(HalfFreqPoly::exp_half(2).integrate().is_zero());   // e^{ix}
    CHECK(HalfFreqPoly::exp_half(1).integrate().re == PiValue(rat(4), rat(0)));
    CHECK(HalfFreqPoly::exp_half(-3).integrate().re == PiValue(rat(4, 3), rat(0)));

    // |.|^2 integrals of single-parity polynomials are pure pi multiples
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        HalfFreqPoly p = random_integer_lattice_poly(rng, 6, 10, 9);
        CPiValue v = p.mod_squared().integrate();
        CHECK(v.im.is_zero());
        CHECK(v.re.rat == 0);
        // odd coset: multiply by e^{ix/2}; |.|^2 is unchanged on the diagonal
        CPiValue w = (p * HalfFreqPoly::exp_half(1)).mod_squared().integrate();
        CHECK(w.im.is_zero());
        CHECK(w.re.rat == 0);
        CHECK(w.re == v.re);
    }
}

TEST_CASE("integration by parts on the integer lattice") {
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        HalfFreqPoly p = random_integer_lattice_poly(rng, 5, 8, 7);
        HalfFreqPoly q = random_integer_lattice_poly(rng, 5, 8, 7);
        CPiValue lhs = (p.derivative() * q).integrate();
        CPiValue rhs = (p * q.derivative()).integrate();
        CHECK(lhs == CPiValue() - rhs);
    }
}

TEST_CASE("derivative-splitting identity: hand cases") {
    // u = 1, k = 1: only the beta_0^1 = 1/4 term survives; both sides pi/4
    LemmaReport r = verify_lemma31(HalfFreqPoly::constant(gr(1)), 1);
    CHECK(r.exact_equal);
    CHECK(r.lhs == PiValue::pi_times(rat(1, 4)));

    // u = e^{ix}, k = 1: both sides 5pi/4
    LemmaReport r2 = verify_lemma31(HalfFreqPoly::exp_half(2), 1);
    CHECK(r2.exact_equal);
    CHECK(r2.lhs == PiValue::pi_times(rat(5, 4)));

    CHECK_THROWS_AS(verify_lemma31(HalfFreqPoly::exp_half(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma31(HalfFreqPoly::constant(gr(1)), 0), std::out_of_range);
}

TEST_CASE("derivative-splitting identity: random polynomials") {
    Rng rng(20240601);
    for (int t = 0; t < 60; ++t) {
        HalfFreqPoly u = random_integer_lattice_poly(rng);
        for (long k = 1; k <= 5; ++k) {
            LemmaReport r = verify_lemma31(u, k);
            CHECK(r.exact_equal);
        }
    }
}

TEST_CASE("zero-average first-order bound") {
    LemmaReport zero = verify_lemma32(HalfFreqPoly());
    CHECK(zero.margin.is_zero());
    CHECK(zero.nonnegative);

    // u = e^{ix}: pi - (1/16)(2pi) = 7pi/8
    LemmaReport r = verify_lemma32(HalfFreqPoly::exp_half(2));
    CHECK(r.margin == PiValue::pi_times(rat(7, 8)));
    CHECK(r.nonnegative);

    CHECK_THROWS_AS(verify_lemma32(HalfFreqPoly::constant(gr(1))), std::invalid_argument);

    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        HalfFreqPoly u = project_zero_average(random_integer_lattice_poly(rng));
        CHECK(verify_lemma32(u).nonnegative);
    }
}

TEST_CASE("averaged derivative-splitting bound") {
    CHECK(verify_lemma33(HalfFreqPoly(), 3).margin.is_zero());

    LemmaReport bad = verify_lemma33(HalfFreqPoly::constant(gr(1)), 2);
    CHECK_FALSE(bad.admissible);

    Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        HalfFreqPoly u = project_zero_average(random_integer_lattice_poly(rng));
        for (long k = 1; k <= 4; ++k) {
            LemmaReport r = verify_lemma33(u, k);
            CHECK(r.admissible);
            CHECK(r.nonnegative);
        }
    }
}

TEST_CASE("weighted first-order bound") {
    // k = 2, u = e^{ix} + 1/2 (unique constant shift with int u sin^2 = 0):
    // margin = 3pi/4 - (1/2)(3pi/4) = 3pi/8
    HalfFreqPoly u = project_weighted_zero_average(HalfFreqPoly::exp_half(2), 2);
    CHECK(u.coeff(0) == gr(1, 2));
    LemmaReport r = verify_lemma35(u, 2);
    CHECK(r.admissible);
    CHECK(r.margin == PiValue::pi_times(rat(3, 8)));

    CHECK(verify_lemma35(HalfFreqPoly(), 2).margin.is_zero());
    CHECK_FALSE(verify_lemma35(HalfFreqPoly::constant(gr(1)), 2).admissible);
    CHECK_THROWS_AS(verify_lemma35(HalfFreqPoly(), 1), std::out_of_range);

    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        for (long k = 2; k <= 5; ++k) {
            HalfFreqPoly v =
                project_weighted_zero_average(random_integer_lattice_poly(rng), k);
            CHECK((v * HalfFreqPoly::sin_half_even_power(k - 1)).integrate().is_zero());
            LemmaReport rr = verify_lemma35(v, k);
            CHECK(rr.admissible);
            CHECK(rr.nonnegative);
        }
    }
}

TEST_CASE("second-order splitting bound") {
    // k = 2, u = e^{ix}: int |d^2(u sin^2)|^2 = 5pi/2, coefficient = 1/32,
    // int |u|^2 = 2pi, margin = 5pi/2 - pi/16 = 39pi/16
    LemmaReport r = verify_lemma36(HalfFreqPoly::exp_half(2), 2);
    CHECK(r.admissible);
    CHECK(r.margin == PiValue::pi_times(rat(39, 16)));

    CHECK(verify_lemma36(HalfFreqPoly(), 4).margin.is_zero());

    Rng rng(9);
    for (int t = 0; t < 25; ++t) {
        HalfFreqPoly u = project_zero_average(random_integer_lattice_poly(rng));
        for (long k = 2; k <= 5; ++k) {
            LemmaReport rr = verify_lemma36(u, k);
            CHECK(rr.admissible);
            CHECK(rr.nonnegative);
        }
    }
}

TEST_CASE("closed-form integrals of e^{inx/2} sin(x/2)") {
    SupportIdentityReport r = verify_eqs_63_65(0, 0, 1);
    CHECK(r.eq63);  // int sin^2 = pi = pi/2 (1 + 1)
    CHECK(r.eq64);  // int sin^2 cos x = -pi/2
    CHECK(r.eq65);

    for (long n = -10; n <= 10; ++n)
        for (long m = 0; m <= 3; ++m)
            for (long k = 1; k <= 3; ++k) CHECK(verify_eqs_63_65(n, m, k).all);
}
