#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardyforge/inequalities.hpp"

#include <cmath>

using namespace hardyforge;

namespace {
GaussianRational gr(long num, long den = 1) { return GaussianRational(rat(num, den)); }
}  // namespace

TEST_CASE("id parsing and validation") {
    CHECK(ineq_kind_from_string("cor26") == IneqKind::cor26);
    CHECK(to_string(IneqKind::thm25_even) == "thm25_even");
    CHECK_FALSE(ineq_kind_from_string("nope").has_value());

    CHECK_THROWS_AS(validate({IneqKind::thm21, 0, 1}), std::out_of_range);
    CHECK_THROWS_AS(validate({IneqKind::thm28_even, 3, 2}), std::out_of_range);
    CHECK_THROWS_AS(validate({IneqKind::thm28_odd, 4, 2}), std::out_of_range);
    CHECK_NOTHROW(validate({IneqKind::thm28_even, 4, 2}));
    CHECK(zero_prefix_count({IneqKind::thm25_odd, 1, 2}) == 5);
    CHECK(zero_prefix_count({IneqKind::cor26, 1, 1}) == 2);
}

TEST_CASE("paper constants") {
    CHECK(paper_constant({IneqKind::hardy_11, 1, 1}) == rat(1, 4));
    CHECK(paper_constant({IneqKind::cor22, 2, 1}) == rat(9, 4));
    CHECK(paper_constant({IneqKind::cor26, 1, 1}) == rat(1, 2));
    CHECK(paper_constant({IneqKind::thm25_even, 1, 2}) == rat(12));
    CHECK(paper_constant({IneqKind::thm28_even, 4, 2}) == rat(75, 2));
    CHECK(paper_constant({IneqKind::thm28_odd, 3, 1}) == rat(25, 8));
    CHECK(paper_constant({IneqKind::thm21, 3, 1}) == rat(25, 4));  // gamma_1^3
}

TEST_CASE("check: hand-computed margins") {
    ExactSeq d1 = ExactSeq::delta(1, gr(1));
    auto hardy = check({IneqKind::hardy_11, 1, 1}, d1);
    CHECK(hardy.admissible);
    CHECK(hardy.lhs == rat(2));
    CHECK(hardy.rhs_total == rat(1, 4));
    CHECK(hardy.margin == rat(7, 4));

    ExactSeq d2 = ExactSeq::delta(2, gr(1));
    auto rellich = check({IneqKind::cor26, 1, 1}, d2);
    CHECK(rellich.lhs == rat(6));
    CHECK(rellich.rhs_total == rat(1, 32));
    CHECK(rellich.margin == rat(191, 32));

    // zero function: margin 0 for every id
    ExactSeq zero;
    for (auto id : std::vector<InequalityId>{{IneqKind::hardy_11, 1, 1},
                                             {IneqKind::thm21, 3, 1},
                                             {IneqKind::cor22, 2, 1},
                                             {IneqKind::cor23, 2, 1},
                                             {IneqKind::cor24, 1, 1},
                                             {IneqKind::thm25_even, 1, 2},
                                             {IneqKind::thm25_odd, 1, 1},
                                             {IneqKind::cor26, 1, 1},
                                             {IneqKind::thm28_even, 4, 2},
                                             {IneqKind::thm28_odd, 3, 1}}) {
        auto rep = check(id, zero);
        CHECK(rep.admissible);
        CHECK(rep.margin == 0);
    }
}

TEST_CASE("check: admissibility reporting") {
    ExactSeq neg = ExactSeq::delta(-2, gr(1));
    CHECK_FALSE(check({IneqKind::hardy_11, 1, 1}, neg).admissible);
    CHECK(check({IneqKind::cor22, 1, 1}, neg).admissible);  // Z-sided id accepts it

    ExactSeq at0 = ExactSeq::delta(0, gr(1));
    CHECK_FALSE(check({IneqKind::cor22, 1, 1}, at0).admissible);

    ExactSeq d3 = ExactSeq::delta(3, gr(1));
    CHECK_FALSE(check({IneqKind::thm25_even, 1, 2}, d3).admissible);  // needs zeros 0..3
    CHECK(check({IneqKind::thm25_even, 1, 2}, ExactSeq::delta(4, gr(1))).admissible);
}

TEST_CASE("exact and numeric margins agree") {
    Rng rng(2024);
    for (int t = 0; t < 15; ++t) {
        ExactSeq u = random_exact_seq(rng, 2, 25, 15, 9);
        NumSeq w = to_numeric(u);
        for (auto id : std::vector<InequalityId>{{IneqKind::hardy_11, 1, 1},
                                                 {IneqKind::cor24, 2, 1},
                                                 {IneqKind::cor26, 1, 1},
                                                 {IneqKind::thm28_even, 4, 2}}) {
            auto exact = check(id, u);
            auto numeric = check(id, w);
            REQUIRE(exact.admissible);
            CHECK(std::abs(to_double(exact.margin) - numeric.margin) <=
                  1e-11 * std::max(1.0, to_double(exact.lhs)));
            CHECK(exact.margin >= 0);
        }
    }
}

TEST_CASE("margin orderings between related inequalities") {
    Rng rng(99);
    for (int t = 0; t < 15; ++t) {
        ExactSeq u = random_exact_seq(rng, 1, 20, 12, 9);
        long k = rng.next_int(1, 4);
        auto thm21 = check({IneqKind::thm21, k, 1}, u);
        auto cor22 = check({IneqKind::cor22, k, 1}, u);
        auto cor23 = check({IneqKind::cor23, k, 1}, u);
        REQUIRE(thm21.admissible);
        // dropping the nonnegative remainder terms can only grow the margin
        CHECK(thm21.margin <= cor22.margin);
        // restriction to N_0 with n^{2k} >= (n-1/2)^{2k} grows the LHS only
        CHECK(thm21.margin <= cor23.margin);
        CHECK(thm21.margin >= 0);
    }
}

TEST_CASE("random suites stay nonnegative") {
    for (auto id : std::vector<InequalityId>{{IneqKind::hardy_11, 1, 1},
                                             {IneqKind::thm21, 2, 1},
                                             {IneqKind::cor23, 3, 1},
                                             {IneqKind::thm25_odd, 1, 1},
                                             {IneqKind::thm28_odd, 3, 1}}) {
        SuiteResult res = random_suite(id, 120, 20240601, 20, 2);
        CHECK(res.pass);
        CHECK(res.failures == 0);
        CHECK(res.exact_failures == 0);
        CHECK(res.exact_checks == 3);  // trials 0, 50, 100
    }
}

TEST_CASE("random suite is deterministic for a fixed seed") {
    InequalityId id{IneqKind::cor24, 2, 1};
    SuiteResult a = random_suite(id, 100, 7, 15, 1);
    SuiteResult b = random_suite(id, 100, 7, 15, 4);  // thread count must not matter
    CHECK(a.min_margin == b.min_margin);
    CHECK(a.min_margin_rel == b.min_margin_rel);
    SuiteResult c = random_suite(id, 100, 8, 15, 1);
    CHECK(a.min_margin != c.min_margin);  // different seed, different draws
}

TEST_CASE("sharpness family values") {
    NumSeq u1 = sharpness_family(0.7, 1);
    CHECK(u1.at(1) == std::complex<double>(1.0, 0.0));
    CHECK(u1.at(2) == std::complex<double>(0.0, 0.0));  // ramp endpoint: -1*2 + 2

    NumSeq u3 = sharpness_family(1.0, 3);
    for (long n = 1; n <= 3; ++n) CHECK(u3.at(n).real() == doctest::Approx(n).epsilon(1e-14));
    CHECK(u3.at(4).real() == doctest::Approx(2.0));  // 6 - n
    CHECK(u3.at(5).real() == doctest::Approx(1.0));
    CHECK(u3.at(6).real() == doctest::Approx(0.0));

    // spec's sample cell, frozen against the direct-summation oracle
    NumSeq u = sharpness_family(-0.49, 10000);
    auto rep = check({IneqKind::cor24, 1, 1}, u);
    double q = rep.lhs / rep.rhs_terms.front().moment;
    CHECK(q >= 0.25);
    CHECK(q <= 0.60);
    CHECK(q == doctest::Approx(0.5894619436579955).epsilon(1e-9));
}

TEST_CASE("sharpness sweep: floors, monotonicity, refusal") {
    for (auto id : std::vector<InequalityId>{{IneqKind::cor22, 1, 1}, {IneqKind::cor24, 2, 1}}) {
        auto rows = sharpness_sweep(id, default_beta_grid(id.k, 4), {100, 1000, 10000}, 2);
        double target = to_double(paper_constant(id));
        REQUIRE(rows.size() == 8 * 3);
        double prev = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].quotient >= target - 1e-9);
            CHECK(rows[i].gap == doctest::Approx(rows[i].quotient - target));
            if (i % 3 != 0) CHECK(rows[i].quotient <= prev + 1e-12);
            prev = rows[i].quotient;
        }
    }
    InequalityId id{IneqKind::cor22, 1, 1};
    CHECK_THROWS_AS(sharpness_sweep(id, {-0.5}, {100}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_sweep(id, {0.1}, {100}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_sweep({IneqKind::hardy_11, 1, 1}, {-0.4}, {100}, 1),
                    std::invalid_argument);
}
