// Exact computation of the combinatorial constants behind the weighted Hardy
// and Rellich inequalities:
//
//   xi_i^k      double sum over (m, n) of (-1)^n 2^{n-m} C(k+1, i-m) C(k, i+n) C(n-1, m)
//   alpha_i^k   2^{2(k-i)} alpha = 1/2 C(2k, 2i) - 1/2 (-1)^{k-i} [C(k,i)^2 + xi_i^k]
//   beta_i^k    2^{2(k-i)} beta  = (-1)^{k-i} [xi_i^k + C(k,i)^2]
//   gamma_i^k   4 alpha_{k-i}^k + 1/4 beta_{k-i+1}^k
//
// together with the simplified closed forms
//
//   2^{2(k-i)} alpha_i^k = 1/2 C(2k,2i) - 1/2 C(k,i),   2^{2(k-i)} beta_i^k = C(k,i),
//
// whose agreement with the raw sums is the combinatorial identity
//
//   xi_i^k = (-1)^{k-i} C(k,i) - C(k,i)^2.
//
// gamma_printed deliberately implements the inconsistent published variant of
// the gamma formula so the discrepancy can be reported; see gamma_erratum().

#pragma once

#include "hardyforge/rational.hpp"

#include <memory>
#include <vector>

namespace hardyforge {

// Binomial coefficient; 0 when r < 0 or r > n. Rejects n < 0.
Integer binom(long n, long r);

Integer factorial(long n);

// The double sum xi_i^k (always integer-valued). Requires k >= 1, 0 <= i <= k.
Rational xi(long k, long i);

Rational alpha_raw(long k, long i);
Rational alpha_simplified(long k, long i);
Rational beta_raw(long k, long i);
Rational beta_simplified(long k, long i);

// Canonical values (the simplified closed forms).
Rational alpha(long k, long i);
Rational beta(long k, long i);

// gamma_i^k = 4 alpha_{k-i}^k + 1/4 beta_{k-i+1}^k. Requires 1 <= i <= k.
Rational gamma(long k, long i);

// The published gamma formula taken verbatim:
//   2^{2(k-i)} gamma_i^k = 2 C(2k,2i) - 2 C(k,i) + 1/4 C(k,i-1).
// Kept solely for comparison against gamma(); they disagree from k = 2 on.
Rational gamma_printed(long k, long i);

struct ConstantTable {
    long k = 0;
    std::vector<Rational> xi;             // index i in [0, k]
    std::vector<Rational> alpha;          // index i in [0, k]
    std::vector<Rational> beta;           // index i in [0, k]
    std::vector<Rational> gamma;          // index i in [1, k]; slot 0 unused
    std::vector<Rational> gamma_printed;  // same layout as gamma
};

// Cached per k; construction verifies raw == simplified for every i and the
// sign constraints (alpha >= 0, beta > 0, gamma > 0, alpha_k^k = 0).
std::shared_ptr<const ConstantTable> constant_table(long k);

struct IdentityCheck {
    long i = 0;
    Rational lhs;  // xi_i^k
    Rational rhs;  // (-1)^{k-i} C(k,i) - C(k,i)^2
    bool pass = false;
};

struct IdentityReport {
    long k = 0;
    bool all_pass = false;
    std::vector<IdentityCheck> checks;
};

// Exact check of the identity xi_i^k = (-1)^{k-i} C(k,i) - C(k,i)^2 for all i.
IdentityReport verify_identity_61(long k);

// Exact check of sum_i C(2k,2i) (n+-1)^{2i} = ((n+-2)^{2k} + n^{2k}) / 2.
bool verify_binomial_67_68(long k, const Integer& n);

struct GammaErratum {
    Rational printed;    // gamma_printed(2,1), gamma_printed(2,2)
    Rational canonical;  // gamma(2,1), gamma(2,2)
    bool consistent_at_k1 = false;
    bool inconsistent = false;  // true: the published formula differs at k = 2
};

// Compares the published gamma formula against the defining combination.
GammaErratum gamma_erratum();

enum class OrderVariant { even, odd };

// C(k) = k (k-1) (k - 3/2)^2, the per-step constant of the weighted
// higher-order inequalities.
Rational rellich_weight_c(long k);

// even: 2^{2m-3} (2m-1)!   odd: 2^{2m-2} (2m)!
Rational higher_order_const(long m, OrderVariant variant);

// even: prod_{i<m} C(k-2i) for k >= 2m
// odd:  (2k-1)^2/4 * prod_{i<m} C(k-1-2i) for k >= 2m+1
Rational product_const(long m, long k, OrderVariant variant);

}  // namespace hardyforge
