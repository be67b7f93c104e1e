#include "hardyforge/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hardyforge {

namespace {

// Pascal triangle cache; rows up to 2k+1 are hit heavily by xi() sweeps.
class PascalCache {
  public:
    const Integer& at(unsigned long n, unsigned long r) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (rows_.size() <= n) {
            std::size_t m = rows_.size();
            std::vector<Integer> row(m + 1);
            row[0] = 1;
            row[m] = 1;
            for (std::size_t j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][r];
    }

  private:
    std::mutex mutex_;
    std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

PascalCache& pascal() {
    static PascalCache cache;
    return cache;
}

void require_index(long k, long i, long lo) {
    if (k < 1) throw std::out_of_range("k must be >= 1");
    if (i < lo || i > k) throw std::out_of_range("index i out of range");
}

}  // namespace

Integer binom(long n, long r) {
    if (n < 0) throw std::domain_error("binom: negative n");
    if (r < 0 || r > n) return Integer(0);
    return pascal().at(static_cast<unsigned long>(n), static_cast<unsigned long>(r));
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative n");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational xi(long k, long i) {
    require_index(k, i, 0);
    Integer acc(0);
    long mmax_base = std::min(i, k - i);
    for (long n = 1; n <= k - i; ++n) {
        const Integer& bkn = binom(k, i + n);
        if (bkn == 0) continue;
        long mmax = std::min(mmax_base, n - 1);  // C(n-1, m) = 0 beyond
        for (long m = 0; m <= mmax; ++m) {
            Integer term = binom(k + 1, i - m) * bkn * binom(n - 1, m);
            term <<= static_cast<unsigned long>(n - m);
            if (n & 1)
                acc -= term;
            else
                acc += term;
        }
    }
    return rat(acc);
}

namespace {

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Rational alpha_raw(long k, long i) {
    require_index(k, i, 0);
    Rational b = rat(binom(k, i));
    Rational scaled = rat(binom(2 * k, 2 * i), Integer(2)) -
                      rat(sign_pow(k - i), 2) * (b * b + xi(k, i));
    return scaled * pow2(-2 * (k - i));
}

Rational alpha_simplified(long k, long i) {
    require_index(k, i, 0);
    Rational scaled = rat(binom(2 * k, 2 * i) - binom(k, i), Integer(2));
    return scaled * pow2(-2 * (k - i));
}

Rational beta_raw(long k, long i) {
    require_index(k, i, 0);
    Rational b = rat(binom(k, i));
    Rational scaled = rat(sign_pow(k - i)) * (xi(k, i) + b * b);
    return scaled * pow2(-2 * (k - i));
}

Rational beta_simplified(long k, long i) {
    require_index(k, i, 0);
    return rat(binom(k, i)) * pow2(-2 * (k - i));
}

Rational alpha(long k, long i) { return alpha_simplified(k, i); }
Rational beta(long k, long i) { return beta_simplified(k, i); }

Rational gamma(long k, long i) {
    require_index(k, i, 1);
    return rat(4) * alpha(k, k - i) + rat(1, 4) * beta(k, k - i + 1);
}

Rational gamma_printed(long k, long i) {
    require_index(k, i, 1);
    Rational scaled = rat(2) * rat(binom(2 * k, 2 * i)) - rat(2) * rat(binom(k, i)) +
                      rat(1, 4) * rat(binom(k, i - 1));
    return scaled * pow2(-2 * (k - i));
}

std::shared_ptr<const ConstantTable> constant_table(long k) {
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const ConstantTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    if (k < 1) throw std::out_of_range("k must be >= 1");

    auto table = std::make_shared<ConstantTable>();
    table->k = k;
    table->xi.resize(k + 1);
    table->alpha.resize(k + 1);
    table->beta.resize(k + 1);
    table->gamma.resize(k + 1);
    table->gamma_printed.resize(k + 1);
    for (long i = 0; i <= k; ++i) {
        table->xi[i] = xi(k, i);
        table->alpha[i] = alpha_simplified(k, i);
        table->beta[i] = beta_simplified(k, i);
        if (table->alpha[i] != alpha_raw(k, i) || table->beta[i] != beta_raw(k, i))
            throw std::logic_error("raw and simplified constants disagree");
        if (table->alpha[i] < 0 || table->beta[i] <= 0)
            throw std::logic_error("constant sign violation");
    }
    if (table->alpha[k] != 0) throw std::logic_error("alpha_k^k != 0");
    for (long i = 1; i <= k; ++i) {
        table->gamma[i] = gamma(k, i);
        table->gamma_printed[i] = gamma_printed(k, i);
        if (table->gamma[i] <= 0) throw std::logic_error("gamma sign violation");
    }

    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(k, std::move(table));
    (void)inserted;
    return it->second;
}

IdentityReport verify_identity_61(long k) {
    if (k < 1) throw std::out_of_range("k must be >= 1");
    IdentityReport report;
    report.k = k;
    report.all_pass = true;
    report.checks.reserve(k + 1);
    for (long i = 0; i <= k; ++i) {
        IdentityCheck c;
        c.i = i;
        c.lhs = xi(k, i);
        Rational b = rat(binom(k, i));
        c.rhs = rat(sign_pow(k - i)) * b - b * b;
        c.pass = (c.lhs == c.rhs);
        report.all_pass = report.all_pass && c.pass;
        report.checks.push_back(std::move(c));
    }
    return report;
}

bool verify_binomial_67_68(long k, const Integer& n) {
    if (k < 1) throw std::out_of_range("k must be >= 1");
    for (int sign : {+1, -1}) {
        Integer shifted = n + sign;
        Integer lhs(0);
        for (long i = 0; i <= k; ++i)
            lhs += binom(2 * k, 2 * i) * pow_int(shifted, static_cast<unsigned long>(2 * i));
        Integer rhs = pow_int(n + 2 * sign, static_cast<unsigned long>(2 * k)) +
                      pow_int(n, static_cast<unsigned long>(2 * k));
        if (2 * lhs != rhs) return false;
    }
    return true;
}

GammaErratum gamma_erratum() {
    GammaErratum e;
    e.printed = gamma_printed(2, 1);
    e.canonical = gamma(2, 1);
    e.consistent_at_k1 = (gamma_printed(1, 1) == gamma(1, 1));
    e.inconsistent = (e.printed != e.canonical) || (gamma_printed(2, 2) != gamma(2, 2));
    return e;
}

Rational rellich_weight_c(long k) {
    if (k < 1) throw std::out_of_range("k must be >= 1");
    return rat(k) * rat(k - 1) * pow_rat(rat(2 * k - 3, 2), 2);
}

Rational higher_order_const(long m, OrderVariant variant) {
    if (m < 1) throw std::out_of_range("m must be >= 1");
    if (variant == OrderVariant::even) return pow2(2 * m - 3) * rat(factorial(2 * m - 1));
    return pow2(2 * m - 2) * rat(factorial(2 * m));
}

Rational product_const(long m, long k, OrderVariant variant) {
    if (m < 1) throw std::out_of_range("m must be >= 1");
    if (variant == OrderVariant::even) {
        if (k < 2 * m) throw std::out_of_range("product_const(even): requires k >= 2m");
        Rational out(1);
        for (long i = 0; i < m; ++i) out *= rellich_weight_c(k - 2 * i);
        return out;
    }
    if (k < 2 * m + 1) throw std::out_of_range("product_const(odd): requires k >= 2m+1");
    Rational out = pow_rat(rat(2 * k - 1, 2), 2);
    for (long i = 0; i < m; ++i) out *= rellich_weight_c(k - 1 - 2 * i);
    return out;
}

}  // namespace hardyforge
