#include "hardyforge/spectral.hpp"

#include "hardyforge/parallel.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hardyforge {

double BandedSymMatrix::quad_form(std::span<const double> u) const {
    if (static_cast<long>(u.size()) != dim_) throw std::invalid_argument("vector/matrix size mismatch");
    double acc = 0.0;
    for (long i = 0; i < dim_; ++i) {
        acc += at(i, i) * u[i] * u[i];
        for (long j = std::max<long>(0, i - bandwidth_); j < i; ++j)
            acc += 2.0 * at(i, j) * u[i] * u[j];
    }
    return acc;
}

namespace {

using Stencil = std::map<long, double>;  // (L u)(n) = sum_t s[t] u(n - t)

Stencil convolve(const Stencil& a, const Stencil& b) {
    Stencil out;
    for (const auto& [s, x] : a)
        for (const auto& [t, y] : b) out[s + t] += x * y;
    return out;
}

Stencil stencil_for(const InequalityId& id) {
    const Stencil diff{{0, 1.0}, {1, -1.0}};
    const Stencil lap{{-1, -1.0}, {0, 2.0}, {1, -1.0}};
    Stencil s{{0, 1.0}};
    switch (id.kind) {
        case IneqKind::hardy_11:
        case IneqKind::cor22:
        case IneqKind::cor24: return diff;
        case IneqKind::cor26: return lap;
        case IneqKind::thm25_even:
        case IneqKind::thm28_even:
            for (long i = 0; i < id.m; ++i) s = convolve(s, lap);
            return s;
        case IneqKind::thm25_odd:
        case IneqKind::thm28_odd:
            for (long i = 0; i < id.m; ++i) s = convolve(s, lap);
            return convolve(diff, s);
        default:
            throw std::invalid_argument("no pencil for multi-term inequality " +
                                        to_string(id.kind));
    }
}

double signed_pow_d(double base, long e) {
    return SeqTraits<std::complex<double>>::signed_pow(base, e);
}

// LHS weight at position n; 0 encodes "term absent".
double lhs_weight(const InequalityId& id, long long n) {
    bool whole_line = on_integers(id);
    if (!whole_line && n < 1) return 0.0;
    switch (id.kind) {
        case IneqKind::hardy_11:
        case IneqKind::cor26:
        case IneqKind::thm25_even:
        case IneqKind::thm25_odd: return 1.0;
        case IneqKind::cor22: return signed_pow_d(static_cast<double>(n) - 0.5, 2 * id.k);
        case IneqKind::cor24: return signed_pow_d(static_cast<double>(n), 2 * id.k);
        case IneqKind::thm28_even: return signed_pow_d(static_cast<double>(n), 2 * id.k);
        case IneqKind::thm28_odd: return signed_pow_d(static_cast<double>(n) - 0.5, 2 * id.k);
        default: throw std::invalid_argument("no pencil weight for " + to_string(id.kind));
    }
}

long rhs_weight_exponent(const InequalityId& id) {
    switch (id.kind) {
        case IneqKind::hardy_11: return -2;
        case IneqKind::cor22:
        case IneqKind::cor24: return 2 * id.k - 2;
        case IneqKind::cor26: return -4;
        case IneqKind::thm25_even: return -4 * id.m;
        case IneqKind::thm25_odd: return -4 * id.m - 2;
        case IneqKind::thm28_even: return 2 * id.k - 4 * id.m;
        case IneqKind::thm28_odd: return 2 * id.k - 4 * id.m - 2;
        default: throw std::invalid_argument("no pencil weight for " + to_string(id.kind));
    }
}

}  // namespace

Pencil assemble(const InequalityId& id, long N) {
    validate(id);
    Stencil stencil = stencil_for(id);
    long z = zero_prefix_count(id);
    if (N < z) throw std::out_of_range("window too small for the id's zero conditions");

    long reach = 0;
    for (const auto& [t, c] : stencil) reach = std::max(reach, std::labs(t));
    long bandwidth = stencil.rbegin()->first - stencil.begin()->first;

    Pencil p;
    p.id = id;
    p.window_lo = z;
    p.window_hi = N;
    long dim = N - z + 1;
    p.a = BandedSymMatrix(dim, std::min(bandwidth, dim - 1));

    // A(i,j) = sum_n w(n) s(n-i) s(n-j) over every n the stencil connects to
    // the window; terms reaching outside use u = 0 (Dirichlet truncation).
    for (long long n = z - reach; n <= N + reach; ++n) {
        double w = lhs_weight(id, n);
        if (w == 0.0) continue;
        for (const auto& [t1, c1] : stencil) {
            long long i = n - t1;
            if (i < z || i > N) continue;
            for (const auto& [t2, c2] : stencil) {
                long long j = n - t2;
                if (j < z || j > N || j > i) continue;
                p.a.add(static_cast<long>(i - z), static_cast<long>(j - z), w * c1 * c2);
            }
        }
    }

    long e = rhs_weight_exponent(id);
    p.b_diag.resize(static_cast<std::size_t>(dim));
    for (long long n = z; n <= N; ++n)
        p.b_diag[static_cast<std::size_t>(n - z)] = signed_pow_d(static_cast<double>(n), e);
    return p;
}

long inertia(const Pencil& p, double lambda, bool& breakdown) {
    const long n = p.a.dim();
    const long b = p.a.bandwidth();
    breakdown = false;

    // Banded LDL^T of M = A - lambda B without pivoting; row i keeps its b
    // subdiagonal multipliers. Negative pivots count eigenvalues below lambda.
    std::vector<double> pivots(static_cast<std::size_t>(n));
    std::vector<double> mult(static_cast<std::size_t>(n) * static_cast<std::size_t>(b), 0.0);
    auto L = [&](long i, long d) -> double& {  // multiplier of row i against row i-d, d in [1,b]
        return mult[static_cast<std::size_t>(i) * b + static_cast<std::size_t>(d - 1)];
    };

    long negatives = 0;
    for (long i = 0; i < n; ++i) {
        double s = p.a.at(i, i) - lambda * p.b_diag[static_cast<std::size_t>(i)];
        for (long d = 1; d <= b && i - d >= 0; ++d) s -= L(i, d) * L(i, d) * pivots[i - d];
        if (s == 0.0 || !std::isfinite(s)) {
            breakdown = true;
            return negatives;
        }
        pivots[static_cast<std::size_t>(i)] = s;
        if (s < 0.0) ++negatives;
        for (long r = i + 1; r <= std::min(i + b, n - 1); ++r) {
            double v = p.a.at(r, i);  // B is diagonal: off-diagonal of M is A's
            // accumulate the Schur updates from rows both r and i connect to
            for (long d = 1; d <= b; ++d) {
                long q = r - d;
                if (q < 0 || q >= i) continue;
                long dq = i - q;
                if (dq >= 1 && dq <= b) v -= L(r, d) * L(i, dq) * pivots[q];
            }
            L(r, r - i) = v / s;
        }
    }
    return negatives;
}

double min_eig(const Pencil& p, double tol) {
    if (tol <= 0.0) throw std::out_of_range("tol must be positive");
    const long n = p.a.dim();

    // Gershgorin bound for B^{-1/2} A B^{-1/2}.
    double upper = 0.0;
    for (long i = 0; i < n; ++i) {
        double row = 0.0;
        for (long j = std::max<long>(0, i - p.a.bandwidth());
             j <= std::min<long>(n - 1, i + p.a.bandwidth()); ++j)
            row += std::abs(p.a.at(i, j)) /
                   std::sqrt(p.b_diag[static_cast<std::size_t>(i)] *
                             p.b_diag[static_cast<std::size_t>(j)]);
        upper = std::max(upper, row);
    }
    upper = std::max(upper, tol);

    auto count = [&](double lambda) {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            bool breakdown = false;
            long neg = inertia(p, lambda, breakdown);
            if (!breakdown) return neg;
            lambda += tol / 8.0;  // breakdown: lambda is an eigenvalue of a leading submatrix
        }
        throw std::runtime_error("factorization breakdown persisted after perturbation");
    };

    double hi = upper;
    for (int widen = 0; widen < 64 && count(hi) < 1; ++widen) hi *= 2.0;
    double lo = 0.0;
    while (hi - lo > tol) {
        double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;  // double resolution exhausted
        if (count(mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return lo + (hi - lo) / 2.0;
}

std::vector<SpectralRow> sweep(const InequalityId& id, const std::vector<long>& N_list, double tol,
                               int threads) {
    validate(id);
    std::vector<SpectralRow> rows(N_list.size());
    parallel_for(static_cast<long>(N_list.size()), threads, [&](long i) {
        SpectralRow row;
        row.N = N_list[static_cast<std::size_t>(i)];
        row.lambda_min = min_eig(assemble(id, row.N), tol);
        rows[static_cast<std::size_t>(i)] = row;
    });
    return rows;
}

}  // namespace hardyforge
