// Finite truncations of the inequality Rayleigh quotients as symmetric banded
// generalized eigenvalue pencils (A, B): A is the LHS quadratic form on
// sequences supported in the trial window with Dirichlet truncation, B the
// diagonal RHS weight. The minimal eigenvalue is located by bisection on the
// inertia (negative-pivot count) of the banded LDL^T factorization of
// A - lambda B: deterministic, certainly bracketing, insensitive to
// clustering at the bottom of the spectrum.

#pragma once

#include "hardyforge/inequalities.hpp"

#include <span>
#include <vector>

namespace hardyforge {

class BandedSymMatrix {
  public:
    BandedSymMatrix() = default;
    BandedSymMatrix(long dim, long bandwidth)
        : dim_(dim), bandwidth_(bandwidth),
          band_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(bandwidth + 1), 0.0) {}

    long dim() const { return dim_; }
    long bandwidth() const { return bandwidth_; }

    // A(i, j); zero outside the band. Symmetric storage of the lower band.
    double at(long i, long j) const {
        if (j > i) std::swap(i, j);
        if (i - j > bandwidth_) return 0.0;
        return band_[slot(i, j)];
    }

    void add(long i, long j, double value) {
        if (j > i) std::swap(i, j);
        band_[slot(i, j)] += value;
    }

    double quad_form(std::span<const double> u) const;

  private:
    std::size_t slot(long i, long j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(bandwidth_ + 1) +
               static_cast<std::size_t>(j - (i - bandwidth_));
    }

    long dim_ = 0;
    long bandwidth_ = 0;
    std::vector<double> band_;
};

struct Pencil {
    BandedSymMatrix a;
    std::vector<double> b_diag;  // strictly positive on the trial window
    InequalityId id;
    long window_lo = 1;  // trial indices [window_lo, window_hi] map to rows 0..dim-1
    long window_hi = 1;
};

// Builds the pencil for the id's single-moment form over the trial window
// [z, N], z = zero_prefix_count(id). The LHS sum keeps every term the stencil
// reaches (u = 0 outside the window); N-only ids drop weights at n <= 0.
Pencil assemble(const InequalityId& id, long N);

// Count of negative pivots of A - lambda B. Pivot breakdown (a zero pivot:
// lambda hits an eigenvalue of a leading submatrix) reports breakdown = true.
long inertia(const Pencil& p, double lambda, bool& breakdown);

// Smallest lambda with det(A - lambda B) = 0, within +-tol. Bracket starts at
// [0, Gershgorin bound of B^{-1/2} A B^{-1/2}]; breakdown at a bisection
// point perturbs lambda by tol/8 and retries.
double min_eig(const Pencil& p, double tol);

struct SpectralRow {
    long N = 0;
    double lambda_min = 0.0;
};

std::vector<SpectralRow> sweep(const InequalityId& id, const std::vector<long>& N_list, double tol,
                               int threads = 1);

}  // namespace hardyforge
