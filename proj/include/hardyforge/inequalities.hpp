// Evaluation of every inequality in scope on arbitrary admissible sequences:
// LHS, the full list of RHS terms (constants from the combinatorics module),
// and the margin LHS - RHS. A seeded randomized harness drives numeric trials
// with periodic exact re-checks, and the n^beta / linear-ramp test family
// reproduces the sharpness of the first-order constants.

#pragma once

#include "hardyforge/combinatorics.hpp"
#include "hardyforge/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hardyforge {

enum class IneqKind {
    hardy_11,
    thm21,
    cor22,
    cor23,
    cor24,
    thm25_even,
    thm25_odd,
    cor26,
    thm28_even,
    thm28_odd,
};

struct InequalityId {
    IneqKind kind = IneqKind::hardy_11;
    long k = 1;
    long m = 1;
};

std::string to_string(IneqKind kind);
std::optional<IneqKind> ineq_kind_from_string(const std::string& name);

// Throws std::out_of_range when (k, m) violate the id's parameter ranges
// (k >= 1, m >= 1, thm28_even: k >= 2m, thm28_odd: k >= 2m+1).
void validate(const InequalityId& id);

// Number of leading zero values the trial space requires (u(i) = 0 for
// 0 <= i < zero_prefix). 1 for the first-order and thm28 ids, 2m / 2m+1 for
// the higher-order ids.
long zero_prefix_count(const InequalityId& id);

// True when the id's sums run over Z (thm21/cor22/thm28); false for N-only.
bool on_integers(const InequalityId& id);

// The explicit constant the paper attaches to the id's single-moment form.
// (For thm21/cor23 this is gamma_1^k, the leading RHS coefficient.)
Rational paper_constant(const InequalityId& id);

template <class Real>
struct RhsTerm {
    std::string label;
    Rational coefficient;
    Real moment{};
};

template <class Real>
struct CheckReport {
    bool admissible = true;
    std::string admissibility_error;
    Real lhs{};
    std::vector<RhsTerm<Real>> rhs_terms;
    Real rhs_total{};
    Real margin{};  // lhs - rhs_total; meaningful only when admissible
};

CheckReport<Rational> check(const InequalityId& id, const ExactSeq& u);
CheckReport<double> check(const InequalityId& id, const NumSeq& u);

struct SuiteResult {
    InequalityId id;
    long trials = 0;
    std::uint64_t seed = 0;
    long window = 0;
    double min_margin = 0.0;      // over numeric trials
    double min_margin_rel = 0.0;  // margin / max(1, rhs)
    long failures = 0;            // numeric margin < -1e-9 * max(1, rhs)
    long exact_checks = 0;        // every 50th trial re-run exactly
    long exact_failures = 0;      // exact margin < 0
    bool pass = false;
};

// Deterministic given (id, trials, seed): draws admissible sequences on the
// window (required zeros enforced by construction), evaluates numerically,
// and re-checks every 50th trial in exact arithmetic.
SuiteResult random_suite(const InequalityId& id, long trials, std::uint64_t seed, long window,
                         int threads = 1);

// The sharpness family: n^beta on [1, N], the linear ramp
// -N^{beta-1} n + 2 N^beta on [N, 2N], zero elsewhere.
NumSeq sharpness_family(double beta, long N);

struct SweepRow {
    double beta = 0.0;
    long N = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double quotient = 0.0;
    double gap = 0.0;  // quotient - (2k-1)^2/4
};

// Quotients LHS/RHS of cor22 or cor24 over the (beta, N) grid. Every beta
// must satisfy |beta - (1-2k)/2| < 1/2 (and != (1-2k)/2): outside that band
// the family no longer approaches the sharp constant and the grid is refused.
std::vector<SweepRow> sharpness_sweep(const InequalityId& id, const std::vector<double>& beta_grid,
                                      const std::vector<long>& N_grid, int threads = 1);

// Default grids: beta = (1-2k)/2 +- 2^{-j} for j = 1..j_max, N = 10^2..10^6.
std::vector<double> default_beta_grid(long k, long j_max = 8);
std::vector<long> default_sweep_N_grid();

}  // namespace hardyforge
