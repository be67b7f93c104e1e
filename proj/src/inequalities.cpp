#include "hardyforge/inequalities.hpp"

#include "hardyforge/parallel.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace hardyforge {

std::string to_string(IneqKind kind) {
    switch (kind) {
        case IneqKind::hardy_11: return "hardy_11";
        case IneqKind::thm21: return "thm21";
        case IneqKind::cor22: return "cor22";
        case IneqKind::cor23: return "cor23";
        case IneqKind::cor24: return "cor24";
        case IneqKind::thm25_even: return "thm25_even";
        case IneqKind::thm25_odd: return "thm25_odd";
        case IneqKind::cor26: return "cor26";
        case IneqKind::thm28_even: return "thm28_even";
        case IneqKind::thm28_odd: return "thm28_odd";
    }
    return "?";
}

std::optional<IneqKind> ineq_kind_from_string(const std::string& name) {
    for (IneqKind kind :
         {IneqKind::hardy_11, IneqKind::thm21, IneqKind::cor22, IneqKind::cor23, IneqKind::cor24,
          IneqKind::thm25_even, IneqKind::thm25_odd, IneqKind::cor26, IneqKind::thm28_even,
          IneqKind::thm28_odd})
        if (to_string(kind) == name) return kind;
    return std::nullopt;
}

namespace {

bool uses_k(IneqKind kind) {
    switch (kind) {
        case IneqKind::thm21:
        case IneqKind::cor22:
        case IneqKind::cor23:
        case IneqKind::cor24:
        case IneqKind::thm28_even:
        case IneqKind::thm28_odd: return true;
        default: return false;
    }
}

bool uses_m(IneqKind kind) {
    switch (kind) {
        case IneqKind::thm25_even:
        case IneqKind::thm25_odd:
        case IneqKind::thm28_even:
        case IneqKind::thm28_odd: return true;
        default: return false;
    }
}

}  // namespace

void validate(const InequalityId& id) {
    if (uses_k(id.kind) && id.k < 1) throw std::out_of_range("k must be >= 1");
    if (uses_m(id.kind) && id.m < 1) throw std::out_of_range("m must be >= 1");
    if (id.kind == IneqKind::thm28_even && id.k < 2 * id.m)
        throw std::out_of_range("thm28_even requires k >= 2m");
    if (id.kind == IneqKind::thm28_odd && id.k < 2 * id.m + 1)
        throw std::out_of_range("thm28_odd requires k >= 2m+1");
}

long zero_prefix_count(const InequalityId& id) {
    switch (id.kind) {
        case IneqKind::thm25_even: return 2 * id.m;
        case IneqKind::thm25_odd: return 2 * id.m + 1;
        case IneqKind::cor26: return 2;
        default: return 1;
    }
}

bool on_integers(const InequalityId& id) {
    switch (id.kind) {
        case IneqKind::thm21:
        case IneqKind::cor22:
        case IneqKind::thm28_even:
        case IneqKind::thm28_odd: return true;
        default: return false;
    }
}

Rational paper_constant(const InequalityId& id) {
    validate(id);
    switch (id.kind) {
        case IneqKind::hardy_11: return rat(1, 4);
        case IneqKind::thm21:
        case IneqKind::cor23: return gamma(id.k, 1);
        case IneqKind::cor22:
        case IneqKind::cor24: return pow_rat(rat(2 * id.k - 1, 2), 2);
        case IneqKind::cor26: return rat(1, 2);
        case IneqKind::thm25_even: return higher_order_const(id.m, OrderVariant::even);
        case IneqKind::thm25_odd: return higher_order_const(id.m, OrderVariant::odd);
        case IneqKind::thm28_even: return product_const(id.m, id.k, OrderVariant::even);
        case IneqKind::thm28_odd: return product_const(id.m, id.k, OrderVariant::odd);
    }
    throw std::invalid_argument("unknown inequality id");
}

namespace {

template <class S>
CheckReport<typename SeqTraits<S>::Real> check_impl(const InequalityId& id, const FinSeq<S>& u) {
    using T = SeqTraits<S>;
    using Real = typename T::Real;
    validate(id);

    CheckReport<Real> rep;
    bool needs_nonneg_support = !on_integers(id);
    if (needs_nonneg_support && !u.supported_on_nonneg()) {
        rep.admissible = false;
        rep.admissibility_error = "sequence must vanish on negative integers";
        return rep;
    }
    long prefix = zero_prefix_count(id);
    if (!u.zero_prefix(prefix)) {
        rep.admissible = false;
        rep.admissibility_error =
            "sequence must vanish at 0.." + std::to_string(prefix - 1);
        return rep;
    }

    Domain dom = on_integers(id) ? Domain::integers : Domain::positive;
    FormParams params;
    params.k = id.k;
    params.m = id.m;
    params.domain = dom;

    auto add_term = [&](std::string label, Rational coeff, Real mom) {
        rep.rhs_total += T::from_rational(coeff) * mom;
        rep.rhs_terms.push_back({std::move(label), std::move(coeff), std::move(mom)});
    };

    switch (id.kind) {
        case IneqKind::hardy_11:
            rep.lhs = weighted_sq_sum(backward_diff(u), WeightKind::unit, 0, dom);
            add_term("1/4 sum |u|^2 n^-2", rat(1, 4), moment(u, -2, dom));
            break;
        case IneqKind::thm21:
        case IneqKind::cor23: {
            rep.lhs = form(u,
                           id.kind == IneqKind::thm21 ? FormId::diff_sq_half_pow
                                                      : FormId::diff_sq_pow,
                           params);
            auto table = constant_table(id.k);
            for (long i = 1; i <= id.k; ++i)
                add_term("gamma_" + std::to_string(i) + " sum |u|^2 n^" +
                             std::to_string(2 * id.k - 2 * i),
                         table->gamma[i], moment(u, 2 * id.k - 2 * i, dom));
            add_term("remainder 2^-2k-4 sum |u|^2 n^-2", pow2(-2 * id.k - 4), moment(u, -2, dom));
            break;
        }
        case IneqKind::cor22:
        case IneqKind::cor24:
            rep.lhs = form(u,
                           id.kind == IneqKind::cor22 ? FormId::diff_sq_half_pow
                                                      : FormId::diff_sq_pow,
                           params);
            add_term("(2k-1)^2/4 sum |u|^2 n^" + std::to_string(2 * id.k - 2), paper_constant(id),
                     moment(u, 2 * id.k - 2, dom));
            break;
        case IneqKind::thm25_even:
            rep.lhs = form(u, FormId::lap_sq, params);
            add_term("2^{2m-3}(2m-1)! sum |u|^2 n^-4m", paper_constant(id),
                     moment(u, -4 * id.m, dom));
            break;
        case IneqKind::thm25_odd:
            rep.lhs = form(u, FormId::d_lap_sq, params);
            add_term("2^{2m-2}(2m)! sum |u|^2 n^-4m-2", paper_constant(id),
                     moment(u, -4 * id.m - 2, dom));
            break;
        case IneqKind::cor26:
            params.m = 1;
            rep.lhs = form(u, FormId::lap_sq, params);
            add_term("1/2 sum |u|^2 n^-4", rat(1, 2), moment(u, -4, dom));
            break;
        case IneqKind::thm28_even:
            rep.lhs = form(u, FormId::lap_sq_pow, params);
            add_term("prod C(k-2i) sum |u|^2 n^" + std::to_string(2 * id.k - 4 * id.m),
                     paper_constant(id), moment(u, 2 * id.k - 4 * id.m, dom));
            break;
        case IneqKind::thm28_odd:
            rep.lhs = form(u, FormId::d_lap_sq_half_pow, params);
            add_term("(2k-1)^2/4 prod C(k-1-2i) sum |u|^2 n^" +
                         std::to_string(2 * id.k - 4 * id.m - 2),
                     paper_constant(id), moment(u, 2 * id.k - 4 * id.m - 2, dom));
            break;
    }
    rep.margin = rep.lhs - rep.rhs_total;
    return rep;
}

}  // namespace

CheckReport<Rational> check(const InequalityId& id, const ExactSeq& u) { return check_impl(id, u); }
CheckReport<double> check(const InequalityId& id, const NumSeq& u) { return check_impl(id, u); }

namespace {

// Admissible random draw: sample on the id's window, then zero the required
// prefix (constant-time admissibility, full coverage of the trial space).
ExactSeq draw_admissible(const InequalityId& id, Rng& rng, long window) {
    long long lo = on_integers(id) ? -window : 0;
    long long hi = on_integers(id) ? window : 2 * window;
    int max_terms = static_cast<int>(std::min<long long>(25, hi - lo + 1));
    ExactSeq u = random_exact_seq(rng, lo, hi, max_terms, 20);
    for (long i = 0; i < zero_prefix_count(id); ++i) u.set(i, GaussianRational());
    return u;
}

}  // namespace

SuiteResult random_suite(const InequalityId& id, long trials, std::uint64_t seed, long window,
                         int threads) {
    validate(id);
    if (trials < 1) throw std::out_of_range("trials must be >= 1");

    SuiteResult res;
    res.id = id;
    res.trials = trials;
    res.seed = seed;
    res.window = window;

    struct Trial {
        double margin = 0.0;
        double margin_rel = 0.0;
        bool numeric_fail = false;
        bool exact_checked = false;
        bool exact_fail = false;
    };
    std::vector<Trial> results(trials);

    parallel_for(trials, threads, [&](long t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        ExactSeq exact = draw_admissible(id, rng, window);
        auto num_report = check(id, to_numeric(exact));
        Trial& out = results[t];
        out.margin = num_report.margin;
        double scale = std::max(1.0, num_report.rhs_total);
        out.margin_rel = num_report.margin / scale;
        out.numeric_fail = num_report.margin < -1e-9 * scale;
        if (t % 50 == 0) {
            out.exact_checked = true;
            auto exact_report = check(id, exact);
            out.exact_fail = exact_report.margin < 0;
        }
    });

    res.min_margin = results.empty() ? 0.0 : results[0].margin;
    res.min_margin_rel = results.empty() ? 0.0 : results[0].margin_rel;
    for (const Trial& t : results) {
        res.min_margin = std::min(res.min_margin, t.margin);
        res.min_margin_rel = std::min(res.min_margin_rel, t.margin_rel);
        res.failures += t.numeric_fail ? 1 : 0;
        res.exact_checks += t.exact_checked ? 1 : 0;
        res.exact_failures += t.exact_fail ? 1 : 0;
    }
    res.pass = res.failures == 0 && res.exact_failures == 0;
    return res;
}

NumSeq sharpness_family(double beta, long N) {
    if (N < 1) throw std::out_of_range("N must be >= 1");
    std::vector<std::complex<double>> vals(static_cast<std::size_t>(2 * N));
    double ramp_slope = -std::pow(static_cast<double>(N), beta - 1.0);
    double ramp_offset = 2.0 * std::pow(static_cast<double>(N), beta);
    for (long n = 1; n <= 2 * N; ++n) {
        double v = n <= N ? std::pow(static_cast<double>(n), beta)
                          : ramp_slope * static_cast<double>(n) + ramp_offset;
        vals[static_cast<std::size_t>(n - 1)] = v;
    }
    return NumSeq(1, std::move(vals));
}

std::vector<double> default_beta_grid(long k, long j_max) {
    double crit = (1.0 - 2.0 * static_cast<double>(k)) / 2.0;
    std::vector<double> grid;
    for (long j = 1; j <= j_max; ++j) {
        double eps = std::ldexp(1.0, static_cast<int>(-j));
        grid.push_back(crit + eps);
        grid.push_back(crit - eps);
    }
    return grid;
}

std::vector<long> default_sweep_N_grid() { return {100, 1000, 10000, 100000, 1000000}; }

std::vector<SweepRow> sharpness_sweep(const InequalityId& id, const std::vector<double>& beta_grid,
                                      const std::vector<long>& N_grid, int threads) {
    if (id.kind != IneqKind::cor22 && id.kind != IneqKind::cor24)
        throw std::invalid_argument("sharpness sweep covers cor22 and cor24 only");
    validate(id);
    double crit = (1.0 - 2.0 * static_cast<double>(id.k)) / 2.0;
    for (double beta : beta_grid)
        if (beta == crit || std::abs(beta - crit) >= 0.5)
            throw std::invalid_argument("beta grid outside the admissible band around (1-2k)/2");

    double target = to_double(paper_constant(id));
    std::vector<SweepRow> rows(beta_grid.size() * N_grid.size());
    parallel_for(static_cast<long>(rows.size()), threads, [&](long cell) {
        std::size_t bi = static_cast<std::size_t>(cell) / N_grid.size();
        std::size_t ni = static_cast<std::size_t>(cell) % N_grid.size();
        SweepRow row;
        row.beta = beta_grid[bi];
        row.N = N_grid[ni];
        NumSeq u = sharpness_family(row.beta, row.N);
        auto rep = check(id, u);
        row.lhs = rep.lhs;
        row.rhs = rep.rhs_terms.front().moment;
        row.quotient = row.lhs / row.rhs;
        row.gap = row.quotient - target;
        rows[static_cast<std::size_t>(cell)] = row;
    });
    return rows;
}

}  // namespace hardyforge
