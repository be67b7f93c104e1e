#include "hardyforge/report.hpp"

#include "hardyforge/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace hardyforge {

Json to_json(const PiValue& v) {
    return Json{{"rat", rat_str(v.rat)}, {"pi", rat_str(v.pi)}};
}

PiValue pivalue_from_json(const Json& j) {
    return {rat_parse(j.at("rat").get<std::string>()), rat_parse(j.at("pi").get<std::string>())};
}

Json to_json(const HalfFreqPoly& p) {
    Json out = Json::array();
    for (const auto& [idx, c] : p.coeffs())
        out.push_back(Json::array({idx, rat_str(c.re), rat_str(c.im)}));
    return out;
}

HalfFreqPoly poly_from_json(const Json& j) {
    HalfFreqPoly p;
    for (const auto& term : j)
        p.add_term(term.at(0).get<long long>(),
                   GaussianRational(rat_parse(term.at(1).get<std::string>()),
                                    rat_parse(term.at(2).get<std::string>())));
    return p;
}

Json to_json(const ExactSeq& u) {
    Json values = Json::array();
    for (long long n = u.lo(); n <= u.hi(); ++n) {
        const GaussianRational& z = u.at(n);
        if (z.is_zero()) continue;
        values.push_back(Json::array({n, rat_str(z.re), rat_str(z.im)}));
    }
    return Json{{"lo", u.lo()}, {"hi", u.hi()}, {"values", values}};
}

Json to_json(const NumSeq& u) {
    Json values = Json::array();
    for (long long n = u.lo(); n <= u.hi(); ++n) {
        std::complex<double> z = u.at(n);
        if (z.real() == 0 && z.imag() == 0) continue;
        values.push_back(Json::array({n, z.real(), z.imag()}));
    }
    return Json{{"lo", u.lo()}, {"hi", u.hi()}, {"values", values}};
}

ExactSeq exact_seq_from_json(const Json& j) {
    ExactSeq u;
    for (const auto& entry : j.at("values"))
        u.set(entry.at(0).get<long long>(),
              GaussianRational(rat_parse(entry.at(1).get<std::string>()),
                               rat_parse(entry.at(2).get<std::string>())));
    return u;
}

Json constants_rows(const ConstantTable& table) {
    Json rows = Json::array();
    for (long i = 0; i <= table.k; ++i) {
        Json row;
        row["k"] = table.k;
        row["i"] = i;
        row["xi"] = rat_str(table.xi[i]);
        row["alpha"] = rat_str(table.alpha[i]);
        row["beta"] = rat_str(table.beta[i]);
        if (i >= 1) {
            row["gamma"] = rat_str(table.gamma[i]);
            row["gamma_printed"] = rat_str(table.gamma_printed[i]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string constants_csv(const ConstantTable& table) {
    std::ostringstream os;
    os << "k,i,xi,alpha,beta,gamma,gamma_printed\n";
    for (long i = 0; i <= table.k; ++i) {
        os << table.k << ',' << i << ',' << rat_str(table.xi[i]) << ','
           << rat_str(table.alpha[i]) << ',' << rat_str(table.beta[i]) << ',';
        if (i >= 1)
            os << rat_str(table.gamma[i]) << ',' << rat_str(table.gamma_printed[i]);
        else
            os << ',';
        os << '\n';
    }
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

namespace {

// Shortest round-trip decimal, same algorithm the JSON dump uses.
std::string num_str(double x) { return Json(x).dump(); }

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    if (!c.id.empty()) j["id"] = c.id;
    if (c.command == "lemma") j["lemma"] = c.lemma;
    j["k"] = c.k;
    j["m"] = c.m;
    j["k_max"] = c.k_max;
    j["trials"] = c.trials;
    j["window"] = c.window;
    j["j_max"] = c.j_max;
    j["n_list"] = c.n_list;
    j["tol"] = c.tol;
    j["seed"] = c.seed;
    j["format"] = c.format;
    return j;
}

InequalityId parse_id(const RunConfig& config) {
    if (config.id.empty()) throw ConfigError("--id is required for this command");
    auto kind = ineq_kind_from_string(config.id);
    if (!kind) throw ConfigError("unknown inequality id: " + config.id);
    InequalityId id{*kind, config.k, config.m};
    try {
        validate(id);
    } catch (const std::out_of_range& e) {
        throw ConfigError(e.what());
    }
    return id;
}

struct CommandOutput {
    Json results = Json::array();
    long passed = 0;
    long failed = 0;
    std::string csv;
};

CommandOutput cmd_constants(const RunConfig& config) {
    if (config.k < 1) throw ConfigError("--k must be >= 1");
    CommandOutput out;
    auto table = constant_table(config.k);  // construction verifies the table
    out.results = constants_rows(*table);
    out.passed = config.k + 1;
    out.csv = constants_csv(*table);

    GammaErratum e = gamma_erratum();
    Json flag;
    flag["check"] = "printed_gamma_formula";
    flag["consistent_at_k1"] = e.consistent_at_k1;
    flag["inconsistent_from_k2"] = e.inconsistent;
    flag["printed_2_1"] = rat_str(e.printed);
    flag["canonical_2_1"] = rat_str(e.canonical);
    bool as_documented = e.consistent_at_k1 && e.inconsistent;
    flag["pass"] = as_documented;
    out.results.push_back(std::move(flag));
    (as_documented ? out.passed : out.failed) += 1;
    return out;
}

CommandOutput cmd_identity(const RunConfig& config) {
    if (config.k_max < 1) throw ConfigError("--k-max must be >= 1");
    CommandOutput out;
    std::ostringstream csv;
    csv << "k,pass\n";
    for (long k = 1; k <= config.k_max; ++k) {
        IdentityReport rep = verify_identity_61(k);
        Json row;
        row["check"] = "identity_61";
        row["k"] = k;
        row["pass"] = rep.all_pass;
        if (!rep.all_pass) {
            Json bad = Json::array();
            for (const auto& c : rep.checks)
                if (!c.pass)
                    bad.push_back(Json{{"i", c.i}, {"lhs", rat_str(c.lhs)}, {"rhs", rat_str(c.rhs)}});
            row["counterexamples"] = bad;
        }
        out.results.push_back(std::move(row));
        (rep.all_pass ? out.passed : out.failed) += 1;
        csv << k << ',' << (rep.all_pass ? 1 : 0) << '\n';
    }

    // Companion binomial identities, random big-integer pairs.
    Rng rng(config.seed);
    long failures = 0;
    for (long t = 0; t < config.trials; ++t) {
        long k = rng.next_int(1, 15);
        Integer n(static_cast<long>(rng.next_int(-50, 50)));
        if (!verify_binomial_67_68(k, n)) ++failures;
    }
    Json row;
    row["check"] = "binomial_67_68";
    row["trials"] = config.trials;
    row["failures"] = failures;
    row["pass"] = failures == 0;
    out.results.push_back(std::move(row));
    (failures == 0 ? out.passed : out.failed) += 1;
    out.csv = csv.str();
    return out;
}

CommandOutput cmd_lemma(const RunConfig& config, int threads) {
    CommandOutput out;
    std::ostringstream csv;
    csv << "lemma,k,trials,failures,pass\n";

    auto run_trials = [&](const std::string& name, long k_lo, long k_hi,
                          auto&& one_trial /* (Rng&, long k) -> bool */) {
        long failures = 0;
        std::mutex mu;
        Json failing = Json::array();
        long count = config.trials;
        std::vector<char> ok(static_cast<std::size_t>(count), 1);
        parallel_for(count, threads, [&](long t) {
            Rng rng = Rng::for_trial(config.seed, static_cast<std::uint64_t>(t));
            for (long k = k_lo; k <= k_hi; ++k) {
                if (!one_trial(rng, k)) {
                    ok[static_cast<std::size_t>(t)] = 0;
                    std::lock_guard<std::mutex> lock(mu);
                    if (failing.size() < 5) failing.push_back(Json{{"trial", t}, {"k", k}});
                }
            }
        });
        for (char c : ok)
            if (!c) ++failures;
        Json row;
        row["check"] = "lemma_" + name;
        row["k_max"] = k_hi;
        row["trials"] = config.trials;
        row["failures"] = failures;
        row["pass"] = failures == 0;
        if (!failing.empty()) row["failing"] = failing;
        out.results.push_back(std::move(row));
        (failures == 0 ? out.passed : out.failed) += 1;
        csv << name << ',' << k_hi << ',' << config.trials << ',' << failures << ','
            << (failures == 0 ? 1 : 0) << '\n';
    };

    const std::string which = config.lemma;
    long kcap = std::max<long>(1, config.k);
    if (which == "31" || which == "all")
        run_trials("31", 1, kcap, [](Rng& rng, long k) {
            HalfFreqPoly u = random_integer_lattice_poly(rng);
            return verify_lemma31(u, k).exact_equal;
        });
    if (which == "32" || which == "all")
        run_trials("32", 1, 1, [](Rng& rng, long) {
            HalfFreqPoly u = project_zero_average(random_integer_lattice_poly(rng));
            return verify_lemma32(u).nonnegative;
        });
    if (which == "33" || which == "all")
        run_trials("33", 1, kcap, [](Rng& rng, long k) {
            HalfFreqPoly u = project_zero_average(random_integer_lattice_poly(rng));
            LemmaReport r = verify_lemma33(u, k);
            return r.admissible && r.nonnegative;
        });
    if (which == "35" || which == "all")
        run_trials("35", 2, std::max<long>(2, kcap), [](Rng& rng, long k) {
            HalfFreqPoly u = project_weighted_zero_average(random_integer_lattice_poly(rng), k);
            LemmaReport r = verify_lemma35(u, k);
            return r.admissible && r.nonnegative;
        });
    if (which == "36" || which == "all")
        run_trials("36", 2, std::max<long>(2, kcap), [](Rng& rng, long k) {
            HalfFreqPoly u = project_zero_average(random_integer_lattice_poly(rng));
            LemmaReport r = verify_lemma36(u, k);
            return r.admissible && r.nonnegative;
        });
    if (which == "63_65" || which == "all") {
        long n_bound = std::max<long>(0, config.window);
        long m_bound = std::max<long>(0, config.m);
        long k_bound = kcap;
        long failures = 0, checks = 0;
        for (long n = -n_bound; n <= n_bound; ++n)
            for (long m = 0; m <= m_bound; ++m)
                for (long k = 1; k <= k_bound; ++k) {
                    ++checks;
                    if (!verify_eqs_63_65(n, m, k).all) ++failures;
                }
        Json row;
        row["check"] = "eqs_63_65";
        row["n_range"] = n_bound;
        row["m_max"] = m_bound;
        row["k_max"] = k_bound;
        row["checks"] = checks;
        row["failures"] = failures;
        row["pass"] = failures == 0;
        out.results.push_back(std::move(row));
        (failures == 0 ? out.passed : out.failed) += 1;
        csv << "63_65," << k_bound << ',' << checks << ',' << failures << ','
            << (failures == 0 ? 1 : 0) << '\n';
    }
    if (out.results.empty()) throw ConfigError("unknown lemma selector: " + which);
    out.csv = csv.str();
    return out;
}

CommandOutput cmd_parseval(const RunConfig& config, int threads) {
    if (config.trials < 1) throw ConfigError("--trials must be >= 1");
    CommandOutput out;
    long k_max = std::max<long>(1, config.k);
    long m_max = std::max<long>(0, config.m);

    std::vector<char> ok(static_cast<std::size_t>(config.trials), 1);
    parallel_for(config.trials, threads, [&](long t) {
        Rng rng = Rng::for_trial(config.seed, static_cast<std::uint64_t>(t));
        ExactSeq u = random_exact_seq(rng, -config.window, config.window, 25, 20);
        long k = rng.next_int(1, k_max);
        long j = rng.next_int(0, k);
        long m = rng.next_int(0, m_max);
        if (!parseval_bridge(u, k, j, m).all) ok[static_cast<std::size_t>(t)] = 0;
    });
    long failures = 0;
    for (char c : ok)
        if (!c) ++failures;

    Json row;
    row["check"] = "parseval_bridges";
    row["trials"] = config.trials;
    row["window"] = config.window;
    row["k_max"] = k_max;
    row["m_max"] = m_max;
    row["failures"] = failures;
    row["pass"] = failures == 0;
    out.results.push_back(std::move(row));
    (failures == 0 ? out.passed : out.failed) += 1;
    std::ostringstream csv;
    csv << "trials,window,k_max,m_max,failures,pass\n"
        << config.trials << ',' << config.window << ',' << k_max << ',' << m_max << ','
        << failures << ',' << (failures == 0 ? 1 : 0) << '\n';
    out.csv = csv.str();
    return out;
}

CommandOutput cmd_verify(const RunConfig& config, int threads) {
    InequalityId id = parse_id(config);
    if (config.trials < 1) throw ConfigError("--trials must be >= 1");
    CommandOutput out;
    SuiteResult res = random_suite(id, config.trials, config.seed, config.window, threads);
    Json row;
    row["check"] = "inequality_margins";
    row["id"] = to_string(id.kind);
    row["k"] = id.k;
    row["m"] = id.m;
    row["trials"] = res.trials;
    row["window"] = res.window;
    row["min_margin"] = res.min_margin;
    row["min_margin_rel"] = res.min_margin_rel;
    row["failures"] = res.failures;
    row["exact_checks"] = res.exact_checks;
    row["exact_failures"] = res.exact_failures;
    row["pass"] = res.pass;
    out.results.push_back(std::move(row));
    (res.pass ? out.passed : out.failed) += 1;
    std::ostringstream csv;
    csv << "id,k,m,trials,min_margin,min_margin_rel,failures,exact_checks,exact_failures,pass\n"
        << to_string(id.kind) << ',' << id.k << ',' << id.m << ',' << res.trials << ','
        << num_str(res.min_margin) << ',' << num_str(res.min_margin_rel) << ',' << res.failures
        << ',' << res.exact_checks << ',' << res.exact_failures << ',' << (res.pass ? 1 : 0)
        << '\n';
    out.csv = csv.str();
    return out;
}

CommandOutput cmd_sharpness(const RunConfig& config, int threads) {
    InequalityId id = parse_id(config);
    if (id.kind != IneqKind::cor22 && id.kind != IneqKind::cor24)
        throw ConfigError("sharpness requires --id cor22 or cor24");
    if (config.j_max < 1) throw ConfigError("--j-max must be >= 1");

    std::vector<double> betas = default_beta_grid(id.k, config.j_max);
    std::vector<long> Ns = config.n_list.empty() ? default_sweep_N_grid() : config.n_list;
    for (long N : Ns)
        if (N < 1) throw ConfigError("sweep N values must be >= 1");

    CommandOutput out;
    std::vector<SweepRow> rows;
    try {
        rows = sharpness_sweep(id, betas, Ns, threads);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    double target = to_double(paper_constant(id));
    bool floor_ok = true, monotone_ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].quotient < target - 1e-9) floor_ok = false;
        if (i % Ns.size() != 0 && rows[i].quotient > rows[i - 1].quotient + 1e-12)
            monotone_ok = false;
    }

    std::ostringstream csv;
    csv << "beta,N,lhs,rhs,quotient,gap\n";
    for (const SweepRow& r : rows) {
        Json row;
        row["beta"] = r.beta;
        row["N"] = r.N;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
        row["quotient"] = r.quotient;
        row["gap"] = r.gap;
        out.results.push_back(std::move(row));
        csv << num_str(r.beta) << ',' << r.N << ',' << num_str(r.lhs) << ',' << num_str(r.rhs)
            << ',' << num_str(r.quotient) << ',' << num_str(r.gap) << '\n';
    }
    Json checks;
    checks["check"] = "sharpness_bounds";
    checks["target"] = target;
    checks["quotients_above_target"] = floor_ok;
    checks["monotone_in_N"] = monotone_ok;
    checks["min_quotient"] = [&] {
        double q = rows.front().quotient;
        for (const auto& r : rows) q = std::min(q, r.quotient);
        return q;
    }();
    checks["pass"] = floor_ok && monotone_ok;
    bool pass = floor_ok && monotone_ok;
    out.results.push_back(std::move(checks));
    (pass ? out.passed : out.failed) += 1;
    out.passed += static_cast<long>(rows.size());
    out.csv = csv.str();
    return out;
}

CommandOutput cmd_spectrum(const RunConfig& config, int threads) {
    InequalityId id = parse_id(config);
    if (config.tol <= 0) throw ConfigError("--tol must be positive");
    std::vector<long> Ns = config.n_list.empty() ? std::vector<long>{100, 1000, 10000, 100000}
                                                 : config.n_list;
    long z = zero_prefix_count(id);
    for (long N : Ns)
        if (N < z) throw ConfigError("window N below the id's zero-condition count");

    CommandOutput out;
    std::vector<SpectralRow> rows = sweep(id, Ns, config.tol, threads);
    double floor = to_double(paper_constant(id));

    std::ostringstream csv;
    csv << "N,lambda_min,paper_constant,gap\n";
    bool floor_ok = true, monotone_ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SpectralRow& r = rows[i];
        if (r.lambda_min < floor) floor_ok = false;
        if (i > 0 && rows[i].lambda_min > rows[i - 1].lambda_min + config.tol) monotone_ok = false;
        Json row;
        row["N"] = r.N;
        row["lambda_min"] = r.lambda_min;
        row["paper_constant"] = floor;
        row["gap"] = r.lambda_min - floor;
        out.results.push_back(std::move(row));
        csv << r.N << ',' << num_str(r.lambda_min) << ',' << num_str(floor) << ','
            << num_str(r.lambda_min - floor) << '\n';
    }
    Json checks;
    checks["check"] = "spectral_floor_and_monotonicity";
    checks["id"] = to_string(id.kind);
    checks["paper_constant"] = floor;
    checks["floor_ok"] = floor_ok;
    checks["monotone_ok"] = monotone_ok;
    checks["pass"] = floor_ok && monotone_ok;
    bool pass = floor_ok && monotone_ok;
    out.results.push_back(std::move(checks));
    (pass ? out.passed : out.failed) += 1;
    out.passed += static_cast<long>(rows.size());
    out.csv = csv.str();
    return out;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
    auto start = std::chrono::steady_clock::now();
    int threads = resolve_threads(config.threads);
    if (config.format != "json" && config.format != "csv")
        throw ConfigError("format must be json or csv");

    CommandOutput cmd;
    if (config.command == "constants")
        cmd = cmd_constants(config);
    else if (config.command == "identity")
        cmd = cmd_identity(config);
    else if (config.command == "lemma")
        cmd = cmd_lemma(config, threads);
    else if (config.command == "parseval")
        cmd = cmd_parseval(config, threads);
    else if (config.command == "verify")
        cmd = cmd_verify(config, threads);
    else if (config.command == "sharpness")
        cmd = cmd_sharpness(config, threads);
    else if (config.command == "spectrum")
        cmd = cmd_spectrum(config, threads);
    else
        throw ConfigError("unknown command: " + config.command);

    auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    RunOutcome outcome;
    outcome.report["config"] = config_json(config);
    outcome.report["results"] = std::move(cmd.results);
    outcome.report["summary"] =
        Json{{"passed", cmd.passed}, {"failed", cmd.failed}, {"wall_ms", wall_ms}};
    outcome.rendered = config.format == "csv" ? cmd.csv : outcome.report.dump(2) + "\n";
    outcome.exit_code = cmd.failed > 0 ? 1 : 0;
    if (!config.out_path.empty()) write_atomic(config.out_path, outcome.rendered);
    return outcome;
}

}  // namespace hardyforge
