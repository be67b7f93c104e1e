// hardyforge CLI: exact constant tables, identity and lemma verification,
// Parseval bridge checks, randomized inequality suites, sharpness sweeps and
// spectral lower-bound estimation. Exit codes: 0 all checks passed, 1 some
// check failed, 2 invalid configuration.

#include "hardyforge/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using hardyforge::RunConfig;
    RunConfig config;

    CLI::App app{"Verification and estimation toolkit for one-dimensional discrete Hardy "
                 "and Rellich inequalities"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", config.seed, "RNG seed (default 20240601)");
        cmd->add_option("--threads", config.threads,
                        "worker threads (0: HARDY_FORGE_THREADS env, then hardware)");
        cmd->add_option("--format", config.format, "report format: json | csv");
        cmd->add_option("--out", config.out_path, "write the report to this path (atomic)");
    };

    auto* constants = app.add_subcommand("constants", "emit the exact constant table for one k");
    auto* constants_k = constants->add_option("--k", config.k, "table order k (default 5)");
    add_common(constants);

    auto* identity = app.add_subcommand(
        "identity", "verify the closed-form identity for xi and the companion binomial sums");
    identity->add_option("--k-max", config.k_max, "verify for all k up to this bound");
    auto* identity_trials =
        identity->add_option("--trials", config.trials, "random binomial-identity pairs");
    add_common(identity);

    auto* lemma = app.add_subcommand("lemma", "exact lemma and support-identity verification");
    lemma->add_option("--which", config.lemma, "31 | 32 | 33 | 35 | 36 | 63_65 | all");
    auto* lemma_k = lemma->add_option("--k", config.k, "max derivative order (default 5)");
    auto* lemma_m = lemma->add_option("--m", config.m, "max m for the support identities");
    auto* lemma_window =
        lemma->add_option("--window", config.window, "frequency range for the support identities");
    auto* lemma_trials = lemma->add_option("--trials", config.trials, "random polynomials");
    add_common(lemma);

    auto* parseval = app.add_subcommand("parseval", "exact Parseval bridge checks");
    auto* parseval_trials = parseval->add_option("--trials", config.trials, "random sequences");
    parseval->add_option("--window", config.window, "support bound (default 20)");
    auto* parseval_k = parseval->add_option("--k", config.k, "max derivative order (default 5)");
    auto* parseval_m = parseval->add_option("--m", config.m, "max Laplacian power (default 2)");
    add_common(parseval);

    auto* verify = app.add_subcommand("verify", "randomized margin suite for one inequality");
    verify->add_option("--id", config.id, "inequality id")->required();
    verify->add_option("--k", config.k, "weight order k");
    verify->add_option("--m", config.m, "operator order m");
    verify->add_option("--trials", config.trials, "trial count (default 1000)");
    verify->add_option("--window", config.window, "support window (default 20)");
    add_common(verify);

    auto* sharpness = app.add_subcommand("sharpness", "quotient sweep of the sharpness family");
    sharpness->add_option("--id", config.id, "cor22 or cor24")->required();
    sharpness->add_option("--k", config.k, "weight order k");
    sharpness->add_option("--j-max", config.j_max, "beta offsets 2^-j for j = 1..j_max");
    sharpness->add_option("--N", config.n_list, "window sizes (default 10^2..10^6)")
        ->delimiter(',');
    add_common(sharpness);

    auto* spectrum = app.add_subcommand("spectrum", "minimal eigenvalues of truncated pencils");
    spectrum->add_option("--id", config.id, "inequality id")->required();
    spectrum->add_option("--k", config.k, "weight order k");
    spectrum->add_option("--m", config.m, "operator order m");
    spectrum->add_option("--N", config.n_list, "window sizes (default 100,1000,10000,100000)")
        ->delimiter(',');
    spectrum->add_option("--tol", config.tol, "bisection tolerance (default 1e-10)");
    add_common(spectrum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // Per-subcommand defaults where they differ from the struct defaults.
    if (constants->parsed()) {
        config.command = "constants";
        if (constants_k->count() == 0) config.k = 5;
    } else if (identity->parsed()) {
        config.command = "identity";
        if (identity_trials->count() == 0) config.trials = 100;
    } else if (lemma->parsed()) {
        config.command = "lemma";
        if (lemma_k->count() == 0) config.k = 5;
        if (lemma_m->count() == 0) config.m = 6;
        if (lemma_window->count() == 0) config.window = 10;
        if (lemma_trials->count() == 0) config.trials = 200;
    } else if (parseval->parsed()) {
        config.command = "parseval";
        if (parseval_trials->count() == 0) config.trials = 200;
        if (parseval_k->count() == 0) config.k = 5;
        if (parseval_m->count() == 0) config.m = 2;
    } else if (verify->parsed()) {
        config.command = "verify";
    } else if (sharpness->parsed()) {
        config.command = "sharpness";
    } else if (spectrum->parsed()) {
        config.command = "spectrum";
    }

    try {
        hardyforge::RunOutcome outcome = hardyforge::run(config);
        if (config.out_path.empty())
            std::cout << outcome.rendered;
        else
            std::cout << "report written to " << config.out_path << "\n";
        return outcome.exit_code;
    } catch (const hardyforge::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
