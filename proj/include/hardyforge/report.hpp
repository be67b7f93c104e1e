// Machine-readable front end: JSON/CSV serialization of every result type,
// the RunConfig for the CLI subcommands, and the run() dispatcher producing
// {"config": ..., "results": [...], "summary": {...}} reports with
// deterministic content for a fixed (config, seed).

#pragma once

#include "hardyforge/combinatorics.hpp"
#include "hardyforge/inequalities.hpp"
#include "hardyforge/lattice.hpp"
#include "hardyforge/spectral.hpp"
#include "hardyforge/trigpoly.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hardyforge {

using Json = nlohmann::ordered_json;

Json to_json(const PiValue& v);                    // {"rat": "p/q", "pi": "r/s"}
PiValue pivalue_from_json(const Json& j);

Json to_json(const HalfFreqPoly& p);               // [[idx, "re", "im"], ...]
HalfFreqPoly poly_from_json(const Json& j);

Json to_json(const ExactSeq& u);                   // {"lo", "hi", "values": [[n, re, im], ...]}
Json to_json(const NumSeq& u);
ExactSeq exact_seq_from_json(const Json& j);

Json constants_rows(const ConstantTable& table);
std::string constants_csv(const ConstantTable& table);

struct RunConfig {
    std::string command;  // constants | identity | lemma | parseval | verify | sharpness | spectrum
    std::string id;       // inequality name for verify / sharpness / spectrum
    std::string lemma = "all";  // 31 | 32 | 33 | 35 | 36 | 63_65 | all
    long k = 1;
    long m = 1;
    long k_max = 100;
    long trials = 1000;
    long window = 20;
    long j_max = 8;
    std::vector<long> n_list;
    double tol = 1e-10;
    std::uint64_t seed = 20240601;  // fixed published default
    int threads = 0;                // 0: HARDY_FORGE_THREADS, then hardware
    std::string format = "json";    // json | csv
    std::string out_path;           // empty: stdout only
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOutcome {
    int exit_code = 0;        // 0 = all checks passed, 1 = failures, (2 = bad config via throw)
    std::string rendered;     // report text in the configured format
    Json report;              // always the JSON form
};

// Executes the configured command. Throws ConfigError for invalid configs
// (the CLI maps that to exit code 2). Writes the rendered report atomically
// to out_path when set.
RunOutcome run(const RunConfig& config);

void write_atomic(const std::string& path, const std::string& content);

}  // namespace hardyforge
