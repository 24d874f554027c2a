#pragma once

// JSON documents accepted by the command-line tool.
//
// Run config:
//   { "layer1":   {"rule": 90, "iterations": 8, "mapping_count": 8, "diffuse_length": 40},
//     "layer2":   {...same fields...},      optional; implies layered
//     "layered":  false,                    layer2 defaults to a copy of layer1
//     "distractor": 200, "run_seed": 1, "pattern": 0 }
//
// Sweep spec:
//   { "rules": [90, 150], "combos": [[2,4], [8,8]], "diffuse_length": 40,
//     "distractor": 200, "runs": 100, "layered": false, "base_seed": 1,
//     "out": "table.csv" }
//
// Unknown keys are rejected.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "reca/pipeline.hpp"

namespace reca {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Combo {
    int iterations = 0;
    int mappings = 0;
    friend bool operator==(const Combo&, const Combo&) = default;
};

struct SweepSpec {
    std::vector<int> rules;
    std::vector<Combo> combos;
    int diffuse_length = 40;
    int distractor = 200;
    int runs = 100;
    bool layered = false;
    std::uint64_t base_seed = 1;
    std::string out; // empty: standard output

    void validate() const;
    /// RunConfig of one table cell.
    [[nodiscard]] RunConfig cell_config(int rule, Combo combo) const;
};

/// Table I/II rules and the desk-scale combos.
SweepSpec default_sweep();

struct RunDocument {
    RunConfig config;
    int pattern = 0; // sequence shown by `render`
};

nlohmann::json load_json_file(const std::filesystem::path& path);

RunDocument run_document_from_json(const nlohmann::json& doc);
SweepSpec sweep_spec_from_json(const nlohmann::json& doc);

/// Default single-layer configuration (rule 90, (4,4), L_d=40, T_d=200).
RunDocument default_run_document();

/// Layer-2 parameters derived from layer 1 (same rule, I, R, L_d; 3 inputs).
ReservoirParams second_layer_from(const ReservoirParams& layer1);

} // namespace reca
