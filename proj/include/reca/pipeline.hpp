#pragma once

// Train-and-test runs of the single-layer and the two-layer (deep) CA
// reservoir systems on the 5-bit memory task.
//
// A run generates the 32 task sequences, draws the mappings from the run
// seed, drives every sequence through the reservoir from an all-zero
// automaton, fits one readout on all 32*T (feature, target) pairs, and
// scores the binarized predictions on those same pairs. In the deep system
// the binarized layer-1 outputs become the 3-bit input sequences of a second
// reservoir whose readout is fitted to the same targets.

#include <cstdint>
#include <optional>
#include <vector>

#include "reca/encoder.hpp"
#include "reca/memory_task.hpp"
#include "reca/readout.hpp"
#include "reca/reservoir.hpp"

namespace reca {

struct RunConfig {
    ReservoirParams layer1;
    std::optional<ReservoirParams> layer2; // input_width must be 3
    int distractor = 200;                  // T_d
    std::uint64_t run_seed = 1;

    void validate() const;
};

struct PhaseTiming {
    double reservoir_seconds = 0.0;
    double fit_seconds = 0.0;
    double predict_seconds = 0.0;
};

struct RunResult {
    EvaluationResult layer1;
    std::optional<EvaluationResult> layer2;
    PhaseTiming layer1_timing;
    std::optional<PhaseTiming> layer2_timing;

    /// Success of the last configured layer.
    [[nodiscard]] bool success() const noexcept {
        return layer2 ? layer2->success : layer1.success;
    }
};

/// Seed of the mapping draw for `layer` (1 or 2) of the run seeded with
/// run_seed: mix(mix(run_seed) + layer), mix being splitmix64.
std::uint64_t mapping_seed(std::uint64_t run_seed, int layer) noexcept;

/// Output of one encoder/reservoir/readout stage over a set of sequences.
struct LayerOutcome {
    EvaluationResult eval;
    PhaseTiming timing;
    std::vector<std::vector<BitVector>> predictions; // binarized, per sequence
};

/// Runs one stage: inputs[s] is the input sequence driving tasks[s].
LayerOutcome run_layer(const std::vector<std::vector<BitVector>>& inputs,
                       const std::vector<TaskSequence>& tasks, const ReservoirParams& params,
                       const MappingSet& mappings);

/// Requires config.layer2 to be empty.
RunResult run_single(const RunConfig& config);
/// Requires config.layer2.
RunResult run_layered(const RunConfig& config);
/// Dispatches on config.layer2.
RunResult run(const RunConfig& config);

struct BatchResult {
    int runs = 0;
    int layer1_successes = 0;
    std::optional<int> layer2_successes;

    [[nodiscard]] double layer1_percent() const noexcept {
        return runs == 0 ? 0.0 : 100.0 * layer1_successes / runs;
    }
    [[nodiscard]] std::optional<double> layer2_percent() const noexcept {
        if (!layer2_successes)
            return std::nullopt;
        return runs == 0 ? 0.0 : 100.0 * *layer2_successes / runs;
    }
};

/// n_runs runs with seeds run_seed, run_seed+1, ...; runs are spread over
/// the OpenMP thread pool.
BatchResult run_batch(const RunConfig& config, int n_runs);

} // namespace reca
