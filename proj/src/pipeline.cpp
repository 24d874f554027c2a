#include "reca/pipeline.hpp"

#include <chrono>
#include <exception>
#include <stdexcept>
#include <string>

#include "reca/rng.hpp"

namespace reca {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::vector<BitVector>> task_inputs(const std::vector<TaskSequence>& tasks) {
    std::vector<std::vector<BitVector>> out;
    out.reserve(tasks.size());
    for (const auto& t : tasks)
        out.push_back(t.inputs);
    return out;
}

ReservoirParams layer_params(const ReservoirParams& params, int layer) {
    params.validate();
    const int expected = layer == 1 ? kTaskInputWidth : kTaskOutputWidth;
    if (params.input_width != expected)
        throw std::invalid_argument("layer " + std::to_string(layer) + " input width must be " +
                                    std::to_string(expected));
    return params;
}

} // namespace

void RunConfig::validate() const {
    layer_params(layer1, 1);
    if (layer2)
        layer_params(*layer2, 2);
    if (distractor < 1)
        throw std::invalid_argument("distractor period must be at least 1");
}

std::uint64_t mapping_seed(std::uint64_t run_seed, int layer) noexcept {
    return mix_seed(mix_seed(run_seed) + static_cast<std::uint64_t>(layer));
}

LayerOutcome run_layer(const std::vector<std::vector<BitVector>>& inputs,
                       const std::vector<TaskSequence>& tasks, const ReservoirParams& params,
                       const MappingSet& mappings) {
    if (inputs.size() != tasks.size() || tasks.empty())
        throw std::invalid_argument("need one input sequence per task");
    const std::size_t steps = tasks.front().length();
    for (std::size_t s = 0; s < tasks.size(); ++s)
        if (inputs[s].size() != steps || tasks[s].length() != steps)
            throw std::invalid_argument("all sequences must share one length");

    LayerOutcome out;
    const std::size_t width = params.state_width();
    const std::size_t n_rows = tasks.size() * steps;

    auto start = Clock::now();
    TrainingBatch batch{BitMatrix(n_rows, params.feature_length()),
                        BitMatrix(n_rows, kTaskOutputWidth)};
    const auto n_seq = static_cast<std::ptrdiff_t>(tasks.size());
    std::exception_ptr failure;
    // Sequences write disjoint design rows.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < n_seq; ++s) {
        try {
            const std::size_t base = static_cast<std::size_t>(s) * steps;
            run_sequence(inputs[static_cast<std::size_t>(s)], params, mappings,
                         [&](std::size_t t, std::span<const CAState> iters) {
                             const std::size_t row = base + t;
                             for (std::size_t k = 0; k < iters.size(); ++k)
                                 for_each_set_bit(iters[k].words(), [&](std::size_t i) {
                                     batch.features.set(row, k * width + i, true);
                                 });
                         });
        } catch (...) {
#pragma omp critical(reca_layer_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    for (std::size_t s = 0; s < tasks.size(); ++s)
        for (std::size_t t = 0; t < steps; ++t)
            for (int k = 0; k < kTaskOutputWidth; ++k)
                batch.targets.set(s * steps + t, static_cast<std::size_t>(k),
                                  tasks[s].targets[t][static_cast<std::size_t>(k)] != 0);
    out.timing.reservoir_seconds = seconds_since(start);

    start = Clock::now();
    const ReadoutModel model = fit(batch);
    out.timing.fit_seconds = seconds_since(start);

    start = Clock::now();
    const Eigen::MatrixXd raw = model.predict(batch.features);
    out.predictions.assign(tasks.size(), std::vector<BitVector>(steps, BitVector(kTaskOutputWidth)));
    for (std::size_t s = 0; s < tasks.size(); ++s)
        for (std::size_t t = 0; t < steps; ++t)
            for (int k = 0; k < kTaskOutputWidth; ++k)
                out.predictions[s][t][static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(
                    binarize(raw(static_cast<Eigen::Index>(s * steps + t), k)));
    out.eval = evaluate(out.predictions, tasks);
    out.timing.predict_seconds = seconds_since(start);
    return out;
}

RunResult run_single(const RunConfig& config) {
    if (config.layer2)
        throw std::invalid_argument("run_single expects a config without a second layer");
    config.validate();
    const auto tasks = all_patterns(config.distractor);
    const auto mappings = generate_mappings(config.layer1.encoder(mapping_seed(config.run_seed, 1)));
    const LayerOutcome l1 = run_layer(task_inputs(tasks), tasks, config.layer1, mappings);
    RunResult res;
    res.layer1 = l1.eval;
    res.layer1_timing = l1.timing;
    return res;
}

RunResult run_layered(const RunConfig& config) {
    if (!config.layer2)
        throw std::invalid_argument("run_layered expects a second layer");
    config.validate();
    const auto tasks = all_patterns(config.distractor);
    const auto map1 = generate_mappings(config.layer1.encoder(mapping_seed(config.run_seed, 1)));
    const auto map2 = generate_mappings(config.layer2->encoder(mapping_seed(config.run_seed, 2)));

    LayerOutcome l1 = run_layer(task_inputs(tasks), tasks, config.layer1, map1);
    const LayerOutcome l2 = run_layer(l1.predictions, tasks, *config.layer2, map2);

    RunResult res;
    res.layer1 = l1.eval;
    res.layer1_timing = l1.timing;
    res.layer2 = l2.eval;
    res.layer2_timing = l2.timing;
    return res;
}

RunResult run(const RunConfig& config) {
    return config.layer2 ? run_layered(config) : run_single(config);
}

BatchResult run_batch(const RunConfig& config, int n_runs) {
    if (n_runs < 1)
        throw std::invalid_argument("run count must be at least 1");
    config.validate();
    std::vector<RunResult> results(static_cast<std::size_t>(n_runs));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_runs; ++i) {
        try {
            RunConfig c = config;
            c.run_seed = config.run_seed + static_cast<std::uint64_t>(i);
            results[static_cast<std::size_t>(i)] = run(c);
        } catch (...) {
#pragma omp critical(reca_batch_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    BatchResult out;
    out.runs = n_runs;
    if (config.layer2)
        out.layer2_successes = 0;
    for (const auto& r : results) {
        out.layer1_successes += r.layer1.success ? 1 : 0;
        if (r.layer2)
            *out.layer2_successes += r.layer2->success ? 1 : 0;
    }
    return out;
}

} // namespace reca
