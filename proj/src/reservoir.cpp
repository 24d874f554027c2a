#include "reca/reservoir.hpp"

#include <stdexcept>
#include <string>

namespace reca {

void ReservoirParams::validate() const {
    if (iterations < 1)
        throw std::invalid_argument("iterations must be at least 1");
    if (mapping_count < 1)
        throw std::invalid_argument("mapping count must be at least 1");
    if (input_width < 1)
        throw std::invalid_argument("input width must be at least 1");
    if (diffuse_length < input_width)
        throw std::invalid_argument("diffuse length must be >= input width");
    if (state_width() < 3)
        throw std::invalid_argument("automaton width R*L_d must be at least 3");
}

CAState run_sequence(std::span<const BitVector> inputs, const ReservoirParams& params,
                     const MappingSet& mappings, const FeatureSink& sink) {
    params.validate();
    if (mappings.input_width() != params.input_width ||
        mappings.diffuse_length() != params.diffuse_length ||
        mappings.count() != params.mapping_count)
        throw std::invalid_argument("mapping set does not match reservoir parameters");

    std::vector<CAState> iters(static_cast<std::size_t>(params.iterations),
                               CAState(params.state_width()));
    CAState seed(params.state_width());
    for (std::size_t t = 0; t < inputs.size(); ++t) {
        if (t > 0)
            seed = iters.back();
        // At t == 0 the seed is all zeros, so this is encode_initial.
        overwrite_in_place(inputs[t], seed, mappings);
        step_into(seed, params.rule, iters[0]);
        for (std::size_t k = 1; k < iters.size(); ++k)
            step_into(iters[k - 1], params.rule, iters[k]);
        if (sink)
            sink(t, iters);
    }
    return inputs.empty() ? seed : iters.back();
}

SequenceFeatures run_sequence(std::span<const BitVector> inputs, const ReservoirParams& params,
                              const MappingSet& mappings) {
    SequenceFeatures out;
    out.features.reserve(inputs.size());
    const std::size_t width = params.state_width();
    out.final_state = run_sequence(inputs, params, mappings,
                                   [&](std::size_t t, std::span<const CAState> iters) {
                                       FeatureVector fv;
                                       fv.time_index = t;
                                       fv.bits.reserve(iters.size() * width);
                                       for (const auto& s : iters)
                                           for (std::size_t i = 0; i < width; ++i)
                                               fv.bits.push_back(s.get(i) ? 1 : 0);
                                       out.features.push_back(std::move(fv));
                                   });
    return out;
}

std::vector<CAState> record_space_time(std::span<const BitVector> inputs,
                                       const ReservoirParams& params,
                                       const MappingSet& mappings) {
    std::vector<CAState> rows;
    rows.reserve(inputs.size() * static_cast<std::size_t>(params.iterations));
    run_sequence(inputs, params, mappings, [&](std::size_t, std::span<const CAState> iters) {
        rows.insert(rows.end(), iters.begin(), iters.end());
    });
    return rows;
}

} // namespace reca
