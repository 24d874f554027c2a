#pragma once

// One CA reservoir driven over an input sequence with the overwrite
// recurrence: the last iteration of step t-1 receives input t at the mapped
// cells, is evolved I times, and the I evolved states form the feature
// vector of step t.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "reca/ca.hpp"
#include "reca/encoder.hpp"

namespace reca {

struct ReservoirParams {
    Rule rule{90};
    int iterations = 4;      // I
    int mapping_count = 4;   // R
    int diffuse_length = 40; // L_d
    int input_width = 4;     // L_in

    /// Throws std::invalid_argument on I<1, R<1, L_in<1 or L_d<L_in.
    void validate() const;

    [[nodiscard]] std::size_t state_width() const noexcept {
        return static_cast<std::size_t>(mapping_count) * diffuse_length;
    }
    [[nodiscard]] std::size_t feature_length() const noexcept {
        return static_cast<std::size_t>(iterations) * state_width();
    }

    [[nodiscard]] EncoderConfig encoder(std::uint64_t seed) const {
        return {input_width, diffuse_length, mapping_count, seed};
    }
};

struct FeatureVector {
    BitVector bits;        // I*R*L_d, iteration-major
    std::size_t time_index = 0;
};

/// Receives the I evolved states of time step t (0-based).
using FeatureSink = std::function<void(std::size_t t, std::span<const CAState> iterations)>;

/// Streams one feature block per time step into `sink`; returns the final
/// CA state (last iteration of the last step).
CAState run_sequence(std::span<const BitVector> inputs, const ReservoirParams& params,
                     const MappingSet& mappings, const FeatureSink& sink);

struct SequenceFeatures {
    std::vector<FeatureVector> features;
    CAState final_state;
};

SequenceFeatures run_sequence(std::span<const BitVector> inputs, const ReservoirParams& params,
                              const MappingSet& mappings);

/// T*I rows; row t*I + k is the (k+1)-th evolved state of step t.
std::vector<CAState> record_space_time(std::span<const BitVector> inputs,
                                       const ReservoirParams& params,
                                       const MappingSet& mappings);

} // namespace reca
