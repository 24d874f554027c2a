#pragma once

// Maps binary input vectors onto automaton configurations through R fixed
// random injections, each scattering the input over its own L_d-cell segment.

#include <cstdint>
#include <span>
#include <vector>

#include "reca/ca.hpp"

namespace reca {

using BitVector = std::vector<std::uint8_t>;

struct EncoderConfig {
    int input_width = 4;    // L_in
    int diffuse_length = 40; // L_d
    int mapping_count = 1;   // R
    std::uint64_t seed = 0;
};

class MappingSet {
public:
    /// Validates every map: L_in distinct positions, all below L_d.
    MappingSet(int input_width, int diffuse_length, std::vector<std::vector<int>> maps);

    [[nodiscard]] int input_width() const noexcept { return input_width_; }
    [[nodiscard]] int diffuse_length() const noexcept { return diffuse_length_; }
    [[nodiscard]] int count() const noexcept { return static_cast<int>(maps_.size()); }
    [[nodiscard]] std::size_t state_width() const noexcept {
        return static_cast<std::size_t>(diffuse_length_) * maps_.size();
    }

    /// Position within segment r that receives input bit j.
    [[nodiscard]] int position(int r, int j) const { return maps_[r][j]; }
    [[nodiscard]] const std::vector<int>& map(int r) const { return maps_[r]; }

    /// Absolute cell index in the concatenated automaton.
    [[nodiscard]] std::size_t cell(int r, int j) const noexcept {
        return static_cast<std::size_t>(r) * diffuse_length_ + maps_[r][j];
    }

    friend bool operator==(const MappingSet&, const MappingSet&) = default;

private:
    int input_width_;
    int diffuse_length_;
    std::vector<std::vector<int>> maps_;
};

/// R independent injections drawn from an engine seeded with config.seed.
MappingSet generate_mappings(const EncoderConfig& config);

/// Input scattered onto an all-zero automaton of width R*L_d.
CAState encode_initial(std::span<const std::uint8_t> input, const MappingSet& mappings);

/// Copy of `previous` with every mapped cell forced to its input bit
/// (zeros included).
CAState combine_overwrite(std::span<const std::uint8_t> input, const CAState& previous,
                          const MappingSet& mappings);

/// In-place variant of combine_overwrite.
void overwrite_in_place(std::span<const std::uint8_t> input, CAState& state,
                        const MappingSet& mappings);

} // namespace reca
