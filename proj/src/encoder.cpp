#include "reca/encoder.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "reca/rng.hpp"

namespace reca {

namespace {

void check_input(std::span<const std::uint8_t> input, const MappingSet& mappings) {
    if (input.size() != static_cast<std::size_t>(mappings.input_width()))
        throw std::invalid_argument("input has " + std::to_string(input.size()) +
                                    " bits, mappings expect " +
                                    std::to_string(mappings.input_width()));
    for (auto b : input)
        if (b > 1)
            throw std::invalid_argument("input bits must be 0 or 1");
}

} // namespace

MappingSet::MappingSet(int input_width, int diffuse_length, std::vector<std::vector<int>> maps)
    : input_width_(input_width), diffuse_length_(diffuse_length), maps_(std::move(maps)) {
    if (input_width_ < 1)
        throw std::invalid_argument("input width must be at least 1");
    if (diffuse_length_ < input_width_)
        throw std::invalid_argument("diffuse length must be >= input width");
    if (maps_.empty())
        throw std::invalid_argument("at least one mapping is required");
    for (const auto& m : maps_) {
        if (static_cast<int>(m.size()) != input_width_)
            throw std::invalid_argument("mapping size differs from input width");
        std::vector<bool> seen(static_cast<std::size_t>(diffuse_length_), false);
        for (int p : m) {
            if (p < 0 || p >= diffuse_length_)
                throw std::invalid_argument("mapping position out of range");
            if (seen[p])
                throw std::invalid_argument("mapping positions must be distinct");
            seen[p] = true;
        }
    }
}

MappingSet generate_mappings(const EncoderConfig& config) {
    if (config.input_width < 1 || config.mapping_count < 1)
        throw std::invalid_argument("input width and mapping count must be positive");
    if (config.diffuse_length < config.input_width)
        throw std::invalid_argument("diffuse length (" + std::to_string(config.diffuse_length) +
                                    ") is smaller than input width (" +
                                    std::to_string(config.input_width) + ")");

    Engine engine(config.seed);
    std::vector<std::vector<int>> maps;
    maps.reserve(static_cast<std::size_t>(config.mapping_count));
    std::vector<int> pool(static_cast<std::size_t>(config.diffuse_length));
    for (int r = 0; r < config.mapping_count; ++r) {
        // Partial Fisher-Yates: the j-th draw is where input bit j lands.
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> m(static_cast<std::size_t>(config.input_width));
        for (int j = 0; j < config.input_width; ++j) {
            const auto k = j + static_cast<int>(uniform_below(
                                   engine, static_cast<std::uint64_t>(config.diffuse_length - j)));
            std::swap(pool[j], pool[k]);
            m[j] = pool[j];
        }
        maps.push_back(std::move(m));
    }
    return MappingSet(config.input_width, config.diffuse_length, std::move(maps));
}

void overwrite_in_place(std::span<const std::uint8_t> input, CAState& state,
                        const MappingSet& mappings) {
    check_input(input, mappings);
    if (state.width() != mappings.state_width())
        throw std::invalid_argument("state width " + std::to_string(state.width()) +
                                    " does not match R*L_d = " +
                                    std::to_string(mappings.state_width()));
    for (int r = 0; r < mappings.count(); ++r)
        for (int j = 0; j < mappings.input_width(); ++j)
            state.set(mappings.cell(r, j), input[j] != 0);
}

CAState encode_initial(std::span<const std::uint8_t> input, const MappingSet& mappings) {
    CAState state(mappings.state_width());
    overwrite_in_place(input, state, mappings);
    return state;
}

CAState combine_overwrite(std::span<const std::uint8_t> input, const CAState& previous,
                          const MappingSet& mappings) {
    CAState state(previous);
    overwrite_in_place(input, state, mappings);
    return state;
}

} // namespace reca
