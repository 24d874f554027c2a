#include "reca/render.hpp"

#include <stdexcept>

namespace reca {

std::vector<std::vector<CAState>> capture_space_time(const RunConfig& config, int pattern_id) {
    config.validate();
    const auto tasks = all_patterns(config.distractor);
    const auto& task = tasks.at(static_cast<std::size_t>(pattern_id));
    const auto map1 = generate_mappings(config.layer1.encoder(mapping_seed(config.run_seed, 1)));

    std::vector<std::vector<CAState>> layers;
    layers.push_back(record_space_time(task.inputs, config.layer1, map1));
    if (config.layer2) {
        std::vector<std::vector<BitVector>> inputs;
        for (const auto& t : tasks)
            inputs.push_back(t.inputs);
        const LayerOutcome l1 = run_layer(inputs, tasks, config.layer1, map1);
        const auto map2 =
            generate_mappings(config.layer2->encoder(mapping_seed(config.run_seed, 2)));
        layers.push_back(record_space_time(l1.predictions[static_cast<std::size_t>(pattern_id)],
                                           *config.layer2, map2));
    }
    return layers;
}

void write_pgm(std::ostream& os, std::span<const CAState> rows) {
    if (rows.empty())
        throw std::invalid_argument("nothing to render");
    const std::size_t width = rows.front().width();
    os << "P5\n" << width << ' ' << rows.size() << "\n255\n";
    std::string line(width, '\0');
    for (const auto& row : rows) {
        if (row.width() != width)
            throw std::invalid_argument("rows of a space-time diagram must share one width");
        for (std::size_t i = 0; i < width; ++i)
            line[i] = static_cast<char>(row.get(i) ? 0 : 255);
        os.write(line.data(), static_cast<std::streamsize>(width));
    }
    if (!os)
        throw std::runtime_error("failed to write PGM image");
}

std::string ascii_art(std::span<const CAState> rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.width(); ++i)
            out.push_back(row.get(i) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

} // namespace reca
