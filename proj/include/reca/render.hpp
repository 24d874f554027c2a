#pragma once

// Space-time diagrams: one row per CA iteration, T*I rows of width R*L_d.

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "reca/ca.hpp"
#include "reca/pipeline.hpp"

namespace reca {

/// Space-time grid of every configured layer for one task pattern. Layer 2
/// is driven by the binarized layer-1 outputs of the full trained run.
std::vector<std::vector<CAState>> capture_space_time(const RunConfig& config, int pattern_id);

/// Binary PGM (P5, maxval 255). Live cells are black (0), dead cells white.
void write_pgm(std::ostream& os, std::span<const CAState> rows);

/// '#' for live cells, '.' for dead, one line per row.
std::string ascii_art(std::span<const CAState> rows);

} // namespace reca
