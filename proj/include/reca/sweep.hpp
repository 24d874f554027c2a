#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reca/config.hpp"

namespace reca {

/// Success percentages, indexed [rule][combo] in SweepSpec order.
struct SweepTable {
    std::vector<std::vector<double>> layer1;
    std::optional<std::vector<std::vector<double>>> layer2;
};

/// Called after each finished run with (done, total).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Every (rule, combo, run) triple is an independent task on the OpenMP
/// pool. All cells share the run seeds base_seed, base_seed+1, ...
SweepTable run_sweep(const SweepSpec& spec, const ProgressFn& progress = {});

/// Metadata comment lines, then one table per layer:
///
///   # reca sweep
///   # L_d=40,T_d=200,n_runs=100,seed=1,layered=0
///   # timestamp=...            (only with include_timestamp)
///   # layer 1
///   rule,"(2,4)","(2,8)"
///   90,18.5,45.9
///
/// Layered sweeps append a blank line and the "# layer 2" table.
std::string format_csv(const SweepSpec& spec, const SweepTable& table, bool include_timestamp);

} // namespace reca
