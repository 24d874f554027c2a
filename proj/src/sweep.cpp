#include "reca/sweep.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <iomanip>
#include <sstream>

namespace reca {

namespace {

std::string percent(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << v;
    return os.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void write_table(std::ostream& os, const SweepSpec& spec,
                 const std::vector<std::vector<double>>& cells) {
    os << "rule";
    for (const auto& c : spec.combos)
        os << ",\"(" << c.iterations << ',' << c.mappings << ")\"";
    os << '\n';
    for (std::size_t r = 0; r < spec.rules.size(); ++r) {
        os << spec.rules[r];
        for (double v : cells[r])
            os << ',' << percent(v);
        os << '\n';
    }
}

} // namespace

SweepTable run_sweep(const SweepSpec& spec, const ProgressFn& progress) {
    spec.validate();
    const std::size_t n_rules = spec.rules.size();
    const std::size_t n_combos = spec.combos.size();
    const auto n_runs = static_cast<std::size_t>(spec.runs);
    const std::size_t total = n_rules * n_combos * n_runs;

    // Outcome flags keyed by task index, so assembly ignores finishing order.
    std::vector<std::uint8_t> ok1(total, 0), ok2(total, 0);
    std::atomic<std::size_t> done{0};
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t task = 0; task < static_cast<std::ptrdiff_t>(total); ++task) {
        const auto idx = static_cast<std::size_t>(task);
        const std::size_t run = idx % n_runs;
        const std::size_t combo = (idx / n_runs) % n_combos;
        const std::size_t rule = idx / (n_runs * n_combos);
        try {
            RunConfig c = spec.cell_config(spec.rules[rule], spec.combos[combo]);
            c.run_seed = spec.base_seed + run;
            const RunResult res = reca::run(c);
            ok1[idx] = res.layer1.success ? 1 : 0;
            ok2[idx] = res.layer2 && res.layer2->success ? 1 : 0;
        } catch (...) {
#pragma omp critical(reca_sweep_failure)
            if (!failure)
                failure = std::current_exception();
        }
        const std::size_t finished = ++done;
        if (progress) {
#pragma omp critical(reca_sweep_progress)
            progress(finished, total);
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    auto tally = [&](const std::vector<std::uint8_t>& ok) {
        std::vector<std::vector<double>> cells(n_rules, std::vector<double>(n_combos, 0.0));
        for (std::size_t r = 0; r < n_rules; ++r)
            for (std::size_t c = 0; c < n_combos; ++c) {
                std::size_t wins = 0;
                for (std::size_t k = 0; k < n_runs; ++k)
                    wins += ok[(r * n_combos + c) * n_runs + k];
                cells[r][c] = 100.0 * static_cast<double>(wins) / static_cast<double>(n_runs);
            }
        return cells;
    };

    SweepTable table;
    table.layer1 = tally(ok1);
    if (spec.layered)
        table.layer2 = tally(ok2);
    return table;
}

std::string format_csv(const SweepSpec& spec, const SweepTable& table, bool include_timestamp) {
    std::ostringstream os;
    os << "# reca sweep\n";
    os << "# L_d=" << spec.diffuse_length << ",T_d=" << spec.distractor
       << ",n_runs=" << spec.runs << ",seed=" << spec.base_seed
       << ",layered=" << (spec.layered ? 1 : 0) << '\n';
    if (include_timestamp)
        os << "# timestamp=" << utc_timestamp() << '\n';
    os << "# layer 1\n";
    write_table(os, spec, table.layer1);
    if (table.layer2) {
        os << "\n# layer 2\n";
        write_table(os, spec, *table.layer2);
    }
    return os.str();
}

} // namespace reca
