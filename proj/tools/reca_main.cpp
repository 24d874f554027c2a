// reca: command-line front end for the cellular-automaton reservoir.
//
//   reca run       one train-and-test run; exit 0 if every bit is right
//   reca sweep     success-rate tables over rules x (I,R) combos (CSV)
//   reca render    space-time diagrams (PGM + ASCII) of one task pattern
//   reca rule-info lambda, equivalent rules and the transition table

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "reca/config.hpp"
#include "reca/render.hpp"
#include "reca/sweep.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct LayerFlags {
    std::optional<int> rule;
    std::optional<int> iterations;
    std::optional<int> mappings;
    std::optional<int> diffuse;
};

struct RunFlags {
    std::string config;
    LayerFlags layer;
    std::optional<int> distractor;
    std::optional<std::uint64_t> seed;
    std::optional<int> pattern;
    bool layered = false;
    int workers = 0;
};

void add_layer_flags(CLI::App* app, LayerFlags& f) {
    app->add_option("--rule", f.rule, "Elementary CA rule (0-255)");
    app->add_option("--iterations", f.iterations, "CA iterations per time step (I)");
    app->add_option("--mappings", f.mappings, "Random mappings (R)");
    app->add_option("--diffuse", f.diffuse, "Diffuse length (L_d)");
}

void add_run_flags(CLI::App* app, RunFlags& f) {
    app->add_option("--config", f.config, "JSON run config");
    add_layer_flags(app, f.layer);
    app->add_option("--distractor", f.distractor, "Distractor period (T_d)");
    app->add_option("--seed", f.seed, "Run seed");
    app->add_flag("--layered", f.layered, "Add a second reservoir layer");
    app->add_option("--workers", f.workers, "Worker threads (default: all cores)");
}

void set_workers(int workers) {
    if (workers > 0)
        omp_set_num_threads(workers);
}

reca::RunDocument resolve_run(const RunFlags& f) {
    reca::RunDocument doc = reca::default_run_document();
    bool explicit_layer2 = false;
    if (!f.config.empty()) {
        const auto json = reca::load_json_file(f.config);
        doc = reca::run_document_from_json(json);
        explicit_layer2 = json.contains("layer2");
    }
    auto& l1 = doc.config.layer1;
    try {
        if (f.layer.rule)
            l1.rule = reca::Rule(*f.layer.rule);
    } catch (const std::out_of_range& e) {
        throw reca::ConfigError(e.what());
    }
    if (f.layer.iterations)
        l1.iterations = *f.layer.iterations;
    if (f.layer.mappings)
        l1.mapping_count = *f.layer.mappings;
    if (f.layer.diffuse)
        l1.diffuse_length = *f.layer.diffuse;
    if (f.distractor)
        doc.config.distractor = *f.distractor;
    if (f.seed)
        doc.config.run_seed = *f.seed;
    if (f.pattern)
        doc.pattern = *f.pattern;
    if ((f.layered || doc.config.layer2) && !explicit_layer2)
        doc.config.layer2 = reca::second_layer_from(l1);
    if (doc.pattern < 0 || doc.pattern >= reca::kTaskPatternCount)
        throw reca::ConfigError("pattern must be in [0,31]");
    try {
        doc.config.validate();
    } catch (const std::invalid_argument& e) {
        throw reca::ConfigError(e.what());
    }
    return doc;
}

void print_layer(const char* name, const reca::ReservoirParams& p, const reca::EvaluationResult& e,
                 const reca::PhaseTiming& t) {
    std::printf("%s: rule %d (I,R)=(%d,%d) L_d=%d features=%zu\n", name, p.rule.number(),
                p.iterations, p.mapping_count, p.diffuse_length, p.feature_length());
    std::printf("  bits correct %zu/%zu (%.4f%%) success=%s\n", e.correct_bits, e.total_bits,
                100.0 * e.accuracy(), e.success ? "yes" : "no");
    std::printf("  time reservoir=%.3fs fit=%.3fs predict=%.3fs\n", t.reservoir_seconds,
                t.fit_seconds, t.predict_seconds);
}

int cmd_run(const RunFlags& f) {
    set_workers(f.workers);
    const auto doc = resolve_run(f);
    const auto& c = doc.config;
    const reca::RunResult res = reca::run(c);
    std::printf("T_d=%d seed=%llu\n", c.distractor, static_cast<unsigned long long>(c.run_seed));
    print_layer("layer 1", c.layer1, res.layer1, res.layer1_timing);
    if (res.layer2)
        print_layer("layer 2", *c.layer2, *res.layer2, *res.layer2_timing);
    std::printf("result: %s\n", res.success() ? "success" : "failure");
    return res.success() ? 0 : kExitFailure;
}

struct SweepFlags {
    std::string config;
    std::vector<int> rules;
    std::vector<int> iterations;
    std::vector<int> mappings;
    std::optional<int> diffuse;
    std::optional<int> distractor;
    std::optional<int> runs;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    bool layered = false;
    bool no_timestamp = false;
    int workers = 0;
};

int cmd_sweep(const SweepFlags& f) {
    set_workers(f.workers);
    reca::SweepSpec spec =
        f.config.empty() ? reca::default_sweep()
                         : reca::sweep_spec_from_json(reca::load_json_file(f.config));
    if (!f.rules.empty())
        spec.rules = f.rules;
    if (!f.iterations.empty() || !f.mappings.empty()) {
        if (f.iterations.size() != f.mappings.size())
            throw reca::ConfigError("--iterations and --mappings must list the same number of values");
        spec.combos.clear();
        for (std::size_t i = 0; i < f.iterations.size(); ++i)
            spec.combos.push_back({f.iterations[i], f.mappings[i]});
    }
    if (f.diffuse)
        spec.diffuse_length = *f.diffuse;
    if (f.distractor)
        spec.distractor = *f.distractor;
    if (f.runs)
        spec.runs = *f.runs;
    if (f.seed)
        spec.base_seed = *f.seed;
    if (f.out)
        spec.out = *f.out;
    if (f.layered)
        spec.layered = true;
    spec.validate();

    int last_percent = -1;
    const auto table = reca::run_sweep(spec, [&](std::size_t done, std::size_t total) {
        const int pct = static_cast<int>(100 * done / total);
        if (pct != last_percent) {
            last_percent = pct;
            std::fprintf(stderr, "\rsweep: %zu/%zu runs (%d%%)", done, total, pct);
            if (done == total)
                std::fputc('\n', stderr);
        }
    });
    const std::string csv = reca::format_csv(spec, table, !f.no_timestamp);
    if (spec.out.empty()) {
        std::cout << csv;
        return 0;
    }
    std::ofstream os(spec.out, std::ios::binary);
    os << csv;
    if (!os) {
        std::cerr << "reca: cannot write '" << spec.out << "'\n";
        return kExitIo;
    }
    std::cerr << "wrote " << spec.out << '\n';
    return 0;
}

int cmd_render(const RunFlags& f, const std::string& out) {
    set_workers(f.workers);
    const auto doc = resolve_run(f);
    const auto layers = reca::capture_space_time(doc.config, doc.pattern);
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const std::string stem = out + ".layer" + std::to_string(l + 1);
        std::ofstream pgm(stem + ".pgm", std::ios::binary);
        if (!pgm) {
            std::cerr << "reca: cannot write '" << stem << ".pgm'\n";
            return kExitIo;
        }
        reca::write_pgm(pgm, layers[l]);
        std::ofstream txt(stem + ".txt");
        txt << reca::ascii_art(layers[l]);
        if (!txt) {
            std::cerr << "reca: cannot write '" << stem << ".txt'\n";
            return kExitIo;
        }
        std::printf("layer %zu: %zux%zu -> %s.pgm, %s.txt\n", l + 1, layers[l].front().width(),
                    layers[l].size(), stem.c_str(), stem.c_str());
    }
    return 0;
}

int cmd_rule_info(int number) {
    const reca::Rule rule(number);
    const reca::Rule mirror = reca::mirror_rule(rule);
    const reca::Rule complement = reca::complement_rule(rule);
    std::printf("rule %d\n", rule.number());
    std::printf("lambda %g\n", reca::lambda_param(rule));
    std::printf("complement %d\n", complement.number());
    std::printf("mirror %d\n", mirror.number());
    std::printf("mirror+complement %d\n", reca::mirror_rule(complement).number());
    std::printf("transitions\n");
    for (int n = 7; n >= 0; --n)
        std::printf("  %d%d%d -> %d\n", (n >> 2) & 1, (n >> 1) & 1, n & 1,
                    rule.output(static_cast<unsigned>(n)) ? 1 : 0);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reservoir computing with elementary cellular automata"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto* run = app.add_subcommand("run", "Train and test once on the 5-bit memory task");
    add_run_flags(run, run_flags);

    SweepFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "Success-rate tables over rules and (I,R) combos");
    sweep->add_option("--config", sweep_flags.config, "JSON sweep spec");
    sweep->add_option("--rule", sweep_flags.rules, "Rules (repeatable)");
    sweep->add_option("--iterations", sweep_flags.iterations, "I of each combo (paired with --mappings)");
    sweep->add_option("--mappings", sweep_flags.mappings, "R of each combo (paired with --iterations)");
    sweep->add_option("--diffuse", sweep_flags.diffuse, "Diffuse length (L_d)");
    sweep->add_option("--distractor", sweep_flags.distractor, "Distractor period (T_d)");
    sweep->add_option("--runs", sweep_flags.runs, "Runs per cell");
    sweep->add_option("--seed", sweep_flags.seed, "Base run seed");
    sweep->add_option("--out", sweep_flags.out, "CSV output path (default: stdout)");
    sweep->add_flag("--layered", sweep_flags.layered, "Also report the second layer");
    sweep->add_flag("--no-timestamp", sweep_flags.no_timestamp, "Omit the timestamp line");
    sweep->add_option("--workers", sweep_flags.workers, "Worker threads (default: all cores)");

    RunFlags render_flags;
    std::string render_out;
    auto* render = app.add_subcommand("render", "Write space-time diagrams for one task pattern");
    add_run_flags(render, render_flags);
    render->add_option("--pattern", render_flags.pattern, "Task pattern id (0-31)");
    render->add_option("--out", render_out, "Output path prefix")->required();

    int rule_number = 0;
    auto* info = app.add_subcommand("rule-info", "Describe an elementary CA rule");
    info->add_option("rule,--rule", rule_number, "Rule number (0-255)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run)
            return cmd_run(run_flags);
        if (*sweep)
            return cmd_sweep(sweep_flags);
        if (*render)
            return cmd_render(render_flags, render_out);
        if (*info)
            return cmd_rule_info(rule_number);
    } catch (const reca::ConfigError& e) {
        std::cerr << "reca: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "reca: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "reca: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "reca: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
