#include "reca/config.hpp"

#include <fstream>
#include <set>

namespace reca {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const char* what) {
    if (!obj.is_object())
        throw ConfigError(std::string(what) + " must be a JSON object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key))
            throw ConfigError(std::string("unknown key '") + key + "' in " + what);
}

template <class T>
T get_or(const json& obj, const char* key, T fallback) {
    if (!obj.contains(key))
        return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

ReservoirParams params_from_json(const json& obj, ReservoirParams base) {
    reject_unknown(obj, {"rule", "iterations", "mapping_count", "diffuse_length"}, "layer");
    try {
        base.rule = Rule(get_or(obj, "rule", base.rule.number()));
    } catch (const std::out_of_range& e) {
        throw ConfigError(e.what());
    }
    base.iterations = get_or(obj, "iterations", base.iterations);
    base.mapping_count = get_or(obj, "mapping_count", base.mapping_count);
    base.diffuse_length = get_or(obj, "diffuse_length", base.diffuse_length);
    return base;
}

} // namespace

void SweepSpec::validate() const {
    if (rules.empty())
        throw ConfigError("sweep needs at least one rule");
    if (combos.empty())
        throw ConfigError("sweep needs at least one (I,R) combo");
    if (runs < 1)
        throw ConfigError("sweep needs at least one run per cell");
    for (int r : rules)
        if (r < 0 || r > 255)
            throw ConfigError("rule " + std::to_string(r) + " is out of range");
    try {
        for (const auto& c : combos)
            cell_config(rules.front(), c).validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

RunConfig SweepSpec::cell_config(int rule, Combo combo) const {
    RunConfig c;
    c.layer1 = ReservoirParams{Rule(rule), combo.iterations, combo.mappings, diffuse_length,
                               kTaskInputWidth};
    if (layered)
        c.layer2 = second_layer_from(c.layer1);
    c.distractor = distractor;
    c.run_seed = base_seed;
    return c;
}

SweepSpec default_sweep() {
    SweepSpec s;
    s.rules = {90, 150, 182, 22, 60, 102, 105, 153, 165, 180, 195};
    s.combos = {{2, 4}, {2, 8}, {4, 4}, {4, 8}, {8, 8}};
    return s;
}

ReservoirParams second_layer_from(const ReservoirParams& layer1) {
    ReservoirParams p = layer1;
    p.input_width = kTaskOutputWidth;
    return p;
}

RunDocument default_run_document() {
    RunDocument d;
    d.config.layer1 = ReservoirParams{Rule(90), 4, 4, 40, kTaskInputWidth};
    return d;
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

RunDocument run_document_from_json(const json& doc) {
    reject_unknown(doc, {"layer1", "layer2", "layered", "distractor", "run_seed", "pattern"},
                   "run config");
    RunDocument d = default_run_document();
    if (doc.contains("layer1"))
        d.config.layer1 = params_from_json(doc.at("layer1"), d.config.layer1);
    if (doc.contains("layer2"))
        d.config.layer2 = params_from_json(doc.at("layer2"), second_layer_from(d.config.layer1));
    else if (get_or(doc, "layered", false))
        d.config.layer2 = second_layer_from(d.config.layer1);
    d.config.distractor = get_or(doc, "distractor", d.config.distractor);
    d.config.run_seed = get_or(doc, "run_seed", d.config.run_seed);
    d.pattern = get_or(doc, "pattern", d.pattern);
    if (d.pattern < 0 || d.pattern >= kTaskPatternCount)
        throw ConfigError("pattern must be in [0,31]");
    try {
        d.config.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return d;
}

SweepSpec sweep_spec_from_json(const json& doc) {
    reject_unknown(doc,
                   {"rules", "combos", "diffuse_length", "distractor", "runs", "layered",
                    "base_seed", "out"},
                   "sweep spec");
    SweepSpec s = default_sweep();
    s.rules = get_or(doc, "rules", s.rules);
    if (doc.contains("combos")) {
        s.combos.clear();
        const auto& arr = doc.at("combos");
        if (!arr.is_array())
            throw ConfigError("'combos' must be an array of [I,R] pairs");
        for (const auto& c : arr) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
                !c[1].is_number_integer())
                throw ConfigError("each combo must be an [I,R] pair of integers");
            s.combos.push_back({c[0].get<int>(), c[1].get<int>()});
        }
    }
    s.diffuse_length = get_or(doc, "diffuse_length", s.diffuse_length);
    s.distractor = get_or(doc, "distractor", s.distractor);
    s.runs = get_or(doc, "runs", s.runs);
    s.layered = get_or(doc, "layered", s.layered);
    s.base_seed = get_or(doc, "base_seed", s.base_seed);
    s.out = get_or(doc, "out", s.out);
    s.validate();
    return s;
}

} // namespace reca
