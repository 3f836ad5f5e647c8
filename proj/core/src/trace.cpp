// SPDX-License-Identifier: Apache-2.0

#include "triad/trace.hpp"

#include <set>
#include <string>

#include <nlohmann/json.hpp>

namespace triad {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const Point& p)
{
    Json arr = Json::array();
    for (const Rational& c : p.coords) {
        arr.push_back(c.str());
    }
    return arr;
}

Json candidates_json(const std::vector<Candidate>& candidates)
{
    Json arr = Json::array();
    for (const Candidate& c : candidates) {
        Json item;
        item["point"] = point_json(c.point);
        item["hit"] = c.was_hit;
        arr.push_back(std::move(item));
    }
    return arr;
}

Json selection_json(const SelectionRule& rule)
{
    Json out;
    switch (rule.kind) {
    case SelectionKind::LargestDiameter:
        out["rule"] = "largest-diameter";
        break;
    case SelectionKind::Fifo:
        out["rule"] = "fifo";
        break;
    case SelectionKind::LowerBound:
        out["rule"] = "lower-bound";
        out["lipschitz"] = rule.lipschitz;
        break;
    case SelectionKind::Scripted:
        out["rule"] = "scripted";
        out["cells"] = rule.script;
        break;
    }
    return out;
}

Json stop_json(const StopRule& stop)
{
    Json out;
    if (stop.max_splits) {
        out["max_splits"] = *stop.max_splits;
    }
    if (stop.max_evaluations) {
        out["max_evaluations"] = *stop.max_evaluations;
    }
    if (stop.min_diameter) {
        out["min_diameter"] = *stop.min_diameter;
    }
    return out;
}

Json evaluator_json(const EvaluatorSpec& spec)
{
    Json out;
    out["name"] = spec.name;
    if (spec.name == "constant") {
        out["value"] = spec.value;
    }
    if (spec.name == "subprocess") {
        out["argv"] = spec.argv;
    }
    out["r"] = spec.arity;
    return out;
}

void require_keys(const Json& obj, const std::set<std::string>& allowed,
                  const std::string& where)
{
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

Rational parse_bound(const Json& value, const std::string& where)
{
    if (value.is_number_integer()) {
        return Rational(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        try {
            return Rational::parse(value.get<std::string>());
        } catch (const Error& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    throw ConfigError(where + " must be an integer or a \"num/den\" string "
                      "(floats are not exactly representable)");
}

std::string known_strategy_names()
{
    std::string names;
    for (const Strategy s : all_strategies()) {
        names += names.empty() ? std::string(strategy_name(s))
                               : ", " + std::string(strategy_name(s));
    }
    return names;
}

SelectionRule parse_selection(const Json& obj)
{
    if (!obj.is_object() || !obj.contains("rule")) {
        throw ConfigError("selection must be an object with a 'rule' key");
    }
    const std::string rule = obj.at("rule").get<std::string>();
    if (rule == "largest-diameter") {
        require_keys(obj, {"rule"}, "selection");
        return SelectionRule::largest_diameter();
    }
    if (rule == "fifo") {
        require_keys(obj, {"rule"}, "selection");
        return SelectionRule::fifo();
    }
    if (rule == "lower-bound") {
        require_keys(obj, {"rule", "lipschitz"}, "selection");
        if (!obj.contains("lipschitz")) {
            throw ConfigError("lower-bound selection requires 'lipschitz'");
        }
        return SelectionRule::lower_bound(obj.at("lipschitz").get<double>());
    }
    if (rule == "scripted") {
        require_keys(obj, {"rule", "cells"}, "selection");
        if (!obj.contains("cells") || !obj.at("cells").is_array()) {
            throw ConfigError("scripted selection requires a 'cells' array");
        }
        return SelectionRule::scripted(obj.at("cells").get<std::vector<int>>());
    }
    throw ConfigError("unknown selection rule '" + rule +
                      "' (valid: largest-diameter, fifo, lower-bound, scripted)");
}

EvaluatorSpec parse_evaluator(const Json& obj)
{
    if (!obj.is_object() || !obj.contains("name")) {
        throw ConfigError("evaluator must be an object with a 'name' key");
    }
    require_keys(obj, {"name", "value", "argv", "r"}, "evaluator");
    EvaluatorSpec spec;
    spec.name = obj.at("name").get<std::string>();
    if (obj.contains("value")) {
        spec.value = obj.at("value").get<double>();
    }
    if (obj.contains("argv")) {
        spec.argv = obj.at("argv").get<std::vector<std::string>>();
    }
    if (obj.contains("r")) {
        spec.arity = obj.at("r").get<int>();
    }
    if (spec.name != "subprocess" && spec.arity != 1) {
        throw ConfigError("evaluator '" + spec.name + "' has exactly one component");
    }
    return spec;
}

} // namespace

std::string config_json(const RunConfig& config)
{
    Json out;
    out["n"] = config.n;
    Json domain = Json::array();
    for (const auto& [lo, hi] : config.domain) {
        domain.push_back(Json::array({lo.str(), hi.str()}));
    }
    out["domain"] = std::move(domain);
    out["strategy"] = std::string(strategy_name(config.strategy));
    out["selection"] = selection_json(config.selection);
    out["stop"] = stop_json(config.stop);
    out["seed"] = config.seed;
    out["evaluator"] = evaluator_json(config.evaluator);
    return out.dump();
}

std::string event_json(const TraceEvent& event)
{
    Json out;
    out["k"] = event.k;
    out["cell"] = event.cell;
    out["strategy"] = std::string(strategy_name(event.strategy));
    if (event.dim) {
        out["dim"] = *event.dim;
    } else {
        out["dim"] = nullptr;
    }
    out["candidates"] = candidates_json(event.candidates);
    out["children"] = event.children;
    out["evals"] = event.evals;
    out["cells"] = event.cells;
    return out.dump();
}

std::string stats_json(const RunConfig& config, const RunStats& stats, bool aborted,
                       const std::string& error)
{
    Json out;
    out["strategy"] = std::string(strategy_name(config.strategy));
    out["n"] = config.n;
    out["seed"] = config.seed;
    out["splits"] = stats.splits;
    out["evaluations"] = stats.evaluations;
    out["hits"] = stats.hits;
    out["candidates"] = stats.candidates;
    out["cells"] = stats.cells;
    out["db_size"] = stats.db_size;
    if (stats.has_audit) {
        out["redundancy_histogram"] = stats.redundancy_histogram;
    }
    out["wall_time_ms"] = stats.wall_time_ms;
    if (aborted) {
        out["aborted"] = true;
        out["error"] = error;
    }
    return out.dump(2) + "\n";
}

void write_trace(std::ostream& out, const RunConfig& config,
                 const std::vector<TraceEvent>& events, bool aborted,
                 const std::string& error)
{
    out << config_json(config) << '\n';
    for (const TraceEvent& event : events) {
        out << event_json(event) << '\n';
    }
    if (aborted) {
        Json marker;
        marker["aborted"] = true;
        marker["error"] = error;
        out << marker.dump() << '\n';
    }
}

RunConfig parse_run_config(const std::string& json_text)
{
    Json root;
    try {
        root = Json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    try {
        require_keys(root,
                     {"n", "domain", "strategy", "selection", "stop", "seed", "evaluator"},
                     "config");
        RunConfig cfg;
        if (!root.contains("domain") || !root.at("domain").is_array()) {
            throw ConfigError("config requires a 'domain' array of [lo, hi] pairs");
        }
        for (const Json& pair : root.at("domain")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ConfigError("each domain entry must be a [lo, hi] pair");
            }
            cfg.domain.emplace_back(parse_bound(pair[0], "domain bound"),
                                    parse_bound(pair[1], "domain bound"));
        }
        cfg.n = root.contains("n") ? root.at("n").get<int>()
                                   : static_cast<int>(cfg.domain.size());

        if (!root.contains("strategy")) {
            throw ConfigError("config requires a 'strategy'");
        }
        const std::string name = root.at("strategy").get<std::string>();
        const auto strategy = strategy_from_name(name);
        if (!strategy) {
            throw ConfigError("unknown strategy '" + name +
                              "' (valid: " + known_strategy_names() + ")");
        }
        cfg.strategy = *strategy;

        cfg.selection = root.contains("selection") ? parse_selection(root.at("selection"))
                                                   : SelectionRule::largest_diameter();

        if (!root.contains("stop") || !root.at("stop").is_object()) {
            throw ConfigError("config requires a 'stop' object");
        }
        const Json& stop = root.at("stop");
        require_keys(stop, {"max_splits", "max_evaluations", "min_diameter"}, "stop");
        if (stop.contains("max_splits")) {
            cfg.stop.max_splits = stop.at("max_splits").get<long long>();
        }
        if (stop.contains("max_evaluations")) {
            cfg.stop.max_evaluations = stop.at("max_evaluations").get<long long>();
        }
        if (stop.contains("min_diameter")) {
            cfg.stop.min_diameter = stop.at("min_diameter").get<double>();
        }

        if (root.contains("seed")) {
            cfg.seed = root.at("seed").get<long long>();
        }
        if (root.contains("evaluator")) {
            cfg.evaluator = parse_evaluator(root.at("evaluator"));
        }
        validate(cfg);
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config field: ") + e.what());
    }
}

namespace {

Point parse_point(const Json& arr)
{
    Point p;
    p.coords.reserve(arr.size());
    for (const Json& c : arr) {
        p.coords.push_back(Rational::parse(c.get<std::string>()));
    }
    return p;
}

TraceEvent parse_event(const Json& obj)
{
    TraceEvent event;
    event.k = obj.at("k").get<int>();
    event.cell = obj.at("cell").get<int>();
    const std::string name = obj.at("strategy").get<std::string>();
    const auto strategy = strategy_from_name(name);
    if (!strategy) {
        throw FormatError("trace event has unknown strategy '" + name + "'");
    }
    event.strategy = *strategy;
    if (obj.contains("dim") && !obj.at("dim").is_null()) {
        event.dim = obj.at("dim").get<int>();
    }
    for (const Json& c : obj.at("candidates")) {
        Candidate cand;
        cand.point = parse_point(c.at("point"));
        cand.was_hit = c.at("hit").get<bool>();
        event.candidates.push_back(std::move(cand));
    }
    event.children = obj.at("children").get<std::vector<int>>();
    event.evals = obj.at("evals").get<long long>();
    event.cells = obj.at("cells").get<long long>();
    return event;
}

} // namespace

ParsedTrace read_trace(std::istream& in)
{
    ParsedTrace out;
    std::string line;
    bool have_meta = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        Json obj;
        try {
            obj = Json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw FormatError("trace line " + std::to_string(line_no) +
                              " is not valid JSON: " + e.what());
        }
        try {
            if (!have_meta) {
                out.config = parse_run_config(line);
                have_meta = true;
                continue;
            }
            if (obj.contains("aborted")) {
                out.aborted = true;
                out.error = obj.value("error", std::string{});
                continue;
            }
            out.events.push_back(parse_event(obj));
        } catch (const ConfigError& e) {
            throw FormatError("trace meta line: " + std::string(e.what()));
        } catch (const nlohmann::json::exception& e) {
            throw FormatError("trace line " + std::to_string(line_no) +
                              " is malformed: " + e.what());
        }
    }
    if (!have_meta) {
        throw FormatError("trace has no meta line");
    }
    return out;
}

ReplayResult replay(const ParsedTrace& trace)
{
    ReplayResult out{PartitionState(trace.config.domain), {}};
    PartitionState& state = out.state;

    const auto collect = [&](const TraceEvent& event) {
        for (const Candidate& c : event.candidates) {
            if (!c.was_hit) {
                out.eval_points.push_back(c.point);
            }
        }
    };
    const auto mismatch = [](const TraceEvent& event, const std::string& what) {
        return FormatError("replay mismatch at k=" + std::to_string(event.k) + ": " + what);
    };

    for (const TraceEvent& event : trace.events) {
        if (event.k == 1) {
            collect(event);
            continue;
        }
        const Cell parent = state.cell(event.cell);
        std::vector<int> children;
        if (is_trisection(event.strategy)) {
            if (!event.dim) {
                throw mismatch(event, "trisection event without a dimension");
            }
            const SplitPoints cuts = split_points(parent, *event.dim);
            if (event.strategy == Strategy::S3OnePoint &&
                !(event.candidates.size() == 1 && event.candidates[0].point == cuts.near_b)) {
                throw mismatch(event, "logged candidate disagrees with the cut point");
            }
            if (event.strategy == Strategy::Diagonal &&
                !(event.candidates.size() == 2 && event.candidates[0].point == cuts.near_b &&
                  event.candidates[1].point == cuts.near_a)) {
                throw mismatch(event, "logged candidates disagree with the cut points");
            }
            const bool canonical = event.strategy == Strategy::S1Center;
            const auto ids = state.apply_trisection(event.cell, *event.dim, cuts, canonical);
            children.assign(ids.begin(), ids.end());
            if (event.strategy == Strategy::S1Center &&
                !(event.candidates.size() == 2 &&
                  event.candidates[0].point == center(state.cell(ids[0])) &&
                  event.candidates[1].point == center(state.cell(ids[2])))) {
                throw mismatch(event, "logged candidates disagree with the child centers");
            }
        } else {
            const Point p = center(parent);
            if (!(event.candidates.size() == 1 && event.candidates[0].point == p)) {
                throw mismatch(event, "logged candidate disagrees with the cell center");
            }
            children = state.apply_orthants(event.cell, p);
        }
        if (children != event.children) {
            throw mismatch(event, "child ids diverge");
        }
        if (state.alive_count() != event.cells) {
            throw mismatch(event, "alive cell count diverges");
        }
        collect(event);
    }
    return out;
}

} // namespace triad
