// SPDX-License-Identifier: Apache-2.0

#include "triad/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace triad {

RunConfig RunConfig::unit_cube(int n, Strategy strategy, SelectionRule selection,
                               StopRule stop)
{
    RunConfig cfg;
    cfg.n = n;
    cfg.domain.assign(static_cast<std::size_t>(n), {Rational(0), Rational(1)});
    cfg.strategy = strategy;
    cfg.selection = std::move(selection);
    cfg.stop = std::move(stop);
    return cfg;
}

void validate(const RunConfig& config)
{
    if (config.n < 1) {
        throw ConfigError("dimension must be >= 1");
    }
    if (config.n > kMaxDimension) {
        throw ConfigError("dimension " + std::to_string(config.n) +
                          " exceeds the engine cap of " + std::to_string(kMaxDimension));
    }
    if (static_cast<int>(config.domain.size()) != config.n) {
        throw ConfigError("domain has " + std::to_string(config.domain.size()) +
                          " bounds but n = " + std::to_string(config.n));
    }
    const int stops = (config.stop.max_splits ? 1 : 0) +
                      (config.stop.max_evaluations ? 1 : 0) +
                      (config.stop.min_diameter ? 1 : 0);
    if (stops != 1) {
        throw ConfigError("exactly one stop criterion must be set (max_splits, "
                          "max_evaluations or min_diameter); got " +
                          std::to_string(stops));
    }
    if (config.stop.max_splits && *config.stop.max_splits < 0) {
        throw ConfigError("max_splits must be >= 0");
    }
    if (config.stop.max_evaluations && *config.stop.max_evaluations < 1) {
        throw ConfigError("max_evaluations must be >= 1");
    }
    if (config.stop.min_diameter && !(*config.stop.min_diameter > 0.0)) {
        throw ConfigError("min_diameter must be > 0");
    }
    if (config.selection.kind == SelectionKind::LowerBound &&
        !(config.selection.lipschitz > 0.0)) {
        throw ConfigError("the lower-bound rule requires a Lipschitz constant > 0");
    }
    if (config.evaluator.arity < 1) {
        throw ConfigError("evaluator arity must be >= 1");
    }
}

namespace {

// Chebyshev distance from a point inside the box to its farthest corner;
// equals the largest per-dimension reach. Selection scores are heuristic
// floats; point identity stays exact in the database.
double max_corner_distance(const Point& p, const Cell& cell)
{
    double dist = 0.0;
    for (int j = 0; j < cell.dimension(); ++j) {
        const double x = p[j].to_double();
        const double a = cell.corner_a[j].to_double();
        const double b = cell.corner_b[j].to_double();
        dist = std::max(dist, std::max(std::abs(x - a), std::abs(x - b)));
    }
    return dist;
}

int select_largest_diameter(const PartitionState& state)
{
    int best = 1;
    Rational best_sq = squared_diameter(state.cell(1));
    for (int id = 2; id <= state.max_id(); ++id) {
        const Rational sq = squared_diameter(state.cell(id));
        if (sq > best_sq) {
            best = id;
            best_sq = sq;
        }
    }
    return best;
}

int select_lower_bound(const PartitionState& state, double lipschitz)
{
    int best = 0;
    double best_score = std::numeric_limits<double>::infinity();
    for (int id = 1; id <= state.max_id(); ++id) {
        const Cell& cell = state.cell(id);
        if (!cell.designated_vertex) {
            continue;
        }
        const VertexRecord& rec = state.db().record(*cell.designated_vertex);
        const double score =
            rec.values[0] - lipschitz * max_corner_distance(rec.point, cell);
        if (score < best_score) {
            best = id;
            best_score = score;
        }
    }
    return best == 0 ? 1 : best; // nothing designated yet: take the root
}

double max_alive_diameter(const PartitionState& state)
{
    double best = 0.0;
    for (int id = 1; id <= state.max_id(); ++id) {
        best = std::max(best, std::sqrt(squared_diameter(state.cell(id)).to_double()));
    }
    return best;
}

} // namespace

int select_cell(const PartitionState& state, const SelectionRule& rule,
                std::size_t step)
{
    switch (rule.kind) {
    case SelectionKind::LargestDiameter:
        return select_largest_diameter(state);
    case SelectionKind::Fifo:
        return 1; // ids are dense and permanent; the smallest alive id is 1
    case SelectionKind::LowerBound:
        return select_lower_bound(state, rule.lipschitz);
    case SelectionKind::Scripted: {
        if (step >= rule.script.size()) {
            throw ScriptError("scripted selection exhausted after " +
                              std::to_string(rule.script.size()) + " entries");
        }
        const int id = rule.script[step];
        if (!state.has_cell(id)) {
            throw ScriptError("scripted selection names cell " + std::to_string(id) +
                              ", which does not exist at step " + std::to_string(step));
        }
        return id;
    }
    }
    throw Error("unhandled selection kind");
}

namespace {

void check_run_invariants(const RunConfig& cfg, const RunStats& stats)
{
    const long long k = stats.splits;
    const long long expected_cells =
        is_trisection(cfg.strategy) ? 1 + 2 * k : 1 + ((1LL << cfg.n) - 1) * k;
    if (stats.cells != expected_cells) {
        throw Error("cell-count law violated: " + std::to_string(stats.cells) +
                    " cells after " + std::to_string(k) + " splits");
    }
    long long expected_candidates = 0;
    switch (cfg.strategy) {
    case Strategy::S3OnePoint:
        expected_candidates = 1 + k;
        break;
    case Strategy::Diagonal:
        expected_candidates = 2 + 2 * k;
        break;
    case Strategy::S1Center:
        expected_candidates = 1 + 2 * k;
        break;
    case Strategy::S2Hyperplane:
        expected_candidates = k;
        break;
    }
    if (stats.candidates != expected_candidates) {
        throw Error("candidate accounting violated");
    }
    if (stats.evaluations + stats.hits != stats.candidates) {
        throw Error("evaluation accounting violated: evals + hits != candidates");
    }
    if ((cfg.strategy == Strategy::S1Center || cfg.strategy == Strategy::S2Hyperplane) &&
        stats.hits != 0) {
        throw Error("interior trial points can never hit the database");
    }
}

} // namespace

RunResult run(const RunConfig& config, const Evaluator& ev)
{
    validate(config);
    const auto t0 = std::chrono::steady_clock::now();

    RunResult result{{}, {}, PartitionState(config.domain), false, {}};
    PartitionState& state = result.state;
    std::vector<TraceEvent>& trace = result.trace;
    RunStats& stats = result.stats;
    stats.has_audit =
        config.strategy == Strategy::S2Hyperplane && config.n <= kMaxAuditDimension;

    int iteration = 1;
    try {
        const InitOutcome init = init_root(state, config.strategy, ev, iteration);
        TraceEvent ev0;
        ev0.k = iteration;
        ev0.cell = 1;
        ev0.strategy = config.strategy;
        ev0.candidates = init.candidates;
        ev0.children = {1};
        ev0.evals = state.db().stats().evaluations;
        ev0.cells = state.alive_count();
        trace.push_back(std::move(ev0));
        stats.candidates += static_cast<long long>(init.candidates.size());

        std::size_t script_pos = 0;
        for (;;) {
            if (config.stop.max_splits && stats.splits >= *config.stop.max_splits) {
                break;
            }
            if (config.stop.max_evaluations &&
                state.db().stats().evaluations >= *config.stop.max_evaluations) {
                break;
            }
            if (config.stop.min_diameter &&
                max_alive_diameter(state) < *config.stop.min_diameter) {
                break;
            }
            if (config.selection.kind == SelectionKind::Scripted &&
                script_pos >= config.selection.script.size()) {
                break;
            }
            const int target = select_cell(state, config.selection, script_pos);
            ++script_pos;
            ++iteration;

            const SplitOutcome outcome =
                apply_split(state, config.strategy, target, ev, iteration);
            ++stats.splits;
            stats.candidates += static_cast<long long>(outcome.candidates.size());
            if (stats.has_audit) {
                const int redundant = redundancy_audit(state, outcome);
                if (redundant < 0 || redundant > 2) {
                    throw Error("redundancy audit out of range: " +
                                std::to_string(redundant));
                }
                ++stats.redundancy_histogram[static_cast<std::size_t>(redundant)];
            }

            TraceEvent event;
            event.k = iteration;
            event.cell = target;
            event.strategy = config.strategy;
            event.dim = outcome.split_dim;
            event.candidates = outcome.candidates;
            event.children.reserve(outcome.children.size());
            for (const ChildRef& child : outcome.children) {
                event.children.push_back(child.cell);
            }
            event.evals = state.db().stats().evaluations;
            event.cells = state.alive_count();
            trace.push_back(std::move(event));

            const long long expected_cells = is_trisection(config.strategy)
                                                 ? 1 + 2 * stats.splits
                                                 : 1 + ((1LL << config.n) - 1) * stats.splits;
            if (state.alive_count() != expected_cells) {
                throw Error("cell-count law violated at iteration " +
                            std::to_string(iteration));
            }
        }
    } catch (const EvalError& e) {
        result.aborted = true;
        result.error = e.what();
    }

    const DbStats db = state.db().stats();
    stats.evaluations = db.evaluations;
    stats.hits = db.hits;
    stats.cells = state.alive_count();
    stats.db_size = db.size;
    if (!result.aborted) {
        check_run_invariants(config, stats);
    }
    stats.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return result;
}

MinimizeResult minimize(const RunConfig& config, const Evaluator& ev)
{
    RunResult res = run(config, ev);
    const std::vector<VertexRecord>& records = res.state.db().records();
    if (records.empty()) {
        throw Error("no trial points were evaluated; nothing to minimize");
    }
    const VertexRecord* best = &records.front();
    for (const VertexRecord& r : records) {
        if (r.values[0] < best->values[0]) {
            best = &r;
        }
    }
    return MinimizeResult{best->point.to_doubles(), best->values[0], best->id,
                          std::move(res)};
}

} // namespace triad
