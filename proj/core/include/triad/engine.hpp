// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "triad/evaluators.hpp"
#include "triad/strategies.hpp"

namespace triad {

/// Policy choosing the cell to split next. The partition strategies are
/// deliberately independent of this choice; these rules exist to drive the
/// process and keep runs reproducible.
enum class SelectionKind {
    LargestDiameter, // max exact squared diameter, ties toward the smallest id
    Fifo,            // smallest alive id
    LowerBound,      // min f_1(designated) - L * max corner distance (floats)
    Scripted         // fixed id sequence, one per split
};

struct SelectionRule {
    SelectionKind kind = SelectionKind::LargestDiameter;
    double lipschitz = 0.0;  // LowerBound only; must be > 0
    std::vector<int> script; // Scripted only

    static SelectionRule largest_diameter() { return {}; }
    static SelectionRule fifo() { return {SelectionKind::Fifo, 0.0, {}}; }
    static SelectionRule lower_bound(double lipschitz)
    {
        return {SelectionKind::LowerBound, lipschitz, {}};
    }
    static SelectionRule scripted(std::vector<int> ids)
    {
        return {SelectionKind::Scripted, 0.0, std::move(ids)};
    }
};

/// Exactly one member must be set.
struct StopRule {
    std::optional<long long> max_splits;
    std::optional<long long> max_evaluations;
    std::optional<double> min_diameter;
};

struct RunConfig {
    int n = 0;
    std::vector<std::pair<Rational, Rational>> domain;
    Strategy strategy = Strategy::S3OnePoint;
    SelectionRule selection;
    StopRule stop;
    long long seed = 0; // recorded for reproducibility; the built-in rules are deterministic
    EvaluatorSpec evaluator;

    /// Unit-cube shorthand used by tests and the comparison harness.
    static RunConfig unit_cube(int n, Strategy strategy, SelectionRule selection,
                               StopRule stop);
};

/// One line of the run log: iteration k = 1 is the root initialization,
/// every later k is a split.
struct TraceEvent {
    int k = 0;
    int cell = 0;
    Strategy strategy = Strategy::S3OnePoint;
    std::optional<int> dim;
    std::vector<Candidate> candidates;
    std::vector<int> children;
    long long evals = 0; // cumulative evaluations after this iteration
    long long cells = 0; // alive cells after this iteration
};

struct RunStats {
    long long splits = 0;
    long long evaluations = 0;
    long long hits = 0;
    long long candidates = 0;
    long long cells = 0;
    long long db_size = 0;
    bool has_audit = false;
    std::array<long long, 3> redundancy_histogram{0, 0, 0};
    double wall_time_ms = 0.0;
};

struct RunResult {
    std::vector<TraceEvent> trace;
    RunStats stats;
    PartitionState state;
    bool aborted = false;
    std::string error;
};

/// Throws ConfigError when the configuration is structurally invalid
/// (dimension mismatch, not exactly one stop criterion, bad rule params).
void validate(const RunConfig& config);

/// Id of the cell the rule picks; `step` indexes the script for Scripted
/// rules. Throws ScriptError when a scripted id is unknown at its turn.
int select_cell(const PartitionState& state, const SelectionRule& rule,
                std::size_t step);

/// Deterministic loop: root initialization, then select/split/log until the
/// stop criterion (or script exhaustion). An evaluator failure aborts and
/// returns the partial trace with `aborted` set.
RunResult run(const RunConfig& config, const Evaluator& ev);

struct MinimizeResult {
    std::vector<double> point;
    double value;
    int vertex;
    RunResult run;
};

/// run(), then the database record minimizing the first component.
MinimizeResult minimize(const RunConfig& config, const Evaluator& ev);

} // namespace triad
