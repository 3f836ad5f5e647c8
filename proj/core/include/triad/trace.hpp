// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "triad/engine.hpp"

namespace triad {

/// Serialized artifacts. A trace file is JSON-lines: the first line echoes
/// the resolved run configuration (the meta line), every following line is
/// one TraceEvent with fields k, cell, strategy, dim, candidates, children,
/// evals, cells. An aborted run ends with one {"aborted": true, ...} marker.
/// Points serialize as arrays of exact "num/den" strings, so parsing a trace
/// reproduces every coordinate bit for bit.

std::string config_json(const RunConfig& config);
std::string event_json(const TraceEvent& event);
std::string stats_json(const RunConfig& config, const RunStats& stats,
                       bool aborted = false, const std::string& error = {});

void write_trace(std::ostream& out, const RunConfig& config,
                 const std::vector<TraceEvent>& events, bool aborted = false,
                 const std::string& error = {});

/// Throws ConfigError with a field-level message on malformed input;
/// unknown strategy or evaluator names list the valid ones.
RunConfig parse_run_config(const std::string& json_text);

struct ParsedTrace {
    RunConfig config;
    std::vector<TraceEvent> events;
    bool aborted = false;
    std::string error;
};

/// Throws FormatError on malformed lines.
ParsedTrace read_trace(std::istream& in);

struct ReplayResult {
    PartitionState state;
    std::vector<Point> eval_points; // in evaluation order
};

/// Re-execute the trace geometrically (no evaluator involved) and collect
/// the evaluated points in order. Child ids, candidate coordinates and cell
/// counts are cross-checked against the log; mismatches throw FormatError.
ReplayResult replay(const ParsedTrace& trace);

} // namespace triad
