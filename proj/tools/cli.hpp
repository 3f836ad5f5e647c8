// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace triad::cli {

/// Execute a run described by a JSON config file and write trace.jsonl,
/// stats.json and vertices.jsonl into out_dir. The TRIAD_SEED environment
/// variable, when set, overrides the config seed. Returns the process exit
/// code; diagnostics go to `diag`.
int cmd_run(const std::string& config_path, const std::string& out_dir,
            std::ostream& diag);

/// Render a 2-D trace file as an SVG.
int cmd_render(const std::string& trace_path, const std::string& out_svg,
               std::ostream& diag);

/// Run a strategies x dimensions x budgets matrix and write one CSV row per
/// run. Failed runs are kept as rows marked "failed".
int cmd_compare(const std::string& matrix_path, const std::string& out_csv,
                std::ostream& diag);

/// Reproduce the built-in ten-split one-point demonstration on the unit
/// square: 21 cells from 7 evaluations (4 cut points come from the database
/// for free). Writes trace.jsonl, stats.json, fig2.svg and summary.txt;
/// exits non-zero if the counts ever drift.
int cmd_fig2(const std::string& out_dir, std::ostream& diag);

/// The frozen selection sequence behind cmd_fig2.
const std::vector<int>& fig2_sequence();

} // namespace triad::cli
