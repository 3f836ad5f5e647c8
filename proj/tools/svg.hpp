// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "triad/strategies.hpp"

namespace triad {

/// Render a 2-D partition: one rectangle per live cell, one filled dot per
/// evaluated point, labeled by evaluation order (1, 2, 3, ...). The domain
/// is scaled to a 600x600 viewport with a 10-unit margin; the first
/// coordinate runs right, the second runs up. Throws RenderError unless the
/// partition is two-dimensional.
std::string render_partition_svg(const PartitionState& state,
                                 const std::vector<Point>& eval_points);

} // namespace triad
