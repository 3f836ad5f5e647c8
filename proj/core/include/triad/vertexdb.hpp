// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "triad/geometry.hpp"

namespace triad {

/// A trial point together with its vector function value.
/// Ids are assigned in evaluation order, starting at 1, and never change.
struct VertexRecord {
    int id = 0;
    Point point;
    std::vector<double> values;
    int eval_iteration = 0;
};

/// The (deterministic) vector function being described: r components,
/// invoked on the float image of an exact point.
struct Evaluator {
    int arity = 1;
    std::function<std::vector<double>(const std::vector<double>&)> fn;
};

struct DbStats {
    long long size = 0;
    long long hits = 0;
    long long evaluations = 0;
};

struct EnsureResult {
    int id = 0;
    bool was_hit = false;
};

/// Store of evaluated trial points, keyed by the exact coordinate tuple.
/// Because coordinates are normalized rationals, two points built along
/// different arithmetic paths collide here iff they are the same real point,
/// which is what makes evaluate-once/read-many work: the function is
/// evaluated at every trial point exactly once, later requests are hits.
///
/// Mutation happens only on the engine's sequential loop (single writer);
/// completed databases can be read from anywhere.
class VertexDb {
public:
    /// Id of an exactly-equal stored point, if any.
    std::optional<int> lookup(const Point& p) const;

    /// Return the existing record's id, or evaluate, store and return a
    /// fresh id. The evaluator runs only on a miss. Throws EvalError when
    /// the evaluator output is non-finite or has the wrong arity.
    EnsureResult ensure(const Point& p, const Evaluator& ev, int iteration);

    /// Stored value vector; immutable. Throws LookupError for unknown ids.
    const std::vector<double>& value(int id) const;

    const VertexRecord& record(int id) const;
    const std::vector<VertexRecord>& records() const noexcept { return records_; }

    DbStats stats() const noexcept
    {
        const auto n = static_cast<long long>(records_.size());
        return {n, hits_, n};
    }

    /// One record per line: id, exact coordinates, float values, iteration.
    void dump(std::ostream& out) const;

private:
    std::vector<VertexRecord> records_;
    std::unordered_map<Point, int, PointHash> index_;
    long long hits_ = 0;
};

} // namespace triad
