// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "triad/vertexdb.hpp"

namespace triad {

/// The four partition strategies.
///
///   S1Center:      trisect the longest edge, evaluate the centers of the
///                  outer children; the middle child keeps the parent's
///                  center. Information is private to each cell.
///   S2Hyperplane:  evaluate the cell center and cut 2^N orthants through
///                  it; the center is shared by all 2^N children.
///   S3OnePoint:    trisect and evaluate only the cut point anchored at the
///                  cell's evaluated corner; at most one evaluation per
///                  split, zero on a database hit.
///   Diagonal:      same geometry as S3OnePoint, but both cut points are
///                  (eventually) evaluated, so every cell carries two
///                  evaluated opposite corners.
enum class Strategy { S1Center, S2Hyperplane, S3OnePoint, Diagonal };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);
const std::array<Strategy, 4>& all_strategies();

/// True for the strategies that produce three children per split.
inline bool is_trisection(Strategy s) { return s != Strategy::S2Hyperplane; }

struct Candidate {
    Point point;
    int vertex = 0;
    bool was_hit = false;
};

struct ChildRef {
    int cell = 0;
    std::optional<int> designated;
};

/// Result of one partition step.
struct SplitOutcome {
    int parent = 0;
    std::optional<int> split_dim;
    std::vector<Candidate> candidates;
    std::vector<ChildRef> children;
    int evals = 0;
    int hits = 0;
};

/// Result of the strategy-specific root initialization.
struct InitOutcome {
    std::vector<Candidate> candidates;
    int evals = 0;
    int hits = 0;
};

/// The evolving partition: cells, their genealogy and the vertex database.
///
/// Cell ids are dense and permanent. A split substitutes the parent: the
/// middle (trisection) or all-low (orthant) child takes over the parent's
/// id, the remaining children take fresh consecutive ids. Ids therefore
/// run 1..max_id() and every id currently addresses exactly one live cell;
/// the substituted parent records are kept, flagged not alive, in history().
class PartitionState {
public:
    explicit PartitionState(std::vector<std::pair<Rational, Rational>> domain);

    int dimension() const noexcept { return static_cast<int>(domain_.size()); }
    int max_id() const noexcept { return next_id_ - 1; }
    long long alive_count() const noexcept { return max_id(); }

    /// Current holder of the id. Throws LookupError for ids out of range.
    const Cell& cell(int id) const;
    bool has_cell(int id) const noexcept { return id >= 1 && id < next_id_; }

    /// Append-only genealogy, including substituted (not alive) parents.
    const std::vector<Cell>& history() const noexcept { return records_; }

    VertexDb& db() noexcept { return db_; }
    const VertexDb& db() const noexcept { return db_; }

    const std::vector<std::pair<Rational, Rational>>& domain() const noexcept
    {
        return domain_;
    }
    Rational root_volume() const;

    /// Replace `id` by its three trisection children; returns the child ids
    /// as {lower, middle, upper} (middle == id).
    std::array<int, 3> apply_trisection(int id, int dim, const SplitPoints& cuts,
                                        bool canonical_children = false);

    /// Replace `id` by its 2^N orthant children around `interior`; returns
    /// the child ids in orthant-mask order (all-low == id).
    std::vector<int> apply_orthants(int id, const Point& interior);

    void set_designated(int id, int vertex_id);
    void set_second(int id, int vertex_id);

private:
    Cell& mutable_cell(int id);

    std::vector<std::pair<Rational, Rational>> domain_;
    std::vector<Cell> records_;    // genealogy
    std::vector<std::size_t> current_; // id-1 -> index into records_
    int next_id_ = 1;
    VertexDb db_;
};

/// Evaluate the strategy's root information (corner a; both corners; the
/// center; nothing) and set the root's designated vertices.
InitOutcome init_root(PartitionState& state, Strategy strategy, const Evaluator& ev,
                      int iteration);

SplitOutcome split_one_point(PartitionState& state, int cell_id, const Evaluator& ev,
                             int iteration);
SplitOutcome split_diagonal(PartitionState& state, int cell_id, const Evaluator& ev,
                            int iteration);
SplitOutcome split_center(PartitionState& state, int cell_id, const Evaluator& ev,
                          int iteration);
SplitOutcome split_hyperplane(PartitionState& state, int cell_id, const Evaluator& ev,
                              int iteration);

/// Dispatch on strategy.
SplitOutcome apply_split(PartitionState& state, Strategy strategy, int cell_id,
                         const Evaluator& ev, int iteration);

/// Number of the cell's 2^N corners that are evaluated database points.
/// Capped at kMaxAuditDimension.
int known_corner_count(const PartitionState& state, const Cell& cell);

/// Number of the outcome's children holding two evaluated corners. For a
/// hyperplane split this equals the parent's pre-split known corner count:
/// zero for the root split, one or two afterwards.
int redundancy_audit(const PartitionState& state, const SplitOutcome& outcome);

} // namespace triad
