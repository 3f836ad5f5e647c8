// SPDX-License-Identifier: Apache-2.0

#include "triad/strategies.hpp"

#include <string>
#include <utility>

namespace triad {

std::string_view strategy_name(Strategy s)
{
    switch (s) {
    case Strategy::S1Center:
        return "s1-center";
    case Strategy::S2Hyperplane:
        return "s2-hyperplane";
    case Strategy::S3OnePoint:
        return "s3-onepoint";
    case Strategy::Diagonal:
        return "diagonal";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name)
{
    for (const Strategy s : all_strategies()) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

const std::array<Strategy, 4>& all_strategies()
{
    static const std::array<Strategy, 4> order = {
        Strategy::S1Center, Strategy::S2Hyperplane, Strategy::S3OnePoint,
        Strategy::Diagonal};
    return order;
}

PartitionState::PartitionState(std::vector<std::pair<Rational, Rational>> domain)
    : domain_(std::move(domain))
{
    Cell root = root_cell(domain_);
    records_.push_back(std::move(root));
    current_.push_back(0);
    next_id_ = 2;
}

const Cell& PartitionState::cell(int id) const
{
    if (!has_cell(id)) {
        throw LookupError("unknown cell id " + std::to_string(id));
    }
    return records_[current_[static_cast<std::size_t>(id) - 1]];
}

Cell& PartitionState::mutable_cell(int id)
{
    if (!has_cell(id)) {
        throw LookupError("unknown cell id " + std::to_string(id));
    }
    return records_[current_[static_cast<std::size_t>(id) - 1]];
}

Rational PartitionState::root_volume() const
{
    Rational v(1);
    for (const auto& [lo, hi] : domain_) {
        v *= hi - lo;
    }
    return v;
}

std::array<int, 3> PartitionState::apply_trisection(int id, int dim,
                                                    const SplitPoints& cuts,
                                                    bool canonical_children)
{
    Cell& parent = mutable_cell(id);
    TrisectChildren kids = trisect(parent, dim, cuts, next_id_, canonical_children);
    parent.alive = false;

    const auto add = [this](Cell&& c) {
        const int cid = c.id;
        const std::size_t slot = static_cast<std::size_t>(cid) - 1;
        records_.push_back(std::move(c));
        if (slot < current_.size()) {
            current_[slot] = records_.size() - 1;
        } else {
            current_.push_back(records_.size() - 1);
        }
        return cid;
    };

    const int lower = add(std::move(kids.lower));
    const int middle = add(std::move(kids.middle));
    const int upper = add(std::move(kids.upper));
    next_id_ += 2;
    return {lower, middle, upper};
}

std::vector<int> PartitionState::apply_orthants(int id, const Point& interior)
{
    Cell& parent = mutable_cell(id);
    std::vector<Cell> kids = orthant_split(parent, interior, next_id_);
    parent.alive = false;

    std::vector<int> ids;
    ids.reserve(kids.size());
    const int fresh = static_cast<int>(kids.size()) - 1;
    for (Cell& c : kids) {
        const int cid = c.id;
        const std::size_t slot = static_cast<std::size_t>(cid) - 1;
        records_.push_back(std::move(c));
        if (slot < current_.size()) {
            current_[slot] = records_.size() - 1;
        } else {
            current_.push_back(records_.size() - 1);
        }
        ids.push_back(cid);
    }
    next_id_ += fresh;
    return ids;
}

void PartitionState::set_designated(int id, int vertex_id)
{
    mutable_cell(id).designated_vertex = vertex_id;
}

void PartitionState::set_second(int id, int vertex_id)
{
    mutable_cell(id).second_vertex = vertex_id;
}

InitOutcome init_root(PartitionState& state, Strategy strategy, const Evaluator& ev,
                      int iteration)
{
    InitOutcome out;
    const auto take = [&](const Point& p) {
        const EnsureResult r = state.db().ensure(p, ev, iteration);
        out.candidates.push_back(Candidate{p, r.id, r.was_hit});
        r.was_hit ? ++out.hits : ++out.evals;
        return r.id;
    };

    const Cell& root = state.cell(1);
    switch (strategy) {
    case Strategy::S3OnePoint:
        state.set_designated(1, take(root.corner_a));
        break;
    case Strategy::Diagonal: {
        const Point a = root.corner_a;
        const Point b = root.corner_b;
        state.set_designated(1, take(a));
        state.set_second(1, take(b));
        break;
    }
    case Strategy::S1Center:
        state.set_designated(1, take(center(root)));
        break;
    case Strategy::S2Hyperplane:
        break; // no information until the first split
    }
    return out;
}

namespace {

int require_designated(const Cell& cell)
{
    if (!cell.designated_vertex) {
        throw Error("cell " + std::to_string(cell.id) +
                    " has no designated vertex; was the root initialized?");
    }
    return *cell.designated_vertex;
}

} // namespace

SplitOutcome split_one_point(PartitionState& state, int cell_id, const Evaluator& ev,
                             int iteration)
{
    const Cell parent = state.cell(cell_id);
    const int inherited = require_designated(parent);
    const int dim = longest_edge(parent);
    const SplitPoints cuts = split_points(parent, dim);

    SplitOutcome out;
    out.parent = cell_id;
    out.split_dim = dim;

    const EnsureResult trial = state.db().ensure(cuts.near_b, ev, iteration);
    out.candidates.push_back(Candidate{cuts.near_b, trial.id, trial.was_hit});
    trial.was_hit ? ++out.hits : ++out.evals;

    const auto [lower, middle, upper] = state.apply_trisection(cell_id, dim, cuts);
    state.set_designated(lower, inherited); // the lower child keeps corner_a
    state.set_designated(middle, trial.id);
    state.set_designated(upper, trial.id);

    out.children = {ChildRef{lower, inherited}, ChildRef{middle, trial.id},
                    ChildRef{upper, trial.id}};
    return out;
}

SplitOutcome split_diagonal(PartitionState& state, int cell_id, const Evaluator& ev,
                            int iteration)
{
    const Cell parent = state.cell(cell_id);
    const int corner_a_vertex = require_designated(parent);
    if (!parent.second_vertex) {
        throw Error("diagonal split requires both corner records (cell " +
                    std::to_string(cell_id) + ")");
    }
    const int corner_b_vertex = *parent.second_vertex;
    const int dim = longest_edge(parent);
    const SplitPoints cuts = split_points(parent, dim);

    SplitOutcome out;
    out.parent = cell_id;
    out.split_dim = dim;

    const auto take = [&](const Point& p) {
        const EnsureResult r = state.db().ensure(p, ev, iteration);
        out.candidates.push_back(Candidate{p, r.id, r.was_hit});
        r.was_hit ? ++out.hits : ++out.evals;
        return r.id;
    };
    const int near_b_vertex = take(cuts.near_b);
    const int near_a_vertex = take(cuts.near_a);

    const auto [lower, middle, upper] = state.apply_trisection(cell_id, dim, cuts);
    state.set_designated(lower, corner_a_vertex);
    state.set_second(lower, near_a_vertex);
    state.set_designated(middle, near_b_vertex);
    state.set_second(middle, near_a_vertex);
    state.set_designated(upper, near_b_vertex);
    state.set_second(upper, corner_b_vertex);

    out.children = {ChildRef{lower, corner_a_vertex}, ChildRef{middle, near_b_vertex},
                    ChildRef{upper, near_b_vertex}};
    return out;
}

SplitOutcome split_center(PartitionState& state, int cell_id, const Evaluator& ev,
                          int iteration)
{
    const Cell parent = state.cell(cell_id);
    const int parent_center = require_designated(parent);
    const int dim = longest_edge(parent);
    const SplitPoints cuts = split_points(parent, dim);

    SplitOutcome out;
    out.parent = cell_id;
    out.split_dim = dim;

    const auto [lower, middle, upper] =
        state.apply_trisection(cell_id, dim, cuts, /*canonical_children=*/true);

    // The middle third's center coincides with the parent's center, so only
    // the outer children cost an evaluation. Center points are interior and
    // never shared; hits cannot occur.
    const auto take = [&](int child_id) {
        const Point p = center(state.cell(child_id));
        const EnsureResult r = state.db().ensure(p, ev, iteration);
        out.candidates.push_back(Candidate{p, r.id, r.was_hit});
        r.was_hit ? ++out.hits : ++out.evals;
        state.set_designated(child_id, r.id);
        return r.id;
    };
    const int lower_center = take(lower);
    state.set_designated(middle, parent_center);
    const int upper_center = take(upper);

    out.children = {ChildRef{lower, lower_center}, ChildRef{middle, parent_center},
                    ChildRef{upper, upper_center}};
    return out;
}

SplitOutcome split_hyperplane(PartitionState& state, int cell_id, const Evaluator& ev,
                              int iteration)
{
    const Cell parent = state.cell(cell_id);
    const Point p = center(parent);

    SplitOutcome out;
    out.parent = cell_id;

    const EnsureResult r = state.db().ensure(p, ev, iteration);
    out.candidates.push_back(Candidate{p, r.id, r.was_hit});
    r.was_hit ? ++out.hits : ++out.evals;

    const std::vector<int> kids = state.apply_orthants(cell_id, p);
    out.children.reserve(kids.size());
    for (const int child : kids) {
        state.set_designated(child, r.id);
        out.children.push_back(ChildRef{child, r.id});
    }
    return out;
}

SplitOutcome apply_split(PartitionState& state, Strategy strategy, int cell_id,
                         const Evaluator& ev, int iteration)
{
    switch (strategy) {
    case Strategy::S1Center:
        return split_center(state, cell_id, ev, iteration);
    case Strategy::S2Hyperplane:
        return split_hyperplane(state, cell_id, ev, iteration);
    case Strategy::S3OnePoint:
        return split_one_point(state, cell_id, ev, iteration);
    case Strategy::Diagonal:
        return split_diagonal(state, cell_id, ev, iteration);
    }
    throw Error("unhandled strategy");
}

int known_corner_count(const PartitionState& state, const Cell& cell)
{
    int count = 0;
    for (const Point& corner : corners(cell)) {
        if (state.db().lookup(corner)) {
            ++count;
        }
    }
    return count;
}

int redundancy_audit(const PartitionState& state, const SplitOutcome& outcome)
{
    int redundant = 0;
    for (const ChildRef& child : outcome.children) {
        if (known_corner_count(state, state.cell(child.cell)) == 2) {
            ++redundant;
        }
    }
    return redundant;
}

} // namespace triad
