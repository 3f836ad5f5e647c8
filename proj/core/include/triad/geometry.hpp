// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "triad/rational.hpp"

namespace triad {

/// Largest dimension the engine accepts.
inline constexpr int kMaxDimension = 16;

/// Largest dimension for which 2^N corner enumerations (corner audits,
/// redundancy counts) are allowed.
inline constexpr int kMaxAuditDimension = 12;

/// A point of the search space: one exact coordinate per dimension.
/// Equality is coordinate-wise exact equality.
struct Point {
    std::vector<Rational> coords;

    int dimension() const noexcept { return static_cast<int>(coords.size()); }
    const Rational& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

    std::vector<double> to_doubles() const;

    bool operator==(const Point&) const = default;
};

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept
    {
        std::size_t h = 0x2545f4914f6cdd1dULL;
        for (const Rational& c : p.coords) {
            h ^= std::hash<Rational>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// An axis-aligned box stored as an *ordered* pair of diagonally opposite
/// corners. corner_a and corner_b are not min/max corners: trisection flips
/// the middle child's orientation, and that flip is what keeps every child
/// anchored at an already-evaluated vertex. Use min_corner()/max_corner()
/// when the unordered box is wanted.
struct Cell {
    int id = 0;
    Point corner_a;
    Point corner_b;
    std::optional<int> parent;
    int depth = 0;
    std::optional<int> designated_vertex;
    std::optional<int> second_vertex;
    bool alive = true;

    int dimension() const noexcept { return corner_a.dimension(); }
};

/// The two cut points of a trisection along `dim`. near_b is corner_a moved
/// two thirds of the way toward corner_b (the one-point strategies' trial
/// candidate); near_a is corner_b moved two thirds of the way toward
/// corner_a (used for partitioning only).
struct SplitPoints {
    Point near_b;
    Point near_a;
};

struct TrisectChildren {
    Cell lower;  // keeps the parent's corner_a
    Cell middle; // spans (near_b, near_a); inherits the parent's id
    Cell upper;  // keeps the parent's corner_b
};

/// Root cell over the given closed box, id 1, depth 0.
/// Throws DomainError for an empty or degenerate domain, DimensionError
/// beyond kMaxDimension.
Cell root_cell(const std::vector<std::pair<Rational, Rational>>& domain);

/// Index of the widest edge, |corner_b[i] - corner_a[i]| maximal, ties
/// broken toward the smallest index.
int longest_edge(const Cell& cell);

/// Cut points per the trisection scheme; callers pass dim = longest_edge.
SplitPoints split_points(const Cell& cell, int dim);

/// Three equal children along `dim`. The middle child takes the cut points
/// as its corner pair (reversed orientation relative to the parent) and the
/// parent's id; lower gets first_fresh_id, upper gets first_fresh_id + 1.
/// With canonical_children, every child is re-oriented to (min, max) corner
/// order (the center-sampled strategy's convention).
TrisectChildren trisect(const Cell& parent, int dim, const SplitPoints& cuts,
                        int first_fresh_id, bool canonical_children = false);

/// 2^N children tiling the parent, cut by the axis hyperplanes through
/// `interior`. Children carry canonical (min, max) orientation and are
/// ordered by orthant mask (bit j set = high side of dimension j); the
/// all-low child inherits the parent's id, the rest take consecutive ids
/// from first_fresh_id. Throws DomainError unless `interior` is strictly
/// inside the cell.
std::vector<Cell> orthant_split(const Cell& parent, const Point& interior,
                                int first_fresh_id);

/// Coordinate-wise midpoint; orientation-independent.
Point center(const Cell& cell);

/// All 2^N corner points of the unordered box, in orthant-mask order
/// (bit j set = max side of dimension j). Throws DimensionError beyond
/// kMaxAuditDimension.
std::vector<Point> corners(const Cell& cell);

/// True iff every coordinate of p equals one of the cell's two corner
/// values in that dimension. O(N); no dimension cap.
bool is_corner(const Point& p, const Cell& cell);

Point min_corner(const Cell& cell);
Point max_corner(const Cell& cell);

/// Exact product of edge lengths.
Rational volume(const Cell& cell);

/// Exact sum of squared edge lengths.
Rational squared_diameter(const Cell& cell);

/// True iff the open boxes intersect (exact arithmetic).
bool interiors_overlap(const Cell& a, const Cell& b);

} // namespace triad
