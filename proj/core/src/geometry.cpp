// SPDX-License-Identifier: Apache-2.0

#include "triad/geometry.hpp"

#include <algorithm>
#include <string>

namespace triad {

std::vector<double> Point::to_doubles() const
{
    std::vector<double> out;
    out.reserve(coords.size());
    for (const Rational& c : coords) {
        out.push_back(c.to_double());
    }
    return out;
}

Cell root_cell(const std::vector<std::pair<Rational, Rational>>& domain)
{
    const int n = static_cast<int>(domain.size());
    if (n == 0) {
        throw DomainError("domain must have at least one dimension");
    }
    if (n > kMaxDimension) {
        throw DimensionError("dimension " + std::to_string(n) + " exceeds the engine cap of " +
                             std::to_string(kMaxDimension));
    }
    Cell root;
    root.id = 1;
    root.depth = 0;
    root.corner_a.coords.reserve(domain.size());
    root.corner_b.coords.reserve(domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        const auto& [lo, hi] = domain[j];
        if (!(lo < hi)) {
            throw DomainError("domain dimension " + std::to_string(j) +
                              " is empty or degenerate (" + lo.str() + ", " + hi.str() + ")");
        }
        root.corner_a.coords.push_back(lo);
        root.corner_b.coords.push_back(hi);
    }
    return root;
}

int longest_edge(const Cell& cell)
{
    int best = 0;
    Rational best_width;
    for (int j = 0; j < cell.dimension(); ++j) {
        const Rational width = abs(cell.corner_b[j] - cell.corner_a[j]);
        if (j == 0 || width > best_width) {
            best = j;
            best_width = width;
        }
    }
    return best;
}

SplitPoints split_points(const Cell& cell, int dim)
{
    SplitPoints cuts{cell.corner_a, cell.corner_b};
    cuts.near_b[dim] = affine_third(cell.corner_a[dim], cell.corner_b[dim], 2);
    cuts.near_a[dim] = affine_third(cell.corner_b[dim], cell.corner_a[dim], 2);
    return cuts;
}

namespace {

void canonicalize(Cell& cell)
{
    for (int j = 0; j < cell.dimension(); ++j) {
        if (cell.corner_b[j] < cell.corner_a[j]) {
            std::swap(cell.corner_a[j], cell.corner_b[j]);
        }
    }
}

Cell make_child(const Cell& parent, int id, Point a, Point b)
{
    Cell child;
    child.id = id;
    child.corner_a = std::move(a);
    child.corner_b = std::move(b);
    child.parent = parent.id;
    child.depth = parent.depth + 1;
    return child;
}

} // namespace

TrisectChildren trisect(const Cell& parent, int dim, const SplitPoints& cuts,
                        int first_fresh_id, bool canonical_children)
{
    if (dim < 0 || dim >= parent.dimension() ||
        cuts.near_b[dim] == parent.corner_a[dim]) {
        throw DomainError("trisect cut points do not match the split dimension");
    }
    TrisectChildren out{
        make_child(parent, first_fresh_id, parent.corner_a, cuts.near_a),
        make_child(parent, parent.id, cuts.near_b, cuts.near_a),
        make_child(parent, first_fresh_id + 1, cuts.near_b, parent.corner_b),
    };
    if (canonical_children) {
        canonicalize(out.lower);
        canonicalize(out.middle);
        canonicalize(out.upper);
    }
    return out;
}

std::vector<Cell> orthant_split(const Cell& parent, const Point& interior,
                                int first_fresh_id)
{
    const int n = parent.dimension();
    const Point lo = min_corner(parent);
    const Point hi = max_corner(parent);
    for (int j = 0; j < n; ++j) {
        if (!(lo[j] < interior[j] && interior[j] < hi[j])) {
            throw DomainError("orthant split point must be strictly interior "
                              "(violates dimension " + std::to_string(j) + ")");
        }
    }
    std::vector<Cell> children;
    children.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        Point a, b;
        a.coords.reserve(static_cast<std::size_t>(n));
        b.coords.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const bool high = (mask >> j) & 1u;
            a.coords.push_back(high ? interior[j] : lo[j]);
            b.coords.push_back(high ? hi[j] : interior[j]);
        }
        const int id = mask == 0 ? parent.id : first_fresh_id + static_cast<int>(mask) - 1;
        children.push_back(make_child(parent, id, std::move(a), std::move(b)));
    }
    return children;
}

Point center(const Cell& cell)
{
    Point c;
    c.coords.reserve(cell.corner_a.coords.size());
    for (int j = 0; j < cell.dimension(); ++j) {
        c.coords.push_back(midpoint(cell.corner_a[j], cell.corner_b[j]));
    }
    return c;
}

std::vector<Point> corners(const Cell& cell)
{
    const int n = cell.dimension();
    if (n > kMaxAuditDimension) {
        throw DimensionError("corner enumeration capped at N <= " +
                             std::to_string(kMaxAuditDimension));
    }
    const Point lo = min_corner(cell);
    const Point hi = max_corner(cell);
    std::vector<Point> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        Point p;
        p.coords.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            p.coords.push_back(((mask >> j) & 1u) ? hi[j] : lo[j]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

bool is_corner(const Point& p, const Cell& cell)
{
    if (p.dimension() != cell.dimension()) {
        return false;
    }
    for (int j = 0; j < cell.dimension(); ++j) {
        if (p[j] != cell.corner_a[j] && p[j] != cell.corner_b[j]) {
            return false;
        }
    }
    return true;
}

Point min_corner(const Cell& cell)
{
    Point p = cell.corner_a;
    for (int j = 0; j < cell.dimension(); ++j) {
        p[j] = std::min(cell.corner_a[j], cell.corner_b[j]);
    }
    return p;
}

Point max_corner(const Cell& cell)
{
    Point p = cell.corner_a;
    for (int j = 0; j < cell.dimension(); ++j) {
        p[j] = std::max(cell.corner_a[j], cell.corner_b[j]);
    }
    return p;
}

Rational volume(const Cell& cell)
{
    Rational v(1);
    for (int j = 0; j < cell.dimension(); ++j) {
        v *= abs(cell.corner_b[j] - cell.corner_a[j]);
    }
    return v;
}

Rational squared_diameter(const Cell& cell)
{
    Rational s(0);
    for (int j = 0; j < cell.dimension(); ++j) {
        const Rational w = cell.corner_b[j] - cell.corner_a[j];
        s += w * w;
    }
    return s;
}

bool interiors_overlap(const Cell& a, const Cell& b)
{
    if (a.dimension() != b.dimension()) {
        return false;
    }
    for (int j = 0; j < a.dimension(); ++j) {
        const Rational lo = std::max(std::min(a.corner_a[j], a.corner_b[j]),
                                     std::min(b.corner_a[j], b.corner_b[j]));
        const Rational hi = std::min(std::max(a.corner_a[j], a.corner_b[j]),
                                     std::max(b.corner_a[j], b.corner_b[j]));
        if (!(lo < hi)) {
            return false;
        }
    }
    return true;
}

} // namespace triad
