// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "test_util.hpp"
#include "triad/geometry.hpp"

using namespace triad;
using test_util::pt;
using test_util::rat;
using test_util::unit_domain;

namespace {

std::vector<std::pair<Rational, Rational>> domain_1d()
{
    return {{Rational(0), Rational(1)}};
}

} // namespace

TEST_SUITE("geometry")
{
    TEST_CASE("root_cell")
    {
        const Cell line = root_cell(domain_1d());
        CHECK(line.id == 1);
        CHECK(line.depth == 0);
        CHECK_FALSE(line.parent.has_value());
        CHECK(line.corner_a == pt({"0"}));
        CHECK(line.corner_b == pt({"1"}));

        const Cell square = root_cell(unit_domain(2));
        CHECK(square.corner_a == pt({"0", "0"}));
        CHECK(square.corner_b == pt({"1", "1"}));

        CHECK_THROWS_AS(root_cell({{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}),
                        DomainError);
        CHECK_THROWS_AS(root_cell({}), DomainError);
        CHECK_THROWS_AS(root_cell(unit_domain(17)), DimensionError);
    }

    TEST_CASE("longest_edge")
    {
        CHECK(longest_edge(root_cell(unit_domain(2))) == 0); // tie -> smallest index
        Cell strip;
        strip.corner_a = pt({"2/3", "0"});
        strip.corner_b = pt({"1/3", "1"});
        CHECK(longest_edge(strip) == 1); // widths 1/3 and 1
        CHECK(longest_edge(root_cell(domain_1d())) == 0);
    }

    TEST_CASE("split_points")
    {
        const Cell line = root_cell(domain_1d());
        const SplitPoints cuts = split_points(line, 0);
        CHECK(cuts.near_b == pt({"2/3"}));
        CHECK(cuts.near_a == pt({"1/3"}));

        Cell reversed;
        reversed.corner_a = pt({"2/3"});
        reversed.corner_b = pt({"1/3"});
        const SplitPoints rcuts = split_points(reversed, 0);
        CHECK(rcuts.near_b == pt({"4/9"}));
        CHECK(rcuts.near_a == pt({"5/9"}));

        const Cell square = root_cell(unit_domain(2));
        const SplitPoints scuts = split_points(square, 0);
        CHECK(scuts.near_b == pt({"2/3", "0"}));
        CHECK(scuts.near_a == pt({"1/3", "1"}));
    }

    TEST_CASE("trisect on a segment")
    {
        const Cell line = root_cell(domain_1d());
        const TrisectChildren kids = trisect(line, 0, split_points(line, 0), 2);

        CHECK(kids.lower.id == 2);
        CHECK(kids.middle.id == 1); // substitution: the parent's id lives on
        CHECK(kids.upper.id == 3);
        CHECK(kids.lower.corner_a == pt({"0"}));
        CHECK(kids.lower.corner_b == pt({"1/3"}));
        CHECK(kids.middle.corner_a == pt({"2/3"}));
        CHECK(kids.middle.corner_b == pt({"1/3"}));
        CHECK(kids.upper.corner_a == pt({"2/3"}));
        CHECK(kids.upper.corner_b == pt({"1"}));
        for (const Cell* c : {&kids.lower, &kids.middle, &kids.upper}) {
            CHECK(c->depth == 1);
            CHECK(c->parent == 1);
            CHECK(volume(*c) == Rational(1, 3));
        }
    }

    TEST_CASE("trisect on the unit square")
    {
        const Cell square = root_cell(unit_domain(2));
        const TrisectChildren kids = trisect(square, 0, split_points(square, 0), 2);
        CHECK(kids.lower.corner_a == pt({"0", "0"}));
        CHECK(kids.lower.corner_b == pt({"1/3", "1"}));
        CHECK(kids.middle.corner_a == pt({"2/3", "0"}));
        CHECK(kids.middle.corner_b == pt({"1/3", "1"}));
        CHECK(kids.upper.corner_a == pt({"2/3", "0"}));
        CHECK(kids.upper.corner_b == pt({"1", "1"}));
        CHECK(volume(kids.lower) + volume(kids.middle) + volume(kids.upper) ==
              volume(square));
    }

    TEST_CASE("trisect can canonicalize children")
    {
        const Cell line = root_cell(domain_1d());
        const TrisectChildren kids =
            trisect(line, 0, split_points(line, 0), 2, /*canonical_children=*/true);
        CHECK(kids.middle.corner_a == pt({"1/3"}));
        CHECK(kids.middle.corner_b == pt({"2/3"}));
    }

    TEST_CASE("trisect validates the split dimension")
    {
        const Cell square = root_cell(unit_domain(2));
        const SplitPoints cuts = split_points(square, 0);
        CHECK_THROWS_AS(trisect(square, 1, cuts, 2), DomainError);
    }

    TEST_CASE("orthant_split")
    {
        const Cell line = root_cell(domain_1d());
        const std::vector<Cell> halves = orthant_split(line, pt({"1/2"}), 2);
        REQUIRE(halves.size() == 2);
        CHECK(halves[0].id == 1); // all-low child inherits
        CHECK(halves[1].id == 2);
        CHECK(halves[0].corner_a == pt({"0"}));
        CHECK(halves[0].corner_b == pt({"1/2"}));
        CHECK(halves[1].corner_a == pt({"1/2"}));
        CHECK(halves[1].corner_b == pt({"1"}));

        const Cell square = root_cell(unit_domain(2));
        const std::vector<Cell> quads = orthant_split(square, pt({"1/2", "1/2"}), 2);
        REQUIRE(quads.size() == 4);
        Rational total(0);
        for (const Cell& q : quads) {
            CHECK(volume(q) == Rational(1, 4));
            CHECK(is_corner(pt({"1/2", "1/2"}), q));
            total += volume(q);
        }
        CHECK(total == Rational(1));

        CHECK_THROWS_AS(orthant_split(square, pt({"0", "1/2"}), 2), DomainError);
    }

    TEST_CASE("center ignores orientation")
    {
        CHECK(center(root_cell(domain_1d())) == pt({"1/2"}));
        Cell strip;
        strip.corner_a = pt({"2/3", "0"});
        strip.corner_b = pt({"1/3", "1"});
        CHECK(center(strip) == pt({"1/2", "1/2"}));
        CHECK(center(root_cell(unit_domain(2))) == pt({"1/2", "1/2"}));
    }

    TEST_CASE("corners")
    {
        const auto corner_set = [](const Cell& c) {
            std::set<std::vector<std::string>> out;
            for (const Point& p : corners(c)) {
                std::vector<std::string> coords;
                for (const Rational& x : p.coords) {
                    coords.push_back(x.str());
                }
                out.insert(coords);
            }
            return out;
        };

        CHECK(corner_set(root_cell(domain_1d())) ==
              std::set<std::vector<std::string>>{{"0/1"}, {"1/1"}});

        Cell middle;
        middle.corner_a = pt({"2/3", "0"});
        middle.corner_b = pt({"1/3", "1"});
        CHECK(corner_set(middle) == std::set<std::vector<std::string>>{
                                        {"1/3", "0/1"},
                                        {"2/3", "0/1"},
                                        {"1/3", "1/1"},
                                        {"2/3", "1/1"}});

        CHECK(corners(root_cell(unit_domain(2))).size() == 4);
        CHECK_THROWS_AS(corners(root_cell(unit_domain(13))), DimensionError);
    }

    TEST_CASE("is_corner handles orientation")
    {
        Cell middle;
        middle.corner_a = pt({"2/3", "0"});
        middle.corner_b = pt({"1/3", "1"});
        CHECK(is_corner(pt({"1/3", "0"}), middle));
        CHECK(is_corner(pt({"2/3", "1"}), middle));
        CHECK_FALSE(is_corner(pt({"1/2", "0"}), middle));
        CHECK_FALSE(is_corner(pt({"1/3"}), middle));
    }

    TEST_CASE("interior overlap")
    {
        Cell left;
        left.corner_a = pt({"0", "0"});
        left.corner_b = pt({"1/3", "1"});
        Cell right;
        right.corner_a = pt({"1/3", "0"});
        right.corner_b = pt({"1", "1"});
        CHECK_FALSE(interiors_overlap(left, right)); // shared face only
        Cell wide;
        wide.corner_a = pt({"1/4", "0"});
        wide.corner_b = pt({"1/2", "1"});
        CHECK(interiors_overlap(left, wide));
    }

    TEST_CASE("random trisection keeps the tiling exact")
    {
        // Split a random live cell along its longest edge, 60 times, and
        // keep checking the invariants the partition scheme promises.
        std::mt19937 rng(7);
        std::vector<Cell> alive = {root_cell(unit_domain(2))};
        int next_id = 2;
        for (int step = 0; step < 60; ++step) {
            const std::size_t pick = rng() % alive.size();
            const Cell parent = alive[pick];
            const int dim = longest_edge(parent);
            const SplitPoints cuts = split_points(parent, dim);
            const TrisectChildren kids = trisect(parent, dim, cuts, next_id);
            next_id += 2;

            // Orientation propagation: the middle child's corners differ in
            // every dimension, like any honest diagonal pair.
            for (int j = 0; j < parent.dimension(); ++j) {
                CHECK(kids.middle.corner_a[j] != kids.middle.corner_b[j]);
            }
            // Containment of the cut points.
            CHECK(is_corner(cuts.near_b, kids.middle));
            CHECK(is_corner(cuts.near_b, kids.upper));
            CHECK_FALSE(is_corner(cuts.near_b, kids.lower));
            CHECK(is_corner(cuts.near_a, kids.lower));
            CHECK(is_corner(cuts.near_a, kids.middle));
            // Equal thirds along the split dimension, untouched elsewhere.
            const Rational parent_width = abs(parent.corner_b[dim] - parent.corner_a[dim]);
            for (const Cell* c : {&kids.lower, &kids.middle, &kids.upper}) {
                CHECK(abs(c->corner_b[dim] - c->corner_a[dim]) * Rational(3) ==
                      parent_width);
                for (int j = 0; j < parent.dimension(); ++j) {
                    if (j != dim) {
                        CHECK(abs(c->corner_b[j] - c->corner_a[j]) ==
                              abs(parent.corner_b[j] - parent.corner_a[j]));
                    }
                }
            }

            alive[pick] = kids.middle;
            alive.push_back(kids.lower);
            alive.push_back(kids.upper);
        }

        Rational total(0);
        for (const Cell& c : alive) {
            total += volume(c);
        }
        CHECK(total == Rational(1));
        for (std::size_t i = 0; i < alive.size(); ++i) {
            for (std::size_t j = i + 1; j < alive.size(); ++j) {
                CHECK_FALSE(interiors_overlap(alive[i], alive[j]));
            }
        }
    }

    TEST_CASE("mixed trisection and orthant splits still tile exactly")
    {
        std::mt19937 rng(13);
        std::vector<Cell> alive = {root_cell(unit_domain(2))};
        int next_id = 2;
        for (int step = 0; step < 40; ++step) {
            const std::size_t pick = rng() % alive.size();
            const Cell parent = alive[pick];
            if (rng() % 2 == 0) {
                const int dim = longest_edge(parent);
                const TrisectChildren kids =
                    trisect(parent, dim, split_points(parent, dim), next_id);
                next_id += 2;
                alive[pick] = kids.middle;
                alive.push_back(kids.lower);
                alive.push_back(kids.upper);
            } else {
                std::vector<Cell> kids = orthant_split(parent, center(parent), next_id);
                next_id += static_cast<int>(kids.size()) - 1;
                alive[pick] = kids[0];
                alive.insert(alive.end(), kids.begin() + 1, kids.end());
            }
        }
        Rational total(0);
        for (const Cell& c : alive) {
            total += volume(c);
        }
        CHECK(total == Rational(1));
        for (std::size_t i = 0; i < alive.size(); ++i) {
            for (std::size_t j = i + 1; j < alive.size(); ++j) {
                CHECK_FALSE(interiors_overlap(alive[i], alive[j]));
            }
        }
    }
}
