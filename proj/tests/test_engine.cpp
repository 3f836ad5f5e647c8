// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"

#include "test_util.hpp"
#include "triad/engine.hpp"
#include "triad/trace.hpp"

using namespace triad;
using test_util::unit_domain;

namespace {

RunConfig basic_config(int n, Strategy strategy, long long splits)
{
    RunConfig cfg = RunConfig::unit_cube(n, strategy, SelectionRule::largest_diameter(),
                                         StopRule{splits, {}, {}});
    cfg.evaluator.name = "linear";
    return cfg;
}

std::vector<int> random_script(unsigned seed, int splits, int children_per_split)
{
    std::mt19937 rng(seed);
    std::vector<int> script;
    int max_id = 1;
    for (int i = 0; i < splits; ++i) {
        script.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(max_id)));
        max_id += children_per_split - 1;
    }
    return script;
}

} // namespace

TEST_SUITE("engine")
{
    TEST_CASE("config validation")
    {
        RunConfig cfg = basic_config(2, Strategy::S3OnePoint, 5);
        CHECK_NOTHROW(validate(cfg));

        RunConfig no_stop = cfg;
        no_stop.stop = {};
        CHECK_THROWS_AS(validate(no_stop), ConfigError);

        RunConfig two_stops = cfg;
        two_stops.stop.max_evaluations = 10;
        CHECK_THROWS_AS(validate(two_stops), ConfigError);

        RunConfig mismatched = cfg;
        mismatched.n = 3;
        CHECK_THROWS_AS(validate(mismatched), ConfigError);

        RunConfig bad_lipschitz = cfg;
        bad_lipschitz.selection = SelectionRule::lower_bound(0.0);
        CHECK_THROWS_AS(validate(bad_lipschitz), ConfigError);
    }

    TEST_CASE("selection rules")
    {
        const Evaluator ev = make_linear();
        PartitionState state{unit_domain(2)};
        init_root(state, Strategy::S3OnePoint, ev, 1);

        // A single cell satisfies every rule.
        CHECK(select_cell(state, SelectionRule::largest_diameter(), 0) == 1);
        CHECK(select_cell(state, SelectionRule::fifo(), 0) == 1);
        CHECK(select_cell(state, SelectionRule::lower_bound(3.0), 0) == 1);
        CHECK(select_cell(state, SelectionRule::scripted({1}), 0) == 1);

        // After one split all three children tie on diameter; the smallest
        // id wins. Splitting it leaves the outer strips as the largest.
        apply_split(state, Strategy::S3OnePoint, 1, ev, 2);
        CHECK(select_cell(state, SelectionRule::largest_diameter(), 0) == 1);
        apply_split(state, Strategy::S3OnePoint, 1, ev, 3);
        CHECK(select_cell(state, SelectionRule::largest_diameter(), 0) == 2);

        CHECK(select_cell(state, SelectionRule::fifo(), 0) == 1);

        CHECK_THROWS_AS(select_cell(state, SelectionRule::scripted({99}), 0), ScriptError);
        CHECK_THROWS_AS(select_cell(state, SelectionRule::scripted({1}), 1), ScriptError);
    }

    TEST_CASE("lower-bound rule prefers promising large cells")
    {
        // f = x_1: the left strip anchors at the smaller value, so with any
        // sizable constant it outranks its equal-sized siblings.
        const Evaluator ev = make_linear();
        PartitionState state{unit_domain(2)};
        init_root(state, Strategy::S3OnePoint, ev, 1);
        apply_split(state, Strategy::S3OnePoint, 1, ev, 2);
        CHECK(select_cell(state, SelectionRule::lower_bound(3.0), 0) == 2);

        // Without any designated vertex the rule falls back to the root.
        PartitionState bare{unit_domain(2)};
        init_root(bare, Strategy::S2Hyperplane, ev, 1);
        CHECK(select_cell(bare, SelectionRule::lower_bound(3.0), 0) == 1);
    }

    TEST_CASE("run with zero splits performs only the initialization")
    {
        const RunConfig cfg = basic_config(1, Strategy::S3OnePoint, 0);
        const RunResult res = run(cfg, make_linear());
        CHECK_FALSE(res.aborted);
        CHECK(res.stats.splits == 0);
        CHECK(res.stats.cells == 1);
        CHECK(res.stats.evaluations == 1);
        REQUIRE(res.trace.size() == 1);
        CHECK(res.trace[0].k == 1);
        CHECK(res.trace[0].cell == 1);
        CHECK(res.trace[0].children == std::vector<int>{1});
    }

    TEST_CASE("one split of a segment")
    {
        const RunConfig cfg = basic_config(1, Strategy::S3OnePoint, 1);
        const RunResult res = run(cfg, make_linear());
        CHECK(res.stats.cells == 3);
        CHECK(res.stats.evaluations == 2);
        REQUIRE(res.trace.size() == 2);
        CHECK(res.trace[1].k == 2);
        CHECK(res.trace[1].children == std::vector<int>{2, 1, 3});
        CHECK(res.trace[1].dim == 0);
        CHECK(res.trace[1].cells == 3);
    }

    TEST_CASE("cell-count laws")
    {
        CHECK(run(basic_config(2, Strategy::S3OnePoint, 10), make_linear()).stats.cells ==
              21);
        CHECK(run(basic_config(2, Strategy::S1Center, 7), make_linear()).stats.cells ==
              15);
        CHECK(run(basic_config(3, Strategy::S2Hyperplane, 5), make_linear()).stats.cells ==
              1 + 7 * 5);
        CHECK(run(basic_config(2, Strategy::Diagonal, 4), make_linear()).stats.cells == 9);
    }

    TEST_CASE("evaluation accounting per strategy on one scripted sequence")
    {
        const std::vector<int> script = random_script(42, 30, 3);
        for (const Strategy strategy : all_strategies()) {
            RunConfig cfg = RunConfig::unit_cube(2, strategy,
                                                 SelectionRule::scripted(script),
                                                 StopRule{30, {}, {}});
            cfg.evaluator.name = "quadratic-offcenter";
            const RunResult res = run(cfg, make_quadratic_offcenter());
            CHECK_FALSE(res.aborted);
            CHECK(res.stats.evaluations + res.stats.hits == res.stats.candidates);
            switch (strategy) {
            case Strategy::S1Center:
                CHECK(res.stats.evaluations == 2 * 30 + 1);
                CHECK(res.stats.hits == 0);
                break;
            case Strategy::S2Hyperplane:
                CHECK(res.stats.evaluations == 30);
                CHECK(res.stats.hits == 0);
                break;
            case Strategy::S3OnePoint:
                CHECK(res.stats.evaluations <= 31);
                CHECK(res.stats.evaluations == 1 + 30 - res.stats.hits);
                break;
            case Strategy::Diagonal:
                CHECK(res.stats.evaluations <= 62);
                CHECK(res.stats.evaluations == 2 + 60 - res.stats.hits);
                break;
            }
        }
    }

    TEST_CASE("largest-diameter refinement is monotone")
    {
        const Evaluator ev = make_linear();
        PartitionState state{unit_domain(2)};
        init_root(state, Strategy::S3OnePoint, ev, 1);
        Rational previous;
        for (int k = 0; k < 40; ++k) {
            const int id = select_cell(state, SelectionRule::largest_diameter(), 0);
            const Rational diam = squared_diameter(state.cell(id));
            if (k > 0) {
                CHECK(diam <= previous);
            }
            previous = diam;
            apply_split(state, Strategy::S3OnePoint, id, ev, k + 2);
        }
    }

    TEST_CASE("identical configs give byte-identical traces")
    {
        RunConfig cfg = basic_config(2, Strategy::Diagonal, 25);
        cfg.evaluator.name = "quadratic-offcenter";
        const RunResult a = run(cfg, make_quadratic_offcenter());
        const RunResult b = run(cfg, make_quadratic_offcenter());
        std::ostringstream ta, tb;
        write_trace(ta, cfg, a.trace);
        write_trace(tb, cfg, b.trace);
        CHECK(ta.str() == tb.str());
    }

    TEST_CASE("max_evaluations stops once the budget is consumed")
    {
        RunConfig cfg = RunConfig::unit_cube(1, Strategy::S1Center,
                                             SelectionRule::largest_diameter(),
                                             StopRule{{}, 5, {}});
        cfg.evaluator.name = "linear";
        const RunResult res = run(cfg, make_linear());
        // Evaluations go 1, 3, 5: the budget check runs between splits.
        CHECK(res.stats.evaluations == 5);
        CHECK(res.stats.splits == 2);
    }

    TEST_CASE("min_diameter stops once every cell is small enough")
    {
        RunConfig cfg = RunConfig::unit_cube(1, Strategy::S3OnePoint,
                                             SelectionRule::largest_diameter(),
                                             StopRule{{}, {}, 0.34});
        cfg.evaluator.name = "linear";
        const RunResult res = run(cfg, make_linear());
        CHECK(res.stats.splits == 1); // thirds of width 1/3 < 0.34 remain
    }

    TEST_CASE("script exhaustion ends the run cleanly")
    {
        RunConfig cfg = RunConfig::unit_cube(2, Strategy::S3OnePoint,
                                             SelectionRule::scripted({1, 1}),
                                             StopRule{100, {}, {}});
        cfg.evaluator.name = "linear";
        const RunResult res = run(cfg, make_linear());
        CHECK(res.stats.splits == 2);
        CHECK(res.stats.cells == 5);
    }

    TEST_CASE("a failing evaluator aborts with the partial trace flagged")
    {
        int calls = 0;
        const Evaluator flaky{1, [&calls](const std::vector<double>& x) {
                                  ++calls;
                                  if (calls >= 3) {
                                      return std::vector<double>{
                                          std::numeric_limits<double>::quiet_NaN()};
                                  }
                                  return std::vector<double>{x[0]};
                              }};
        const RunConfig cfg = basic_config(2, Strategy::S3OnePoint, 10);
        const RunResult res = run(cfg, flaky);
        CHECK(res.aborted);
        CHECK_FALSE(res.error.empty());
        CHECK(res.stats.splits == 1); // init + one good split, then the failure
        CHECK(res.trace.size() == 2);
        CHECK(res.stats.evaluations == 2);
    }

    TEST_CASE("minimize finds the evaluated minimum")
    {
        RunConfig cfg = basic_config(2, Strategy::S3OnePoint, 20);
        const MinimizeResult best = minimize(cfg, make_linear());
        CHECK(best.value == 0.0); // f = x_1 and corner a is evaluated at init
        CHECK(best.point[0] == 0.0);
        CHECK(best.vertex == 1);

        RunConfig constant_cfg = basic_config(2, Strategy::S3OnePoint, 5);
        constant_cfg.evaluator.name = "constant";
        constant_cfg.evaluator.value = 2.5;
        const MinimizeResult flat = minimize(constant_cfg, make_constant(2.5));
        CHECK(flat.value == 2.5);
    }

    TEST_CASE("redundancy histogram is collected for hyperplane runs")
    {
        const RunConfig cfg = basic_config(2, Strategy::S2Hyperplane, 12);
        const RunResult res = run(cfg, make_linear());
        REQUIRE(res.stats.has_audit);
        CHECK(res.stats.redundancy_histogram[0] == 1); // the root split only
        CHECK(res.stats.redundancy_histogram[0] + res.stats.redundancy_histogram[1] +
                  res.stats.redundancy_histogram[2] ==
              res.stats.splits);
    }
}
