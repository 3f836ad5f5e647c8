// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <benchmark/benchmark.h>

#include "triad/engine.hpp"

using namespace triad;

namespace {

std::vector<std::pair<Rational, Rational>> unit_domain(int n)
{
    return std::vector<std::pair<Rational, Rational>>(
        static_cast<std::size_t>(n), {Rational(0), Rational(1)});
}

void bm_rational_affine_third(benchmark::State& state)
{
    const Rational a(7, 81);
    const Rational b(23, 27);
    for (auto _ : state) {
        benchmark::DoNotOptimize(affine_third(a, b, 2));
    }
}
BENCHMARK(bm_rational_affine_third);

void bm_db_ensure_hit(benchmark::State& state)
{
    VertexDb db;
    const Evaluator ev = make_quadratic_offcenter();
    Point p;
    p.coords = {Rational(2, 3), Rational(4, 9)};
    db.ensure(p, ev, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(db.ensure(p, ev, 1));
    }
}
BENCHMARK(bm_db_ensure_hit);

void bm_one_point_splits(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Evaluator ev = make_quadratic_offcenter();
    for (auto _ : state) {
        PartitionState partition{unit_domain(n)};
        init_root(partition, Strategy::S3OnePoint, ev, 1);
        std::mt19937 rng(1);
        for (int split = 0; split < 200; ++split) {
            std::uniform_int_distribution<int> pick(1, partition.max_id());
            apply_split(partition, Strategy::S3OnePoint, pick(rng), ev, split + 2);
        }
        benchmark::DoNotOptimize(partition.db().stats().evaluations);
    }
}
BENCHMARK(bm_one_point_splits)->Arg(2)->Arg(6);

void bm_largest_diameter_run(benchmark::State& state)
{
    RunConfig cfg = RunConfig::unit_cube(2, Strategy::S3OnePoint,
                                         SelectionRule::largest_diameter(),
                                         StopRule{200, {}, {}});
    cfg.evaluator.name = "quadratic-offcenter";
    const Evaluator ev = make_evaluator(cfg.evaluator);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(cfg, ev).stats.evaluations);
    }
}
BENCHMARK(bm_largest_diameter_run);

} // namespace

BENCHMARK_MAIN();
