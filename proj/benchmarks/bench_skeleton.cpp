#include <benchmark/benchmark.h>

#include "bskel/experiments.hpp"
#include "bskel/growth.hpp"
#include "bskel/skeleton.hpp"

namespace {

bskel::PointSet random_set(std::size_t n)
{
    bskel::RandomSetConfig cfg;
    cfg.n = n;
    cfg.rng_seed = 7;
    return bskel::generate_random_set(cfg);
}

void BM_BuildNaive(benchmark::State& state)
{
    const auto ps = random_set(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bskel::build_naive(ps, 2.0).edge_count());
}
BENCHMARK(BM_BuildNaive)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_BuildIndexed(benchmark::State& state)
{
    const auto ps = random_set(static_cast<std::size_t>(state.range(0)));
    const auto idx = bskel::GridIndex::over(ps);
    for (auto _ : state)
        benchmark::DoNotOptimize(bskel::build_indexed(ps, 2.0, idx).edge_count());
}
BENCHMARK(BM_BuildIndexed)->Arg(100)->Arg(200)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BuildIndexedLargeBeta(benchmark::State& state)
{
    const auto ps = random_set(400);
    const auto idx = bskel::GridIndex::over(ps);
    const double beta = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bskel::build_indexed(ps, beta, idx).edge_count());
}
BENCHMARK(BM_BuildIndexedLargeBeta)->Arg(1)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Grow(benchmark::State& state)
{
    bskel::GrowthConfig cfg;
    cfg.beta = static_cast<double>(state.range(0));
    cfg.dtheta = 2.0;
    cfg.r_max = 30.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(bskel::grow(cfg).points.size());
}
BENCHMARK(BM_Grow)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
