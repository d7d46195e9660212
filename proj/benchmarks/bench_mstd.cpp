#include "mstd/analysis.hpp"
#include "mstd/combinators.hpp"
#include "mstd/constructions.hpp"
#include "mstd/montecarlo.hpp"
#include "mstd/sumset.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mstd;

namespace {

Construction square(unsigned k, Coord n) {
    ConstructionParams p;
    p.k = k;
    p.dims = {n, n};
    p.spec1 = {k, 0};
    p.spec2 = {k / 2, k - k / 2};
    return build_2d(p);
}

PointSet random_1d(Coord n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    std::vector<Coord> xs;
    for (Coord x = 0; x <= n; ++x) {
        if (keep(rng)) {
            xs.push_back(x);
        }
    }
    return PointSet::from_points(1, std::move(xs));
}

} // namespace

static void BM_SquareDoubling(benchmark::State& state) {
    const auto a = square(4, state.range(0)).set;
    for (auto _ : state) {
        benchmark::DoNotOptimize(minkowski_sum(a, a));
    }
    state.counters["points"] = static_cast<double>(a.size());
}
BENCHMARK(BM_SquareDoubling)->Arg(136)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_SquareDifference(benchmark::State& state) {
    const auto a = square(4, state.range(0)).set;
    for (auto _ : state) {
        benchmark::DoNotOptimize(minkowski_sum(a, negate(a)));
    }
}
BENCHMARK(BM_SquareDifference)->Arg(136)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_SparseSum(benchmark::State& state) {
    const auto a = random_1d(1 << 24, 1e-5, 1);
    const auto b = random_1d(1 << 24, 1e-5, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minkowski_sum(a, b));
    }
    state.counters["points"] = static_cast<double>(a.size());
}
BENCHMARK(BM_SparseSum)->Unit(benchmark::kMillisecond);

static void BM_IteratedDoubling(benchmark::State& state) {
    const auto a = random_1d(2000, 0.2, 3);
    const auto s = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterated_sumdiff(a, {s, 0}));
    }
}
BENCHMARK(BM_IteratedDoubling)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_IteratedNaive(benchmark::State& state) {
    const auto a = random_1d(2000, 0.2, 3);
    const auto s = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterated_sumdiff_naive(a, {s, 0}));
    }
}
BENCHMARK(BM_IteratedNaive)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_Build3D(benchmark::State& state) {
    ConstructionParams p;
    p.k = 2;
    p.dims = {state.range(0), state.range(0), state.range(0)};
    p.spec1 = {2, 0};
    p.spec2 = {1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_ddim(p));
    }
}
BENCHMARK(BM_Build3D)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

static void BM_ChainSizes(benchmark::State& state) {
    const auto chain = build_k_generational(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_k_generational(chain.set, 2));
    }
}
BENCHMARK(BM_ChainSizes)->Unit(benchmark::kMillisecond);

static void BM_Density(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_density(100, 10000, 7, DensityPredicate::mstd(), {1, nullptr}));
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Density)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
