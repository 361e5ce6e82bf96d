#include <benchmark/benchmark.h>

#include "hullsum/decomposition.hpp"
#include "hullsum/explorer.hpp"
#include "hullsum/geometry.hpp"
#include "hullsum/sumset.hpp"

namespace {

hullsum::PointSet cube_corners(long long side) {
    std::vector<hullsum::LatticePoint> pts;
    for (long long x : {0LL, side}) {
        for (long long y : {0LL, side}) {
            for (long long z : {0LL, side}) pts.push_back(hullsum::LatticePoint{x, y, z});
        }
    }
    return hullsum::PointSet(3, std::move(pts));
}

hullsum::PointSet grid(long long n) {
    std::vector<hullsum::LatticePoint> pts;
    for (long long x = 0; x < n; ++x) {
        for (long long y = 0; y < n; ++y) pts.push_back(hullsum::LatticePoint{x, y});
    }
    return hullsum::PointSet(2, std::move(pts));
}

void BM_KFoldMachine(benchmark::State& state) {
    const auto b = cube_corners(3);
    for (auto _ : state) {
        auto r = hullsum::k_fold(b, static_cast<std::size_t>(state.range(0)), {hullsum::Arithmetic::machine});
        benchmark::DoNotOptimize(r.points);
    }
}
BENCHMARK(BM_KFoldMachine)->Arg(2)->Arg(4)->Arg(6);

void BM_KFoldBignum(benchmark::State& state) {
    const auto b = cube_corners(3);
    for (auto _ : state) {
        auto r = hullsum::k_fold(b, static_cast<std::size_t>(state.range(0)), {hullsum::Arithmetic::bignum});
        benchmark::DoNotOptimize(r.points);
    }
}
BENCHMARK(BM_KFoldBignum)->Arg(2)->Arg(4)->Arg(6);

void BM_SumsetGrid(benchmark::State& state) {
    const auto a = grid(state.range(0));
    for (auto _ : state) {
        auto r = hullsum::sumset(a, a);
        benchmark::DoNotOptimize(r.points);
    }
}
BENCHMARK(BM_SumsetGrid)->Arg(8)->Arg(16)->Arg(32);

void BM_ConvContains(benchmark::State& state) {
    const auto b = cube_corners(4);
    const hullsum::LatticePoint q{1, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(hullsum::conv_contains(b, q));
}
BENCHMARK(BM_ConvContains);

void BM_Decompose(benchmark::State& state) {
    hullsum::GeneratorConfig cfg;
    cfg.dim = 3;
    cfg.b_size = {8, 8};
    cfg.seed = 7;
    const auto inst = hullsum::generate_instance(cfg, hullsum::CampaignKind::k_fold, 0);
    for (auto _ : state) benchmark::DoNotOptimize(hullsum::decompose(*inst.b));
}
BENCHMARK(BM_Decompose);

void BM_CheckDecomposition(benchmark::State& state) {
    const auto d = hullsum::decompose(cube_corners(2));
    for (auto _ : state) benchmark::DoNotOptimize(hullsum::check_decomposition(d).passed());
}
BENCHMARK(BM_CheckDecomposition);

}  // namespace

BENCHMARK_MAIN();
