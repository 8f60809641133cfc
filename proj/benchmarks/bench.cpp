#include <benchmark/benchmark.h>

#include <random>

#include "waring/binary.hpp"
#include "waring/bounds.hpp"
#include "waring/detperm.hpp"
#include "waring/families.hpp"
#include "waring/flatten.hpp"
#include "waring/limits.hpp"

using namespace waring;

namespace {

void BM_CatalecticantRankDet(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto f = build_matrix_poly({n, DetPerm::Det});
    for (auto _ : state) {
        benchmark::DoNotOptimize(catalecticant_rank(f, n / 2));
    }
}
BENCHMARK(BM_CatalecticantRankDet)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SylvesterDegree8(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> coeff(-50, 50);
    Poly<Rational> f(2, 8);
    for (int i = 0; i <= 8; ++i) f.add_term(Monomial({i, 8 - i}), Rational(coeff(rng)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sylvester_rank(f).rank);
    }
}
BENCHMARK(BM_SylvesterDegree8)->Unit(benchmark::kMicrosecond);

void BM_CountS(benchmark::State& state) {
    std::vector<int> b = {5, 4, 4, 3, 2, 2, 1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_S(b, 11));
    }
}
BENCHMARK(BM_CountS)->Unit(benchmark::kMicrosecond);

void BM_LimitPlane(benchmark::State& state) {
    for (auto _ : state) {
        auto plane = limit_plane(monomial_family({2, 1}, 5));
        benchmark::DoNotOptimize(plane.basis.size());
    }
}
BENCHMARK(BM_LimitPlane)->Unit(benchmark::kMillisecond);

void BM_AggregateBlocks(benchmark::State& state) {
    auto f = triple_blocks_poly(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(aggregate(f).rank_lower.value);
    }
}
BENCHMARK(BM_AggregateBlocks)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
