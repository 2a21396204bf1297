// Serial reference vs OpenMP kernel for the exhaustive tuple search.

#include "lssbound/search.hpp"
#include "lssbound/shortest.hpp"
#include "lssbound/constructions.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lssbound;

std::vector<std::uint32_t> sizes_for(std::int64_t code) {
    switch (code) {
    case 0: return {2, 3};
    case 1: return {3, 3};
    default: return {2, 2, 3};
    }
}

void BM_SearchSerial(benchmark::State& state) {
    const auto sizes = sizes_for(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(tightness_search_serial(sizes, Alphabet::binary()));
}
BENCHMARK(BM_SearchSerial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
    const auto sizes = sizes_for(state.range(0));
    SearchOptions opts;
    opts.workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(tightness_search(sizes, Alphabet::binary(), opts));
}
BENCHMARK(BM_SearchParallel)
    ->ArgsProduct({{0, 1, 2}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_IntersectionLss(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const Dfa pair[] = {build_m1(m), build_m2(m, m + 5)};
    for (auto _ : state)
        benchmark::DoNotOptimize(intersection_lss(pair));
}
BENCHMARK(BM_IntersectionLss)->Arg(5)->Arg(15)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
