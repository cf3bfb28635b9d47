#include <benchmark/benchmark.h>

#include "psp/classes.hpp"
#include "psp/maps.hpp"
#include "psp/verify.hpp"

using namespace psp;

static void BM_EnumerateAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t c = 0;
        for_each_partition(n, [&](const Partition&) { ++c; });
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_EnumerateAll)->Arg(30)->Arg(40)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_CountClass(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ClassSpec c = classes::ou_eu();
    for (auto _ : state) benchmark::DoNotOptimize(count_class(n, c));
}
BENCHMARK(BM_CountClass)->Arg(30)->Arg(50)->Unit(benchmark::kMicrosecond);

static void BM_ApplyInvert(benchmark::State& state) {
    const auto m = static_cast<MapId>(state.range(0));
    std::vector<Partition> domain;
    for (int n = 0; n <= 30; ++n) {
        if (!domain_admits_weight(m, n)) continue;
        for_each_member(n, domain_class(m), [&](const Partition& p) { domain.push_back(p); });
    }
    for (auto _ : state) {
        for (const auto& p : domain) {
            const auto mu = apply(m, p).image;
            try {
                benchmark::DoNotOptimize(invert(m, mu));
            } catch (const NotInImageError&) {
            }
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * domain.size()));
    state.SetLabel(std::string(map_name(m)));
}
BENCHMARK(BM_ApplyInvert)->DenseRange(0, 8)->Unit(benchmark::kMillisecond);

static void BM_ImageCheck(benchmark::State& state) {
    const auto m = static_cast<MapId>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_image(m, 30));
    state.SetLabel(std::string(map_name(m)));
}
BENCHMARK(BM_ImageCheck)
    ->Arg(static_cast<int>(MapId::phi2))
    ->Arg(static_cast<int>(MapId::phi4))
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
