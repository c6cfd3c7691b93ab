#include <benchmark/benchmark.h>

#include "vircoad/rng.hpp"
#include "vircoad/sturm.hpp"

using namespace vircoad;

static void BM_FundamentalPath(benchmark::State& state) {
    Rng rng(4);
    const SturmLiouville L(-2.0, random_trig(rng, 8));
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_path(L, steps));
}
BENCHMARK(BM_FundamentalPath)->Arg(1024)->Arg(4096);

static void BM_Transport(benchmark::State& state) {
    Rng rng(5);
    const SturmLiouville L(-2.0, random_trig(rng, 8));
    const CircleDiffeo g = random_diffeo(rng, 8, 0.35);
    for (auto _ : state) benchmark::DoNotOptimize(sl_diffeo_act(g, L));
}
BENCHMARK(BM_Transport);
