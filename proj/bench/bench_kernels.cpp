#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ringmig/batch.hpp"
#include "ringmig/offline_opt.hpp"
#include "ringmig/workloads.hpp"

namespace {

using namespace ringmig;
using Kernel = void (*)(RingSize, std::span<const std::int64_t>, Position, std::span<std::int64_t>,
                        std::span<std::int32_t>);

std::vector<std::int64_t> random_row(std::int64_t len) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(len));
    std::uniform_int_distribution<std::int64_t> pick(0, len);
    std::vector<std::int64_t> row(static_cast<std::size_t>(len));
    for (auto& v : row) v = pick(rng);
    return row;
}

template <Kernel kernel>
void BM_Relax(benchmark::State& state) {
    const std::int64_t len = state.range(0);
    const RingSize ring{len};
    const std::vector<std::int64_t> prev = random_row(len);
    std::vector<std::int64_t> next(prev.size());
    std::vector<std::int32_t> argmin(prev.size());
    Position request = 0;
    for (auto _ : state) {
        kernel(ring, prev, request, next, argmin);
        benchmark::DoNotOptimize(next.data());
        request = (request + 7) % len;
    }
    state.SetItemsProcessed(state.iterations() * len);
}

BENCHMARK(BM_Relax<relax_linear>)->RangeMultiplier(4)->Range(64, 1 << 16);
BENCHMARK(BM_Relax<relax_quadratic>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Relax<relax_quadratic_omp>)->RangeMultiplier(4)->Range(64, 4096);

void BM_OptCost(benchmark::State& state) {
    const Instance inst = random_instance(RingSize{state.range(0)}, state.range(1), 42);
    for (auto _ : state) benchmark::DoNotOptimize(opt_cost(inst).total_cost);
}

BENCHMARK(BM_OptCost)->Args({500, 50})->Args({10'000, 200})->Args({100'000, 100});

void BM_CheckBatch(benchmark::State& state) {
    const auto exec = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
    std::vector<Instance> corpus;
    for (std::uint64_t seed = 0; seed < 256; ++seed) corpus.push_back(random_instance(RingSize{400}, 40, seed));
    for (auto _ : state) benchmark::DoNotOptimize(check_batch(corpus, canonical_constants(), exec).size());
    state.SetLabel(exec == Execution::Serial ? "serial" : "parallel");
}

BENCHMARK(BM_CheckBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
