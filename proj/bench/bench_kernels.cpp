// Serial reference loops vs. their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <span>
#include <vector>

#include "fuzzyreg/kernels.hpp"
#include "fuzzyreg/regulator.hpp"

namespace k = fuzzyreg::kernels;

namespace {

std::vector<double> grades(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    for (auto& g : v) g = u(rng);
    return v;
}

template <auto Kernel>
void compose(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto r = grades(n * n, 1);
    const auto ap = grades(n, 2);
    std::vector<double> out(n);
    for (auto _ : state) {
        Kernel(r, n, ap, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n));
}

template <auto Kernel>
void clip_union(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<double>> storage;
    std::vector<std::span<const double>> sets;
    for (unsigned k = 0; k < 7; ++k) storage.push_back(grades(n, 10 + k));
    for (const auto& s : storage) sets.emplace_back(s);
    const auto levels = grades(sets.size(), 3);
    std::vector<double> out(n);
    for (auto _ : state) {
        Kernel(levels, sets, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * sets.size()));
}

template <auto Kernel>
void moments(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = grades(n, 4);
    const auto g = grades(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, g));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

void sweep(benchmark::State& state, fuzzyreg::Execution exec) {
    const auto reg = fuzzyreg::reference_regulator();
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fuzzyreg::sweep(reg, steps, exec));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * steps));
}

} // namespace

BENCHMARK(compose<k::serial::max_min_compose>)->Name("compose/serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(compose<k::parallel::max_min_compose>)->Name("compose/parallel")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(clip_union<k::serial::clip_union>)->Name("clip_union/serial")->RangeMultiplier(8)->Range(101, 1 << 20);
BENCHMARK(clip_union<k::parallel::clip_union>)->Name("clip_union/parallel")->RangeMultiplier(8)->Range(101, 1 << 20);
BENCHMARK(moments<k::serial::moments>)->Name("moments/serial")->RangeMultiplier(8)->Range(101, 1 << 20);
BENCHMARK(moments<k::parallel::moments>)->Name("moments/parallel")->RangeMultiplier(8)->Range(101, 1 << 20);
BENCHMARK_CAPTURE(sweep, serial, fuzzyreg::Execution::Serial)->Arg(101)->Arg(10001);
BENCHMARK_CAPTURE(sweep, parallel, fuzzyreg::Execution::Parallel)->Arg(101)->Arg(10001);

BENCHMARK_MAIN();
