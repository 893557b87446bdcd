// Serial reference vs OpenMP kernels, plus raw generator throughput.

#include <benchmark/benchmark.h>

#include "hiccup/engine.hpp"
#include "hiccup/kernels.hpp"

using namespace hiccup;

namespace {

template <auto Fn>
void BM_beatty(benchmark::State& state) {
  const BeattyForm form = beatty_form_a(2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(form, 1, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_ceiling(benchmark::State& state) {
  const QuadExt slope = slope_family_b(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(slope, 1, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_lattice(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(1, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_grid(benchmark::State& state) {
  std::vector<SequenceParams> grid;
  for (std::int64_t x = 0; x <= 6; ++x) {
    for (std::int64_t y = 0; y <= 6; ++y) {
      for (std::int64_t z = 0; z <= 6; ++z) {
        grid.push_back(S(x, y, z));
      }
    }
  }
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(grid, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(grid.size()));
}

void BM_generate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(S(3, 1, 2), n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_beatty<serial::eval_beatty_range>)->Name("beatty/serial")->Arg(1 << 20);
BENCHMARK(BM_beatty<kernels::eval_beatty_range>)->Name("beatty/openmp")->Arg(1 << 20);
BENCHMARK(BM_ceiling<serial::ceil_multiple_range>)->Name("ceiling/serial")->Arg(1 << 20);
BENCHMARK(BM_ceiling<kernels::ceil_multiple_range>)->Name("ceiling/openmp")->Arg(1 << 20);
BENCHMARK(BM_lattice<serial::ramsey_range>)->Name("ramsey/serial")->Arg(1 << 22);
BENCHMARK(BM_lattice<kernels::ramsey_range>)->Name("ramsey/openmp")->Arg(1 << 22);
BENCHMARK(BM_lattice<serial::hex_range>)->Name("hex/serial")->Arg(1 << 22);
BENCHMARK(BM_lattice<kernels::hex_range>)->Name("hex/openmp")->Arg(1 << 22);
BENCHMARK(BM_grid<serial::generate_grid>)->Name("grid/serial")->Arg(10'000);
BENCHMARK(BM_grid<kernels::generate_grid>)->Name("grid/openmp")->Arg(10'000);
BENCHMARK(BM_generate)->Name("generate/S(3,1,2)")->Arg(1'000'000)->Arg(10'000'000);

BENCHMARK_MAIN();
