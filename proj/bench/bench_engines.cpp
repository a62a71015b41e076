// Serial (threads = 1) vs OpenMP (threads = 0: all cores) for both engines
// on preferential-attachment graphs.

#include <benchmark/benchmark.h>

#include <map>

#include "hcs/generators.hpp"
#include "hcs/list_counter.hpp"
#include "hcs/ordering.hpp"
#include "hcs/pivot_counter.hpp"

using namespace hcs;

namespace {

struct Input {
  Graph g;
  DegeneracyOrder ord;
};

const Input& input(std::size_t n) {
  static std::map<std::size_t, Input> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Graph g = preferential_attachment(n, 12, 7);
    auto ord = degeneracy_order(g);
    it = cache.emplace(n, Input{std::move(g), std::move(ord)}).first;
  }
  return it->second;
}

EngineOptions threads(const benchmark::State& st) {
  EngineOptions o;
  o.threads = static_cast<int>(st.range(1));
  return o;
}

void set_label(benchmark::State& st) { st.SetLabel(st.range(1) == 1 ? "serial" : "openmp"); }

void BM_pivot_dclique(benchmark::State& st) {
  const auto& in = input(static_cast<std::size_t>(st.range(0)));
  const auto opts = threads(st);
  for (auto _ : st) {
    benchmark::DoNotOptimize(count_by_pivot(in.g, in.ord, MotifSpec::range(Family::dclique, 1, 4, 8), opts));
  }
  set_label(st);
}

void BM_pivot_plex(benchmark::State& st) {
  const auto& in = input(static_cast<std::size_t>(st.range(0)));
  const auto opts = threads(st);
  for (auto _ : st) {
    benchmark::DoNotOptimize(count_by_pivot(in.g, in.ord, MotifSpec::range(Family::plex, 1, 4, 8), opts));
  }
  set_label(st);
}

void BM_list_dclique(benchmark::State& st) {
  const auto& in = input(static_cast<std::size_t>(st.range(0)));
  const auto opts = threads(st);
  for (auto _ : st) {
    benchmark::DoNotOptimize(count_by_listing(in.g, in.ord, MotifSpec::single(Family::dclique, 1, 6), opts));
  }
  set_label(st);
}

void BM_local_edge(benchmark::State& st) {
  const auto& in = input(static_cast<std::size_t>(st.range(0)));
  const auto opts = threads(st);
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        count_local(in.g, in.ord, MotifSpec::single(Family::plex, 1, 6), Granularity::edge, opts));
  }
  set_label(st);
}

}  // namespace

BENCHMARK(BM_pivot_dclique)->ArgsProduct({{2000, 8000}, {1, 0}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_pivot_plex)->ArgsProduct({{2000, 8000}, {1, 0}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_list_dclique)->ArgsProduct({{2000}, {1, 0}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_local_edge)->ArgsProduct({{2000}, {1, 0}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
