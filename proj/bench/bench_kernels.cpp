// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "surplab/extraction.hpp"
#include "surplab/generators.hpp"
#include "surplab/maxcut.hpp"
#include "surplab/parallel.hpp"
#include "surplab/stability.hpp"

using namespace surplab;

namespace {

void BM_MaxcutExactReference(benchmark::State &state) {
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxcut_exact_reference(g));
  }
}

void BM_MaxcutExactParallel(benchmark::State &state) {
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  set_workers(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxcut_exact(g));
  }
  set_workers(0);
}

void BM_LocalSearch(benchmark::State &state) {
  const Graph g = gnp(400, 0.5, 1);
  set_workers(static_cast<std::size_t>(state.range(0)));
  LocalSearchOptions opts;
  opts.restarts = 32;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxcut_local_search(g, opts));
  }
  set_workers(0);
}

void BM_ClassifyBlocks(benchmark::State &state) {
  std::vector<std::size_t> sizes(40, 25);
  const Graph g = perturbed_clique_union(sizes, 5000, 1);
  std::vector<VertexSet> cliques;
  for (vertex_t k = 0; k < 40; ++k) {
    std::vector<vertex_t> m;
    for (vertex_t v = 0; v < 25; ++v) {
      m.push_back(k * 25 + v);
    }
    cliques.emplace_back(std::move(m));
  }
  set_workers(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_blocks(g, cliques, 0.25, 0.75));
  }
  set_workers(0);
}

} // namespace

BENCHMARK(BM_MaxcutExactReference)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxcutExactParallel)->ArgsProduct({{18, 22}, {1, 2, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalSearch)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyBlocks)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
