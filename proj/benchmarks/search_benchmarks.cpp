#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "symcan/canonical_search.hpp"
#include "symcan/partition.hpp"
#include "symcan/pipeline.hpp"
#include "symcan/symmetry_search.hpp"

namespace {

using namespace symcan;

Graph random_sparse(int n, double avg_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr std::uint64_t kScale = 1ull << 32;
  auto threshold =
      static_cast<std::uint64_t>(avg_degree / static_cast<double>(n - 1) * kScale);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % kScale < threshold) edges.emplace_back(u, v);
  return Graph(n, edges);
}

void BM_Refine_RandomSparse(benchmark::State& state) {
  Graph g = random_sparse(static_cast<int>(state.range(0)), 3.0, 17);
  OrderedPartition unit = OrderedPartition::unit(g.vertex_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(refine(g, unit));
  }
}
BENCHMARK(BM_Refine_RandomSparse)->Arg(1000)->Arg(4000)->Arg(16000);

void BM_Symmetry_Matching(benchmark::State& state) {
  Graph g = matching_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_automorphisms(g));
  }
  state.counters["nodes"] =
      static_cast<double>(search_automorphisms(g).nodes_explored);
}
BENCHMARK(BM_Symmetry_Matching)->Arg(100)->Arg(400)->Arg(1600);

void BM_Canonical_Matching(benchmark::State& state) {
  Graph g = matching_graph(static_cast<int>(state.range(0)));
  CanonicalOptions options;
  options.early_symmetry = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_canonical(g, options));
  }
  state.counters["nodes"] =
      static_cast<double>(search_canonical(g, options).nodes_explored);
}
BENCHMARK(BM_Canonical_Matching)->Arg(100)->Arg(200)->Arg(400);

void BM_Combined_Matching(benchmark::State& state) {
  Graph g = matching_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_label_combined(g));
  }
  state.counters["nodes"] =
      static_cast<double>(canonical_label_combined(g).total_nodes());
}
BENCHMARK(BM_Combined_Matching)->Arg(100)->Arg(400)->Arg(1600);

void BM_Symmetry_RandomSparse(benchmark::State& state) {
  Graph g = random_sparse(static_cast<int>(state.range(0)), 2.0, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_automorphisms(g));
  }
}
BENCHMARK(BM_Symmetry_RandomSparse)->Arg(1000)->Arg(4000);

void BM_Combined_RandomSparse(benchmark::State& state) {
  Graph g = random_sparse(static_cast<int>(state.range(0)), 2.0, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_label_combined(g));
  }
}
BENCHMARK(BM_Combined_RandomSparse)->Arg(1000)->Arg(4000);

}  // namespace
