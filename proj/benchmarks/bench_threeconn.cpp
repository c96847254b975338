#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include <threeconn/bg_ops.hpp>
#include <threeconn/canonical.hpp>
#include <threeconn/connectivity.hpp>
#include <threeconn/degree_sequences.hpp>
#include <threeconn/graph.hpp>
#include <threeconn/graph6.hpp>

namespace {

using namespace threeconn;

Graph random_graph(unsigned seed, int order, double p) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(order, edges);
}

void BM_CanonicalCode(benchmark::State& state) {
  const Graph g = random_graph(7, static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(8)->Arg(10);

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = random_graph(11, static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(10)->Arg(20)->Arg(40);

void BM_Is3Connected(benchmark::State& state) {
  const Graph g = random_graph(13, static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(is_3_connected(g));
}
BENCHMARK(BM_Is3Connected)->Arg(10)->Arg(20)->Arg(40);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) {
    const Catalog catalog = enumerate_3connected(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(catalog.class_count());
  }
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = random_graph(17, 40, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(graph6_decode(graph6_encode(g)));
}
BENCHMARK(BM_Graph6RoundTrip);

void BM_OracleRealizations(benchmark::State& state) {
  const DegreeSequence s = DegreeSequence::parse("4,4,4,4,3,3,3,3");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_realizations(s).size());
}
BENCHMARK(BM_OracleRealizations)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
