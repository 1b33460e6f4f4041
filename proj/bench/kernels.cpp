// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "commgraph/commuting.hpp"
#include "commgraph/graphalg.hpp"
#include "commgraph/notation.hpp"
#include "commgraph/reference.hpp"

using namespace commgraph;

namespace {

  PTrans cycle(std::size_t n) {
    std::vector<int> img;
    for (std::size_t i = 0; i < n; ++i) {
      img.push_back(static_cast<int>((i + 1) % n));
    }
    std::vector<Point> pts(img.begin(), img.end());
    return PTrans::from_images(pts);
  }

  void centralizer_reference(benchmark::State& state) {
    PTrans a = parse_element("[1 2 3](3 4 5)", 5);
    for (auto _ : state) {
      benchmark::DoNotOptimize(reference::centralizer(a, Universe::all_partial));
    }
  }

  void centralizer_scan(benchmark::State& state) {
    PTrans a = parse_element("[1 2 3](3 4 5)", 5);
    for (auto _ : state) {
      benchmark::DoNotOptimize(centralizer(a, Universe::all_partial, Strategy::scan,
                                           Budget{}, Parallelism{int(state.range(0))}));
    }
  }

  void centralizer_backtrack(benchmark::State& state) {
    PTrans a = parse_element("[1 2 3](3 4 5)", 5);
    for (auto _ : state) {
      benchmark::DoNotOptimize(centralizer(a, Universe::all_partial,
                                           Strategy::backtrack, Budget{},
                                           Parallelism{1}));
    }
  }

  void adjacency_reference(benchmark::State& state) {
    CommGraph g(4, Semigroup::all_partial);
    for (auto _ : state) {
      benchmark::DoNotOptimize(reference::build_graph(g));
    }
  }

  void adjacency_parallel(benchmark::State& state) {
    CommGraph g(4, Semigroup::all_partial);
    for (auto _ : state) {
      benchmark::DoNotOptimize(VertexGraph::build(g, Strategy::scan, Budget{},
                                                  Parallelism{int(state.range(0))}));
    }
  }

  void diameter_reference(benchmark::State& state) {
    auto graph = reference::build_graph(CommGraph(4, Semigroup::all_partial));
    for (auto _ : state) {
      benchmark::DoNotOptimize(reference::diameter(graph));
    }
  }

  void diameter_parallel(benchmark::State& state) {
    auto vg = VertexGraph::build(CommGraph(4, Semigroup::all_partial));
    for (auto _ : state) {
      benchmark::DoNotOptimize(diameter(vg, Parallelism{int(state.range(0))}));
    }
  }

  void witness_distance_n6(benchmark::State& state) {
    CommGraph g(6, Semigroup::all_partial);
    PTrans    a = cycle(6);
    PTrans    b = parse_element("[6 4 1 2](2 3 5)", 6);
    for (auto _ : state) {
      benchmark::DoNotOptimize(bfs_distance(g, a, b, std::nullopt, Strategy::backtrack,
                                            Budget{}, Parallelism{int(state.range(0))}));
    }
  }

}  // namespace

BENCHMARK(centralizer_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(centralizer_scan)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(centralizer_backtrack)->Unit(benchmark::kMicrosecond);
BENCHMARK(adjacency_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(adjacency_parallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(diameter_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(diameter_parallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(witness_distance_n6)->Arg(1)->Arg(0)->Iterations(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
