// Copyright 2026 The COVE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <map>

#include "cove/abcd.hpp"
#include "cove/cooccurrence.hpp"
#include "cove/kmeans.hpp"
#include "cove/reduce.hpp"
#include "cove/walk.hpp"

namespace cove {
namespace {

const Graph& abcd_graph(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    AbcdParams params;
    params.n = n;
    params.xi = 0.2;
    params.seed = 1;
    it = cache.emplace(n, generate_abcd(params).graph).first;
  }
  return it->second;
}

void BM_ExactCove(benchmark::State& state) {
  const Graph& g = abcd_graph(static_cast<std::size_t>(state.range(0)));
  const auto radius = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_cove(g, radius));
  }
}
BENCHMARK(BM_ExactCove)
    ->Args({1000, 2})
    ->Args({1000, 6})
    ->Args({4000, 3})
    ->Unit(benchmark::kMillisecond);

void BM_BuildCorpus(benchmark::State& state) {
  const Graph& g = abcd_graph(static_cast<std::size_t>(state.range(0)));
  WalkParams params;
  params.p = state.range(1) ? 0.5 : 1.0;
  params.q = state.range(1) ? 2.0 : 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_corpus(g, params));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(g.n() * params.walks_per_node *
                                                    params.length));
}
BENCHMARK(BM_BuildCorpus)
    ->Args({1000, 0})
    ->Args({1000, 1})
    ->Unit(benchmark::kMillisecond);

void BM_CountCooccurrences(benchmark::State& state) {
  const Graph& g = abcd_graph(static_cast<std::size_t>(state.range(0)));
  const WalkCorpus corpus = build_corpus(g, WalkParams{});
  const auto radius = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_cooccurrences(corpus, radius));
  }
}
BENCHMARK(BM_CountCooccurrences)
    ->Args({1000, 6})
    ->Args({4000, 6})
    ->Unit(benchmark::kMillisecond);

void BM_SvdReduce(benchmark::State& state) {
  const Graph& g = abcd_graph(1000);
  CoveConfig config;
  config.exact = true;
  const Embedding h = cove_hellinger_embedding(g, config);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(svd_reduce(h, d, 0));
  }
}
BENCHMARK(BM_SvdReduce)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_KMeans(benchmark::State& state) {
  const Graph& g = abcd_graph(1000);
  CoveConfig config;
  config.exact = true;
  const Embedding reduced = svd_reduce(cove_hellinger_embedding(g, config), 16, 0);
  KMeansParams params;
  params.k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmeans(reduced, params));
  }
}
BENCHMARK(BM_KMeans)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cove

BENCHMARK_MAIN();
