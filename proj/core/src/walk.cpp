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

#include "cove/walk.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "cove/error.hpp"
#include "cove/parallel.hpp"
#include "cove/text_io.hpp"

namespace cove {
namespace {

NodeId pick_weighted(std::span<const NodeId> nb, std::span<const double> w,
                     double total, Rng& rng) {
  double x = uniform01(rng) * total;
  for (std::size_t k = 0; k + 1 < nb.size(); ++k) {
    x -= w[k];
    if (x < 0.0) return nb[k];
  }
  return nb.back();
}

NodeId standard_step(const Graph& g, NodeId v, Rng& rng) {
  return pick_weighted(g.neighbors(v), g.weights(v), g.weighted_degree(v),
                       rng);
}

}  // namespace

void WalkParams::validate() const {
  if (walks_per_node < 1) throw ParameterError("walks per node must be >= 1");
  if (length < 1) throw ParameterError("walk length must be >= 1");
  if (!(p > 0.0)) throw ParameterError("p must be > 0");
  if (!(q > 0.0)) throw ParameterError("q must be > 0");
}

Walk sample_standard_walk(const Graph& g, NodeId start, std::size_t steps,
                          Rng& rng) {
  Walk walk;
  if (steps == 0) return walk;
  walk.reserve(steps);
  walk.push_back(start);
  while (walk.size() < steps) {
    NodeId v = walk.back();
    if (g.degree(v) == 0) break;
    walk.push_back(standard_step(g, v, rng));
  }
  return walk;
}

Walk sample_biased_walk(const Graph& g, NodeId start, std::size_t steps,
                        double p, double q, Rng& rng) {
  if (p == 1.0 && q == 1.0) return sample_standard_walk(g, start, steps, rng);
  Walk walk;
  if (steps == 0) return walk;
  walk.reserve(steps);
  walk.push_back(start);
  if (steps == 1 || g.degree(start) == 0) return walk;
  walk.push_back(standard_step(g, start, rng));

  const double inv_p = 1.0 / p, inv_q = 1.0 / q;
  std::vector<double> bias;
  while (walk.size() < steps) {
    const NodeId prev = walk[walk.size() - 2];
    const NodeId cur = walk.back();
    auto nb = g.neighbors(cur);
    auto ws = g.weights(cur);
    bias.resize(nb.size());
    double total = 0.0;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      double f;
      if (nb[k] == prev) {
        f = inv_p;
      } else if (g.has_edge(nb[k], prev)) {
        f = 1.0;
      } else {
        f = inv_q;
      }
      bias[k] = ws[k] * f;
      total += bias[k];
    }
    walk.push_back(pick_weighted(nb, bias, total, rng));
  }
  return walk;
}

WalkCorpus build_corpus(const Graph& g, const WalkParams& params,
                        unsigned threads) {
  params.validate();
  WalkCorpus corpus;
  corpus.params = params;
  corpus.graph_n = g.n();
  const std::size_t gamma = params.walks_per_node;
  corpus.walks.resize(g.n() * gamma);
  parallel_for_chunks(g.n(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      for (std::size_t j = 0; j < gamma; ++j) {
        Rng rng = stream_for(params.seed, v, j);
        corpus.walks[v * gamma + j] =
            sample_biased_walk(g, static_cast<NodeId>(v), params.length,
                               params.p, params.q, rng);
      }
    }
  });
  return corpus;
}

void write_corpus(std::ostream& out, const WalkCorpus& corpus, const Graph& g) {
  for (const Walk& w : corpus.walks) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out << ' ';
      out << g.label(w[i]);
    }
    out << '\n';
  }
}

WalkCorpus read_corpus(std::istream& in, const Graph& g) {
  std::unordered_map<std::string, NodeId> id;
  id.reserve(g.n());
  for (NodeId v = 0; v < g.n(); ++v) id.emplace(g.label(v), v);

  WalkCorpus corpus;
  corpus.graph_n = g.n();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    Walk walk;
    walk.reserve(fields.size());
    for (auto f : fields) {
      auto it = id.find(std::string(f));
      if (it == id.end()) {
        throw ParseError(lineno, "unknown node '" + std::string(f) + "'");
      }
      if (!walk.empty() && !g.has_edge(walk.back(), it->second)) {
        throw ParseError(lineno, "consecutive nodes '" +
                                     g.label(walk.back()) + "' and '" +
                                     std::string(f) + "' are not adjacent");
      }
      walk.push_back(it->second);
    }
    corpus.walks.push_back(std::move(walk));
  }
  corpus.params.walks_per_node = 0;
  corpus.params.length = 0;
  return corpus;
}

}  // namespace cove
