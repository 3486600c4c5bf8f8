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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cove/graph.hpp"
#include "cove/random.hpp"

namespace cove {

using Walk = std::vector<NodeId>;

struct WalkParams {
  std::size_t walks_per_node = 10;  // gamma
  std::size_t length = 40;          // ell, in nodes
  double p = 1.0;                   // return
  double q = 1.0;                   // in-out
  std::uint64_t seed = 0;

  // Throws ParameterError unless walks_per_node, length >= 1 and p, q > 0.
  void validate() const;
};

struct WalkCorpus {
  std::vector<Walk> walks;
  WalkParams params;
  std::size_t graph_n = 0;
};

// DeepWalk walk: each step moves to a neighbor with probability proportional
// to the edge weight. Stops early only at an isolated node.
Walk sample_standard_walk(const Graph& g, NodeId start, std::size_t steps,
                          Rng& rng);

// node2vec walk. The first step follows the standard law; afterwards a
// neighbor u of the current node is weighted by w(v,u) times 1/p when u is
// the previous node, 1 when u is adjacent to it, and 1/q otherwise.
Walk sample_biased_walk(const Graph& g, NodeId start, std::size_t steps,
                        double p, double q, Rng& rng);

// gamma walks from every node, ordered by (start node, walk index). Walk j
// from node v draws from stream_for(seed, v, j), so the corpus is identical
// for every `threads` value.
WalkCorpus build_corpus(const Graph& g, const WalkParams& params,
                        unsigned threads = 0);

void write_corpus(std::ostream& out, const WalkCorpus& corpus, const Graph& g);

// Reads a corpus written against `g`; every consecutive pair must be an edge.
// Generation parameters are not stored in the file, so `params` keeps its
// defaults except that walks_per_node and length are left 0.
WalkCorpus read_corpus(std::istream& in, const Graph& g);

}  // namespace cove
