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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cove/sparse.hpp"

namespace cove {

struct Edge {
  NodeId u;
  NodeId v;
  double weight = 1.0;
};

// Undirected, weighted, simple graph over nodes 0..n-1. Adjacency is stored
// symmetrically in CSR form with sorted neighbor lists. Each node carries the
// label it had in the source file (defaults to its decimal id).
class Graph {
 public:
  Graph() = default;

  // Builds a simple graph: self-loops are dropped, parallel edges merge by
  // summing weights. Throws ParameterError on out-of-range endpoints or
  // non-positive weights. `labels` must be empty or have size n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::span<const double> weights(NodeId v) const {
    return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  double weighted_degree(NodeId v) const;
  double total_weight() const;

  bool has_edge(NodeId u, NodeId v) const;
  // Zero when absent.
  double edge_weight(NodeId u, NodeId v) const;

  // Every undirected edge once, with u < v, in (u, v) order.
  std::vector<Edge> edges() const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<double> weights_;
  std::vector<std::string> labels_;
};

using TransitionMatrix = CsrMatrix;

struct EdgeListParse {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
};

// Reads "u v [w]" lines; '#' lines and blank lines are skipped. Labels are
// mapped to dense ids in numeric order when every label is a nonnegative
// integer and in lexicographic order otherwise. Throws ParseError with the
// offending line number.
EdgeListParse parse_edge_list(std::istream& in);
EdgeListParse read_edge_list_file(const std::string& path);

// Writes one line per undirected edge using node labels; weights are omitted
// when exactly 1 and written with 17 significant digits otherwise. Isolated
// nodes are written as a self-loop line so a re-parse keeps them.
void write_edge_list(std::ostream& out, const Graph& g);

// Row-stochastic weighted adjacency; isolated nodes get an empty row.
TransitionMatrix row_normalized_adjacency(const Graph& g);

// Component label per node, numbered 0.. in order of the smallest node id.
std::vector<NodeId> connected_components(const Graph& g);

// Nodes of the largest connected component (ties: lowest component label),
// in ascending id order.
std::vector<NodeId> largest_component(const Graph& g);

// Subgraph induced by `nodes` (ascending), relabelled 0..|nodes|-1 and
// keeping the original labels.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace cove
