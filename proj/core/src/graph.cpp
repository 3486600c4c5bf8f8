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

#include "cove/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "cove/error.hpp"
#include "cove/text_io.hpp"

namespace cove {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw ParameterError("Graph: label table size does not match n");
  }
  struct Half {
    NodeId to;
    double w;
  };
  std::vector<std::vector<Half>> adj(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ParameterError("Graph: edge endpoint out of range");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ParameterError("Graph: edge weight must be positive and finite");
    }
    if (e.u == e.v) continue;
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& row = adj[v];
    std::stable_sort(row.begin(), row.end(),
                     [](const Half& a, const Half& b) { return a.to < b.to; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (out > 0 && row[out - 1].to == row[i].to) {
        row[out - 1].w += row[i].w;
      } else {
        row[out++] = row[i];
      }
    }
    row.resize(out);
    g.offsets_[v + 1] = g.offsets_[v] + out;
  }
  g.neighbors_.reserve(g.offsets_.back());
  g.weights_.reserve(g.offsets_.back());
  for (const auto& row : adj) {
    for (const Half& h : row) {
      g.neighbors_.push_back(h.to);
      g.weights_.push_back(h.w);
    }
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  g.labels_ = std::move(labels);
  return g;
}

double Graph::weighted_degree(NodeId v) const {
  double s = 0.0;
  for (double w : weights(v)) s += w;
  return s;
}

double Graph::total_weight() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s / 2.0;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::edge_weight(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return 0.0;
  return weights(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < n(); ++u) {
    auto nb = neighbors(u);
    auto ws = weights(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (u < nb[k]) out.push_back({u, nb[k], ws[k]});
    }
  }
  return out;
}

EdgeListParse parse_edge_list(std::istream& in) {
  struct RawEdge {
    std::string u, v;
    double w;
  };
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(lineno, "expected 'u v' or 'u v w', got " +
                                   std::to_string(fields.size()) + " fields");
    }
    double w = 1.0;
    if (fields.size() == 3) {
      auto parsed = parse_double(fields[2]);
      if (!parsed) {
        throw ParseError(lineno, "non-numeric weight '" +
                                     std::string(fields[2]) + "'");
      }
      if (!(*parsed > 0.0) || !std::isfinite(*parsed)) {
        throw ParseError(lineno, "weight must be a positive finite number");
      }
      w = *parsed;
    }
    raw.push_back({std::string(fields[0]), std::string(fields[1]), w});
  }

  std::vector<std::string> labels;
  {
    std::unordered_map<std::string, char> seen;
    for (const auto& e : raw) {
      if (seen.emplace(e.u, 0).second) labels.push_back(e.u);
      if (seen.emplace(e.v, 0).second) labels.push_back(e.v);
    }
  }
  const bool numeric = std::all_of(labels.begin(), labels.end(), [](auto& s) {
    auto v = parse_int(s);
    return v && *v >= 0;
  });
  if (numeric) {
    std::sort(labels.begin(), labels.end(), [](auto& a, auto& b) {
      return *parse_int(a) < *parse_int(b);
    });
  } else {
    std::sort(labels.begin(), labels.end());
  }
  std::unordered_map<std::string, NodeId> id;
  id.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    id.emplace(labels[i], static_cast<NodeId>(i));
  }

  EdgeListParse result;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    const NodeId u = id.at(e.u), v = id.at(e.v);
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    edges.push_back({u, v, e.w});
  }
  const std::size_t n = labels.size();
  result.graph = Graph::from_edges(n, edges, std::move(labels));
  result.duplicates_merged = edges.size() - result.graph.num_edges();
  return result;
}

EdgeListParse read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (NodeId u = 0; u < g.n(); ++u) {
    if (g.degree(u) == 0) {
      out << g.label(u) << ' ' << g.label(u) << '\n';
      continue;
    }
    auto nb = g.neighbors(u);
    auto ws = g.weights(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] < u) continue;
      out << g.label(u) << ' ' << g.label(nb[k]);
      if (ws[k] != 1.0) out << ' ' << format_double(ws[k]);
      out << '\n';
    }
  }
}

TransitionMatrix row_normalized_adjacency(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> ptr(n + 1, 0);
  std::vector<NodeId> cols;
  std::vector<double> vals;
  cols.reserve(2 * g.num_edges());
  vals.reserve(2 * g.num_edges());
  for (NodeId v = 0; v < n; ++v) {
    const double deg = g.weighted_degree(v);
    auto nb = g.neighbors(v);
    auto ws = g.weights(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      cols.push_back(nb[k]);
      vals.push_back(ws[k] / deg);
    }
    ptr[v + 1] = cols.size();
  }
  return TransitionMatrix(n, std::move(ptr), std::move(cols), std::move(vals));
}

std::vector<NodeId> connected_components(const Graph& g) {
  constexpr NodeId kUnset = static_cast<NodeId>(-1);
  std::vector<NodeId> label(g.n(), kUnset);
  std::vector<NodeId> stack;
  NodeId next = 0;
  for (NodeId s = 0; s < g.n(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId u : g.neighbors(v)) {
        if (label[u] == kUnset) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<NodeId> largest_component(const Graph& g) {
  auto labels = connected_components(g);
  if (labels.empty()) return {};
  const NodeId count = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::size_t> sizes(count, 0);
  for (NodeId l : labels) ++sizes[l];
  const NodeId best = static_cast<NodeId>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < g.n(); ++v) {
    if (labels[v] == best) nodes.push_back(v);
  }
  return nodes;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr NodeId kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(g.n(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    remap[nodes[i]] = static_cast<NodeId>(i);
    labels.push_back(g.label(nodes[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (remap[e.u] != kAbsent && remap[e.v] != kAbsent) {
      edges.push_back({remap[e.u], remap[e.v], e.weight});
    }
  }
  const std::size_t n = nodes.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

}  // namespace cove
