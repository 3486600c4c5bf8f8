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

#include "cove/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>

#include "cove/error.hpp"
#include "cove/text_io.hpp"

namespace cove {
namespace {

std::size_t intersection_size(std::span<const NodeId> a,
                              std::span<const NodeId> b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

void require_same_universe(const Clustering& a, const Clustering& b) {
  if (a.universe_n != b.universe_n) {
    throw DataError("clusterings are over different universes (" +
                    std::to_string(a.universe_n) + " vs " +
                    std::to_string(b.universe_n) + " nodes)");
  }
}

void require_partition(const Clustering& c) {
  if (!c.outliers.empty() || !c.is_partition()) {
    throw DataError(
        "AMI is only defined for partitions without outliers; use the "
        "fstar metric (f_star_wo) for overlapping or outlier-bearing "
        "clusterings");
  }
}

std::vector<std::vector<NodeId>> canonical(const Clustering& c) {
  auto clusters = c.clusters;
  std::sort(clusters.begin(), clusters.end());
  return clusters;
}

}  // namespace

Clustering Clustering::from_labels(std::span<const long long> labels) {
  Clustering c;
  c.universe_n = labels.size();
  std::map<long long, std::vector<NodeId>> by_label;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0) {
      c.outliers.push_back(static_cast<NodeId>(v));
    } else {
      by_label[labels[v]].push_back(static_cast<NodeId>(v));
    }
  }
  for (auto& [label, members] : by_label) c.clusters.push_back(std::move(members));
  return c;
}

bool Clustering::is_partition() const {
  std::vector<char> seen(universe_n, 0);
  for (const auto& cl : clusters) {
    for (NodeId v : cl) {
      if (v >= universe_n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

void Clustering::validate() const {
  std::vector<char> covered(universe_n, 0);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto& cl = clusters[i];
    if (cl.empty()) throw DataError("cluster " + std::to_string(i) + " is empty");
    for (std::size_t k = 0; k < cl.size(); ++k) {
      if (cl[k] >= universe_n) throw DataError("cluster member out of range");
      if (k > 0 && cl[k - 1] >= cl[k]) {
        throw DataError("cluster members must be sorted and unique");
      }
      covered[cl[k]] = 1;
    }
  }
  for (std::size_t k = 0; k < outliers.size(); ++k) {
    const NodeId v = outliers[k];
    if (v >= universe_n) throw DataError("outlier out of range");
    if (k > 0 && outliers[k - 1] >= v) {
      throw DataError("outliers must be sorted and unique");
    }
    if (covered[v]) {
      throw DataError("node " + std::to_string(v) +
                      " is both an outlier and a cluster member");
    }
    covered[v] = 1;
  }
  for (std::size_t v = 0; v < universe_n; ++v) {
    if (!covered[v]) {
      throw DataError("node " + std::to_string(v) +
                      " is neither clustered nor an outlier");
    }
  }
}

double jaccard(std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.empty() && b.empty()) return 1.0;
  const std::size_t inter = intersection_size(a, b);
  return static_cast<double>(inter) /
         static_cast<double>(a.size() + b.size() - inter);
}

double one_sided_weighted(const Clustering& from, const Clustering& to) {
  require_same_universe(from, to);
  if (from.clusters.empty()) return to.clusters.empty() ? 1.0 : 0.0;

  // node -> clusters of `to` containing it
  std::vector<std::vector<std::uint32_t>> member_of(to.universe_n);
  for (std::size_t j = 0; j < to.clusters.size(); ++j) {
    for (NodeId v : to.clusters[j]) {
      member_of[v].push_back(static_cast<std::uint32_t>(j));
    }
  }
  std::vector<std::size_t> overlap(to.clusters.size(), 0);
  std::vector<std::uint32_t> touched;
  double weighted = 0.0, total = 0.0;
  for (const auto& cl : from.clusters) {
    touched.clear();
    for (NodeId v : cl) {
      for (std::uint32_t j : member_of[v]) {
        if (overlap[j]++ == 0) touched.push_back(j);
      }
    }
    double best = 0.0;
    for (std::uint32_t j : touched) {
      const double inter = static_cast<double>(overlap[j]);
      const double uni =
          static_cast<double>(cl.size() + to.clusters[j].size()) - inter;
      best = std::max(best, inter / uni);
      overlap[j] = 0;
    }
    weighted += static_cast<double>(cl.size()) * best;
    total += static_cast<double>(cl.size());
  }
  return weighted / total;
}

double outlier_aware_one_sided(const Clustering& from, const Clustering& to) {
  require_same_universe(from, to);
  if (from.universe_n == 0) return 1.0;
  const double n = static_cast<double>(from.universe_n);
  const double w_out = static_cast<double>(from.outliers.size()) / n;
  const double outlier_term =
      w_out > 0.0 ? w_out * jaccard(from.outliers, to.outliers) : 0.0;
  const double w_in = (n - static_cast<double>(from.outliers.size())) / n;
  const double cluster_term =
      w_in > 0.0 ? w_in * one_sided_weighted(from, to) : 0.0;
  return outlier_term + cluster_term;
}

double f_star_wo(const Clustering& a, const Clustering& b) {
  return 0.5 * outlier_aware_one_sided(a, b) +
         0.5 * outlier_aware_one_sided(b, a);
}

double ami(const Clustering& a, const Clustering& b) {
  require_same_universe(a, b);
  require_partition(a);
  require_partition(b);
  if (canonical(a) == canonical(b)) return 1.0;

  const std::size_t n = a.universe_n;
  std::vector<std::uint32_t> label_b(n, 0);
  for (std::size_t j = 0; j < b.clusters.size(); ++j) {
    for (NodeId v : b.clusters[j]) label_b[v] = static_cast<std::uint32_t>(j);
  }
  const double N = static_cast<double>(n);
  std::vector<double> row_sums, col_sums(b.clusters.size());
  for (std::size_t j = 0; j < b.clusters.size(); ++j) {
    col_sums[j] = static_cast<double>(b.clusters[j].size());
  }

  double mi = 0.0;
  std::vector<std::size_t> counts(b.clusters.size(), 0);
  for (const auto& cl : a.clusters) {
    const double ai = static_cast<double>(cl.size());
    row_sums.push_back(ai);
    for (NodeId v : cl) ++counts[label_b[v]];
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] == 0) continue;
      const double nij = static_cast<double>(counts[j]);
      mi += (nij / N) * std::log(N * nij / (ai * col_sums[j]));
      counts[j] = 0;
    }
  }

  auto entropy = [N](const std::vector<double>& sizes) {
    double h = 0.0;
    for (double s : sizes) {
      if (s > 0.0) h -= (s / N) * std::log(s / N);
    }
    return h;
  };
  const double ha = entropy(row_sums), hb = entropy(col_sums);

  // Expected MI under the hypergeometric (fixed marginals) model.
  const double lg_n = std::lgamma(N + 1.0);
  double emi = 0.0;
  for (double ai : row_sums) {
    for (double bj : col_sums) {
      const double lo = std::max(1.0, ai + bj - N);
      const double hi = std::min(ai, bj);
      const double log_const = std::lgamma(ai + 1.0) + std::lgamma(bj + 1.0) +
                               std::lgamma(N - ai + 1.0) +
                               std::lgamma(N - bj + 1.0) - lg_n;
      for (double nij = lo; nij <= hi; nij += 1.0) {
        const double log_p = log_const - std::lgamma(nij + 1.0) -
                             std::lgamma(ai - nij + 1.0) -
                             std::lgamma(bj - nij + 1.0) -
                             std::lgamma(N - ai - bj + nij + 1.0);
        emi += (nij / N) * std::log(N * nij / (ai * bj)) * std::exp(log_p);
      }
    }
  }

  const double denom = 0.5 * (ha + hb) - emi;
  if (std::abs(denom) < 1e-15) return 0.0;
  return (mi - emi) / denom;
}

ClusteringFile read_clustering(std::istream& in) {
  ClusteringFile file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() != 2) {
      throw ParseError(lineno, "expected 'node_label cluster_id'");
    }
    auto id = parse_int(fields[1]);
    if (!id || *id < -1) {
      throw ParseError(lineno, "cluster id must be an integer >= -1, got '" +
                                   std::string(fields[1]) + "'");
    }
    file.assignments.emplace_back(std::string(fields[0]), *id);
  }
  return file;
}

ClusteringFile read_clustering_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open clustering '" + path + "'");
  return read_clustering(in);
}

std::vector<std::string> label_universe(const ClusteringFile& file) {
  std::vector<std::string> labels;
  labels.reserve(file.assignments.size());
  for (const auto& [label, id] : file.assignments) labels.push_back(label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const bool numeric = std::all_of(labels.begin(), labels.end(), [](auto& s) {
    auto v = parse_int(s);
    return v && *v >= 0;
  });
  if (numeric) {
    std::sort(labels.begin(), labels.end(), [](auto& x, auto& y) {
      return *parse_int(x) < *parse_int(y);
    });
  }
  return labels;
}

Clustering to_clustering(const ClusteringFile& file,
                         const std::vector<std::string>& universe) {
  std::unordered_map<std::string, NodeId> id;
  id.reserve(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    id.emplace(universe[i], static_cast<NodeId>(i));
  }
  std::map<long long, std::vector<NodeId>> by_cluster;
  std::vector<NodeId> outliers;
  for (const auto& [label, cid] : file.assignments) {
    auto it = id.find(label);
    if (it == id.end()) {
      throw DataError("clustering mentions node '" + label +
                      "' outside the universe");
    }
    (cid < 0 ? outliers : by_cluster[cid]).push_back(it->second);
  }
  Clustering c;
  c.universe_n = universe.size();
  for (auto& [cid, members] : by_cluster) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    c.clusters.push_back(std::move(members));
  }
  std::sort(outliers.begin(), outliers.end());
  outliers.erase(std::unique(outliers.begin(), outliers.end()), outliers.end());
  c.outliers = std::move(outliers);
  try {
    c.validate();
  } catch (const DataError& e) {
    // Re-raise with labels rather than dense ids.
    std::vector<char> covered(c.universe_n, 0);
    for (const auto& cl : c.clusters) {
      for (NodeId v : cl) covered[v] = 1;
    }
    for (NodeId v : c.outliers) {
      if (covered[v]) {
        throw DataError("node '" + universe[v] +
                        "' is listed both as outlier and in a cluster");
      }
      covered[v] = 1;
    }
    for (std::size_t v = 0; v < c.universe_n; ++v) {
      if (!covered[v]) {
        throw DataError("node '" + universe[v] +
                        "' does not appear in the clustering");
      }
    }
    throw;
  }
  return c;
}

void write_clustering(std::ostream& out, const Clustering& c,
                      const std::vector<std::string>& labels) {
  std::vector<std::pair<NodeId, long long>> rows;
  for (std::size_t j = 0; j < c.clusters.size(); ++j) {
    for (NodeId v : c.clusters[j]) {
      rows.emplace_back(v, static_cast<long long>(j));
    }
  }
  for (NodeId v : c.outliers) rows.emplace_back(v, -1);
  std::sort(rows.begin(), rows.end());
  for (const auto& [v, cid] : rows) out << labels[v] << ' ' << cid << '\n';
}

}  // namespace cove
