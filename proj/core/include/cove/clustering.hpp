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
#include <utility>
#include <vector>

#include "cove/sparse.hpp"

namespace cove {

// A family of node sets (possibly overlapping) plus an outlier set over the
// universe 0..universe_n-1. Every node lies in at least one cluster or in the
// outlier set, never in both.
struct Clustering {
  std::vector<std::vector<NodeId>> clusters;  // each sorted, unique, nonempty
  std::vector<NodeId> outliers;               // sorted, unique
  std::size_t universe_n = 0;

  // One label per node; negative labels mark outliers. Clusters are ordered
  // by label.
  static Clustering from_labels(std::span<const long long> labels);

  bool is_partition() const;
  // Throws DataError naming the first violated invariant.
  void validate() const;
};

// |a ∩ b| / |a ∪ b| over sorted sets; two empty sets score 1.
double jaccard(std::span<const NodeId> a, std::span<const NodeId> b);

// Size-weighted mean over clusters of `from` of the best Jaccard match in
// `to`. A best match over an empty family is 0. When `from` has no clusters
// the score is 1 if `to` has none either and 0 otherwise.
double one_sided_weighted(const Clustering& from, const Clustering& to);

// |O1|/|V| * J(O1, O2) + (|V| - |O1|)/|V| * one_sided_weighted(from, to).
double outlier_aware_one_sided(const Clustering& from, const Clustering& to);

// Symmetric mean of the two outlier-aware one-sided scores.
double f_star_wo(const Clustering& a, const Clustering& b);

// Adjusted mutual information with the arithmetic-mean normalizer and the
// hypergeometric expected MI. Identical partitions (up to relabelling) score
// exactly 1; any other 0/0 normalizer scores 0. Throws DataError for
// clusterings that are not partitions without outliers.
double ami(const Clustering& a, const Clustering& b);

// Clustering file: "node_label cluster_id" lines, cluster_id -1 for outliers;
// a node may be listed several times.
struct ClusteringFile {
  std::vector<std::pair<std::string, long long>> assignments;
};

ClusteringFile read_clustering(std::istream& in);
ClusteringFile read_clustering_file(const std::string& path);

// Distinct labels of the file, in the same order the edge-list reader uses
// (numeric when all labels are nonnegative integers, lexicographic
// otherwise).
std::vector<std::string> label_universe(const ClusteringFile& file);

// Resolves labels against `universe`. Throws DataError for unknown labels,
// nodes never listed, or nodes listed both as outlier and in a cluster.
Clustering to_clustering(const ClusteringFile& file,
                         const std::vector<std::string>& universe);

void write_clustering(std::ostream& out, const Clustering& c,
                      const std::vector<std::string>& labels);

}  // namespace cove
