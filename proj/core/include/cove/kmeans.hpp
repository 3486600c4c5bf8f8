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
#include <vector>

#include "cove/clustering.hpp"
#include "cove/embedding.hpp"

namespace cove {

struct KMeansParams {
  std::size_t k = 2;
  std::size_t restarts = 10;
  std::size_t max_iters = 300;
  // Lloyd stops once an iteration lowers the cost by at most tol * cost.
  double tol = 1e-4;
  std::uint64_t seed = 0;
};

struct KMeansResult {
  Clustering clustering;       // partition, no outliers
  std::vector<NodeId> labels;  // cluster index per point
  DenseMatrix centers;         // k x d
  double cost = 0.0;           // within-cluster sum of squares
  // Cost after every assignment step of the winning restart.
  std::vector<double> cost_history;
  std::size_t best_restart = 0;
};

// Lloyd iterations from k-means++ seeding, best of `restarts` runs by cost
// (ties: lowest restart index). Restart r uses stream_for(seed, r), so the
// result does not depend on `threads`. Assignment ties go to the lowest
// center index; an emptied cluster is reseeded with the point farthest from
// its center. Throws ParameterError unless 1 <= k <= number of points.
KMeansResult kmeans(const DenseMatrix& points, const KMeansParams& params,
                    unsigned threads = 0);
inline KMeansResult kmeans(const Embedding& e, const KMeansParams& params,
                           unsigned threads = 0) {
  return kmeans(e.values, params, threads);
}

}  // namespace cove
