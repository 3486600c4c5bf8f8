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

#include "cove/kmeans.hpp"

#include <limits>
#include <string>

#include "cove/error.hpp"
#include "cove/parallel.hpp"
#include "cove/random.hpp"

namespace cove {
namespace {

struct Run {
  std::vector<NodeId> labels;
  DenseMatrix centers;
  double cost = std::numeric_limits<double>::infinity();
  std::vector<double> history;
};

DenseMatrix plus_plus_seeds(const DenseMatrix& x, std::size_t k, Rng& rng) {
  const Eigen::Index n = x.rows();
  DenseMatrix centers(static_cast<Eigen::Index>(k), x.cols());
  Eigen::Index first = static_cast<Eigen::Index>(
      uniform_below(rng, static_cast<std::uint64_t>(n)));
  centers.row(0) = x.row(first);
  Eigen::VectorXd d2 = (x.rowwise() - x.row(first)).rowwise().squaredNorm();
  for (std::size_t c = 1; c < k; ++c) {
    const double total = d2.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      double r = uniform01(rng) * total;
      pick = n - 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        r -= d2(i);
        if (r < 0.0 && d2(i) > 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      // All points coincide with chosen centers.
      pick = static_cast<Eigen::Index>(c % static_cast<std::size_t>(n));
    }
    centers.row(static_cast<Eigen::Index>(c)) = x.row(pick);
    d2 = d2.cwiseMin((x.rowwise() - x.row(pick)).rowwise().squaredNorm());
  }
  return centers;
}

// Assigns every point to its nearest center; returns the cost.
double assign(const DenseMatrix& x, const DenseMatrix& centers,
              std::vector<NodeId>& labels, Eigen::VectorXd& dist2) {
  double cost = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    NodeId arg = 0;
    for (Eigen::Index c = 0; c < centers.rows(); ++c) {
      const double d = (x.row(i) - centers.row(c)).squaredNorm();
      if (d < best) {
        best = d;
        arg = static_cast<NodeId>(c);
      }
    }
    labels[static_cast<std::size_t>(i)] = arg;
    dist2(i) = best;
    cost += best;
  }
  return cost;
}

Run lloyd(const DenseMatrix& x, const KMeansParams& params, Rng rng) {
  const Eigen::Index n = x.rows();
  const auto k = static_cast<Eigen::Index>(params.k);
  Run run;
  run.centers = plus_plus_seeds(x, params.k, rng);
  run.labels.assign(static_cast<std::size_t>(n), 0);
  Eigen::VectorXd dist2(n);
  std::vector<NodeId> previous;

  for (std::size_t it = 0; it < std::max<std::size_t>(1, params.max_iters);
       ++it) {
    double cost = assign(x, run.centers, run.labels, dist2);

    // Repair empty clusters by moving in the farthest point of a cluster
    // that keeps at least one member.
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    for (NodeId l : run.labels) ++sizes[l];
    for (Eigen::Index c = 0; c < k; ++c) {
      if (sizes[static_cast<std::size_t>(c)] > 0) continue;
      Eigen::Index far = -1;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (sizes[run.labels[static_cast<std::size_t>(i)]] < 2) continue;
        if (far < 0 || dist2(i) > dist2(far)) far = i;
      }
      if (far < 0) break;
      --sizes[run.labels[static_cast<std::size_t>(far)]];
      run.labels[static_cast<std::size_t>(far)] = static_cast<NodeId>(c);
      sizes[static_cast<std::size_t>(c)] = 1;
      run.centers.row(c) = x.row(far);
      cost -= dist2(far);
      dist2(far) = 0.0;
    }
    run.history.push_back(cost);

    const bool stable = run.labels == previous;
    const bool small_gain =
        run.history.size() >= 2 &&
        run.history[run.history.size() - 2] - cost <= params.tol * cost;
    run.cost = cost;
    if (stable || small_gain) break;
    previous = run.labels;

    run.centers.setZero();
    for (Eigen::Index i = 0; i < n; ++i) {
      run.centers.row(run.labels[static_cast<std::size_t>(i)]) += x.row(i);
    }
    for (Eigen::Index c = 0; c < k; ++c) {
      run.centers.row(c) /= static_cast<double>(sizes[static_cast<std::size_t>(c)]);
    }
  }
  return run;
}

}  // namespace

KMeansResult kmeans(const DenseMatrix& points, const KMeansParams& params,
                    unsigned threads) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (params.k < 1 || params.k > n) {
    throw ParameterError("k-means needs 1 <= k <= n (k = " +
                         std::to_string(params.k) + ", n = " +
                         std::to_string(n) + ")");
  }
  if (params.restarts < 1) throw ParameterError("k-means restarts must be >= 1");

  std::vector<Run> runs(params.restarts);
  parallel_for_chunks(params.restarts, threads,
                      [&](std::size_t begin, std::size_t end) {
                        for (std::size_t r = begin; r < end; ++r) {
                          runs[r] = lloyd(points, params,
                                          stream_for(params.seed, r));
                        }
                      });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].cost < runs[best].cost) best = r;
  }

  KMeansResult out;
  out.best_restart = best;
  out.cost = runs[best].cost;
  out.cost_history = std::move(runs[best].history);
  out.centers = std::move(runs[best].centers);
  out.labels = std::move(runs[best].labels);
  std::vector<long long> labels(out.labels.begin(), out.labels.end());
  out.clustering = Clustering::from_labels(labels);
  return out;
}

}  // namespace cove
