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
#include <span>
#include <vector>

#include "cove/cooccurrence.hpp"
#include "cove/embedding.hpp"
#include "cove/graph.hpp"

namespace cove {

struct NodePair {
  NodeId u;
  NodeId v;
  friend bool operator==(const NodePair&, const NodePair&) = default;
};

struct LinkSplit {
  Graph train_graph;  // original nodes, test edges removed
  std::vector<NodePair> train_pos;
  std::vector<NodePair> test_pos;
  std::vector<NodePair> train_neg;  // non-edges of train_graph
  std::vector<NodePair> test_neg;   // non-edges of the original graph
  std::uint64_t seed = 0;
};

// Holds out round(holdout * |E|) uniformly chosen edges as test positives.
// Negatives are drawn uniformly without replacement: train negatives from the
// non-edges of the training graph (so a held-out edge can appear as a train
// negative), test negatives from the true non-edges and disjoint from the
// train negatives. Throws ParameterError unless 0 < holdout < 1, DataError
// when the graph has fewer than 20 edges or too few non-edges.
LinkSplit split_edges(const Graph& g, double holdout, std::uint64_t seed);

// Row i is the elementwise product of the rows of pairs[i].u and pairs[i].v.
DenseMatrix hadamard_features(const Embedding& e,
                              std::span<const NodePair> pairs);

struct LogRegConfig {
  std::size_t iterations = 500;
  double step = 0.1;
  double l2 = 1e-4;
};

struct LogisticModel {
  Eigen::VectorXd weights;
  double bias = 0.0;
  std::size_t iterations_run = 0;
  double final_loss = 0.0;
  std::vector<double> loss_history;  // loss after each accepted step

  Eigen::VectorXd decision(const DenseMatrix& features) const;
};

// Mean log-loss plus (l2 / 2) * |w|^2; the bias is not penalized.
double logistic_loss(const Eigen::VectorXd& w, double b, const DenseMatrix& x,
                     std::span<const int> labels, double l2);
// Gradient of logistic_loss; the last entry is d/db.
Eigen::VectorXd logistic_gradient(const Eigen::VectorXd& w, double b,
                                  const DenseMatrix& x,
                                  std::span<const int> labels, double l2);

// Full-batch gradient descent from zero on the raw features. A step that
// would raise the loss is rejected and the step size halved, so the loss
// never increases. Labels are 0/1; throws DataError unless both classes are
// present.
LogisticModel train_logreg(const DenseMatrix& features,
                           std::span<const int> labels,
                           const LogRegConfig& config = {});

// Mann-Whitney AUC: fraction of (pos, neg) pairs with pos > neg, ties 1/2.
double auc(std::span<const double> scores_pos,
           std::span<const double> scores_neg);

struct LinkPredConfig {
  double holdout = 0.05;
  std::uint64_t seed = 0;
  CoveConfig embedding;
  std::size_t reduce_dim = 0;  // 0 keeps the full embedding
  LogRegConfig logreg;
  bool shuffle_train_labels = false;  // permutation control
};

struct LinkPredResult {
  double auc = 0.0;
  std::size_t test_edges = 0;  // held-out positives; as many negatives
  LogisticModel model;
};

// Split, embed the training graph, train on Hadamard features, score the
// held-out pairs. Deterministic given the config.
LinkPredResult evaluate_link_prediction(const Graph& g,
                                        const LinkPredConfig& config,
                                        unsigned threads = 0);

}  // namespace cove
