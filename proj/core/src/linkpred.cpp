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

#include "cove/linkpred.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "cove/error.hpp"
#include "cove/random.hpp"
#include "cove/reduce.hpp"

namespace cove {
namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// `count` distinct unordered pairs {u, v}, u != v, for which `excluded` is
// false, sampled uniformly without replacement.
template <typename Excluded>
std::vector<NodePair> sample_pairs(std::size_t n, std::size_t count,
                                   std::size_t excluded_count,
                                   const Excluded& excluded, Rng& rng,
                                   const char* what) {
  const std::uint64_t all = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t available = all - std::min<std::uint64_t>(all, excluded_count);
  if (available < count) {
    throw DataError(std::string("not enough ") + what + " to sample " +
                    std::to_string(count) + " pairs (" +
                    std::to_string(available) + " available)");
  }
  std::vector<NodePair> out;
  out.reserve(count);
  if (count == 0) return out;

  if (2 * static_cast<std::uint64_t>(count) > available) {
    std::vector<NodePair> pool;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!excluded(u, v)) pool.push_back({u, v});
      }
    }
    if (pool.size() < count) {
      throw DataError(std::string("not enough ") + what + " to sample");
    }
    shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count);
    return pool;
  }

  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(count * 2);
  while (out.size() < count) {
    auto u = static_cast<NodeId>(uniform_below(rng, n));
    auto v = static_cast<NodeId>(uniform_below(rng, n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (excluded(u, v) || !chosen.insert(pair_key(u, v)).second) continue;
    out.push_back({u, v});
  }
  return out;
}

double softplus(double z) {
  return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z)));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_labels(const DenseMatrix& x, std::span<const int> labels) {
  if (static_cast<std::size_t>(x.rows()) != labels.size()) {
    throw ParameterError("feature rows and labels differ in length");
  }
}

}  // namespace

LinkSplit split_edges(const Graph& g, double holdout, std::uint64_t seed) {
  if (!(holdout > 0.0 && holdout < 1.0)) {
    throw ParameterError("holdout fraction must lie strictly between 0 and 1");
  }
  const std::size_t m = g.num_edges();
  if (m < 20) {
    throw DataError("link prediction needs at least 20 edges, graph has " +
                    std::to_string(m));
  }
  const auto test_count =
      static_cast<std::size_t>(std::llround(holdout * static_cast<double>(m)));
  if (test_count == 0 || test_count >= m) {
    throw DataError("holdout " + std::to_string(holdout) + " of " +
                    std::to_string(m) + " edges leaves an empty side");
  }

  Rng rng = stream_for(seed, 0x6c696e6bULL);
  std::vector<Edge> edges = g.edges();
  shuffle(edges.begin(), edges.end(), rng);

  LinkSplit split;
  split.seed = seed;
  std::vector<Edge> train_edges(edges.begin() + static_cast<long>(test_count),
                                edges.end());
  auto by_pair = [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  };
  std::sort(train_edges.begin(), train_edges.end(), by_pair);
  std::sort(edges.begin(), edges.begin() + static_cast<long>(test_count),
            by_pair);
  for (std::size_t i = 0; i < test_count; ++i) {
    split.test_pos.push_back({edges[i].u, edges[i].v});
  }
  for (const Edge& e : train_edges) split.train_pos.push_back({e.u, e.v});
  split.train_graph = Graph::from_edges(g.n(), train_edges, g.labels());

  const Graph& train = split.train_graph;
  split.train_neg = sample_pairs(
      g.n(), split.train_pos.size(), train.num_edges(),
      [&](NodeId u, NodeId v) { return train.has_edge(u, v); }, rng,
      "non-edges in the training graph");

  std::unordered_set<std::uint64_t> used;
  for (const NodePair& p : split.train_neg) used.insert(pair_key(p.u, p.v));
  split.test_neg = sample_pairs(
      g.n(), split.test_pos.size(), m + used.size(),
      [&](NodeId u, NodeId v) {
        return g.has_edge(u, v) || used.count(pair_key(u, v)) > 0;
      },
      rng, "non-edges for the test set");
  return split;
}

DenseMatrix hadamard_features(const Embedding& e,
                              std::span<const NodePair> pairs) {
  DenseMatrix out(static_cast<Eigen::Index>(pairs.size()), e.values.cols());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    if (u >= e.n() || v >= e.n()) {
      throw DataError("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") references a node without an embedding row");
    }
    out.row(static_cast<Eigen::Index>(i)) =
        e.values.row(u).cwiseProduct(e.values.row(v));
  }
  return out;
}

Eigen::VectorXd LogisticModel::decision(const DenseMatrix& features) const {
  if (features.cols() != weights.size()) {
    throw ParameterError("feature width does not match the model");
  }
  return (features * weights).array() + bias;
}

double logistic_loss(const Eigen::VectorXd& w, double b, const DenseMatrix& x,
                     std::span<const int> labels, double l2) {
  check_labels(x, labels);
  const Eigen::VectorXd z = (x * w).array() + b;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    loss += softplus(z(i)) - (labels[static_cast<std::size_t>(i)] ? z(i) : 0.0);
  }
  return loss / static_cast<double>(z.size()) + 0.5 * l2 * w.squaredNorm();
}

Eigen::VectorXd logistic_gradient(const Eigen::VectorXd& w, double b,
                                  const DenseMatrix& x,
                                  std::span<const int> labels, double l2) {
  check_labels(x, labels);
  const Eigen::VectorXd z = (x * w).array() + b;
  Eigen::VectorXd residual(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    residual(i) = sigmoid(z(i)) - (labels[static_cast<std::size_t>(i)] ? 1.0 : 0.0);
  }
  const double m = static_cast<double>(z.size());
  Eigen::VectorXd grad(w.size() + 1);
  grad.head(w.size()) = x.transpose() * residual / m + l2 * w;
  grad(w.size()) = residual.sum() / m;
  return grad;
}

LogisticModel train_logreg(const DenseMatrix& features,
                           std::span<const int> labels,
                           const LogRegConfig& config) {
  check_labels(features, labels);
  const auto pos = std::count_if(labels.begin(), labels.end(),
                                 [](int y) { return y != 0; });
  if (pos == 0 || static_cast<std::size_t>(pos) == labels.size()) {
    throw DataError("logistic regression needs examples of both classes");
  }
  LogisticModel model;
  model.weights = Eigen::VectorXd::Zero(features.cols());
  const DenseMatrix& x = features;
  double loss = logistic_loss(model.weights, 0.0, x, labels, config.l2);
  double step = config.step;
  for (std::size_t it = 0; it < config.iterations; ++it) {
    const Eigen::VectorXd grad =
        logistic_gradient(model.weights, model.bias, x, labels, config.l2);
    const Eigen::VectorXd gw = grad.head(model.weights.size());
    const double gb = grad(model.weights.size());
    bool accepted = false;
    for (int halvings = 0; halvings < 60 && !accepted; ++halvings) {
      Eigen::VectorXd w = model.weights - step * gw;
      const double b = model.bias - step * gb;
      const double candidate = logistic_loss(w, b, x, labels, config.l2);
      if (candidate <= loss) {
        model.weights = std::move(w);
        model.bias = b;
        loss = candidate;
        accepted = true;
      } else {
        step *= 0.5;
      }
    }
    if (!accepted) break;
    model.iterations_run = it + 1;
    model.loss_history.push_back(loss);
  }
  model.final_loss = loss;
  return model;
}

double auc(std::span<const double> scores_pos,
           std::span<const double> scores_neg) {
  if (scores_pos.empty() || scores_neg.empty()) {
    throw ParameterError("AUC needs at least one positive and one negative score");
  }
  struct Scored {
    double score;
    bool positive;
  };
  std::vector<Scored> all;
  all.reserve(scores_pos.size() + scores_neg.size());
  for (double s : scores_pos) all.push_back({s, true});
  for (double s : scores_neg) all.push_back({s, false});
  std::sort(all.begin(), all.end(),
            [](const Scored& a, const Scored& b) { return a.score < b.score; });
  // Sum of (1-based, tie-averaged) ranks of the positives.
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j].score == all[i].score) ++j;
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      if (all[k].positive) rank_sum += mid_rank;
    }
    i = j;
  }
  const double p = static_cast<double>(scores_pos.size());
  const double q = static_cast<double>(scores_neg.size());
  return (rank_sum - p * (p + 1.0) / 2.0) / (p * q);
}

LinkPredResult evaluate_link_prediction(const Graph& g,
                                        const LinkPredConfig& config,
                                        unsigned threads) {
  const LinkSplit split = split_edges(g, config.holdout, config.seed);
  Embedding emb =
      cove_hellinger_embedding(split.train_graph, config.embedding, threads);
  if (config.reduce_dim > 0) {
    const std::size_t d = std::min({config.reduce_dim, emb.n(), emb.d()});
    emb = svd_reduce(emb, d, config.seed);
  }

  std::vector<NodePair> train_pairs = split.train_pos;
  train_pairs.insert(train_pairs.end(), split.train_neg.begin(),
                     split.train_neg.end());
  std::vector<int> labels(split.train_pos.size(), 1);
  labels.resize(train_pairs.size(), 0);
  if (config.shuffle_train_labels) {
    Rng rng = stream_for(config.seed, 0x73687566ULL);
    shuffle(labels.begin(), labels.end(), rng);
  }

  LinkPredResult result;
  result.model =
      train_logreg(hadamard_features(emb, train_pairs), labels, config.logreg);
  const Eigen::VectorXd pos =
      result.model.decision(hadamard_features(emb, split.test_pos));
  const Eigen::VectorXd neg =
      result.model.decision(hadamard_features(emb, split.test_neg));
  result.auc = auc({pos.data(), static_cast<std::size_t>(pos.size())},
                   {neg.data(), static_cast<std::size_t>(neg.size())});
  result.test_edges = split.test_pos.size();
  return result;
}

}  // namespace cove
