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

#include <gtest/gtest.h>

#include <set>

#include "cove/error.hpp"
#include "cove/linkpred.hpp"
#include "test_graphs.hpp"

namespace cove {
namespace {

// First `m` pairs of a shuffled pair list over n nodes.
Graph random_graph_with_edges(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<Edge> all;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) all.push_back({u, v, 1.0});
  }
  Rng rng(seed);
  shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  return Graph::from_edges(n, all);
}

std::pair<NodeId, NodeId> key(NodePair p) {
  return {std::min(p.u, p.v), std::max(p.u, p.v)};
}

TEST(Split, Counts) {
  Graph g = random_graph_with_edges(30, 100, 1);
  auto s = split_edges(g, 0.05, 7);
  EXPECT_EQ(s.test_pos.size(), 5u);
  EXPECT_EQ(s.train_pos.size(), 95u);
  EXPECT_EQ(s.train_neg.size(), 95u);
  EXPECT_EQ(s.test_neg.size(), 5u);
  EXPECT_EQ(s.train_graph.n(), g.n());
  EXPECT_EQ(s.train_graph.num_edges(), 95u);
}

TEST(Split, Invariants) {
  Graph g = random_graph_with_edges(40, 300, 2);
  auto s = split_edges(g, 0.2, 3);
  std::set<std::pair<NodeId, NodeId>> pos, train_neg;
  for (auto p : s.train_pos) {
    EXPECT_TRUE(s.train_graph.has_edge(p.u, p.v));
    EXPECT_TRUE(pos.insert(key(p)).second);
  }
  for (auto p : s.test_pos) {
    EXPECT_TRUE(g.has_edge(p.u, p.v));
    EXPECT_FALSE(s.train_graph.has_edge(p.u, p.v));
    EXPECT_TRUE(pos.insert(key(p)).second);
  }
  EXPECT_EQ(pos.size(), g.num_edges());
  for (auto p : s.train_neg) {
    EXPECT_NE(p.u, p.v);
    EXPECT_FALSE(s.train_graph.has_edge(p.u, p.v));
    EXPECT_TRUE(train_neg.insert(key(p)).second);
  }
  std::set<std::pair<NodeId, NodeId>> test_neg;
  for (auto p : s.test_neg) {
    EXPECT_NE(p.u, p.v);
    EXPECT_FALSE(g.has_edge(p.u, p.v));
    EXPECT_FALSE(train_neg.count(key(p)));
    EXPECT_TRUE(test_neg.insert(key(p)).second);
  }
}

TEST(Split, DeterministicPerSeed) {
  Graph g = random_graph_with_edges(30, 100, 4);
  auto a = split_edges(g, 0.1, 9);
  auto b = split_edges(g, 0.1, 9);
  EXPECT_EQ(a.test_pos, b.test_pos);
  EXPECT_EQ(a.train_neg, b.train_neg);
  EXPECT_EQ(a.test_neg, b.test_neg);
  auto c = split_edges(g, 0.1, 10);
  EXPECT_NE(a.test_pos, c.test_pos);
}

TEST(Split, Errors) {
  EXPECT_THROW(split_edges(testing::complete_graph(10), 0.1, 0), DataError);
  Graph g = random_graph_with_edges(30, 100, 5);
  EXPECT_THROW(split_edges(g, 0.0, 0), ParameterError);
  EXPECT_THROW(split_edges(g, 1.0, 0), ParameterError);
  EXPECT_THROW(split_edges(testing::path_graph(5), 0.2, 0), DataError);
}

TEST(Hadamard, Products) {
  Embedding e;
  e.values.resize(3, 2);
  e.values << 1, 2, 3, 4, 0, 0;
  e.labels = {"a", "b", "c"};
  const std::vector<NodePair> pairs{{0, 1}, {1, 1}, {2, 0}};
  const DenseMatrix f = hadamard_features(e, pairs);
  EXPECT_EQ(f(0, 0), 3.0);
  EXPECT_EQ(f(0, 1), 8.0);
  EXPECT_EQ(f(1, 0), 9.0);
  EXPECT_EQ(f(1, 1), 16.0);
  EXPECT_EQ(f.row(2).squaredNorm(), 0.0);
}

TEST(LogReg, SeparableData) {
  DenseMatrix x(6, 1);
  x << -1, -1, -1, 1, 1, 1;
  const std::vector<int> y{0, 0, 0, 1, 1, 1};
  auto m = train_logreg(x, y);
  const Eigen::VectorXd z = m.decision(x);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(z(i) > 0.0, y[i] == 1);
  for (std::size_t i = 1; i < m.loss_history.size(); ++i) {
    EXPECT_LE(m.loss_history[i], m.loss_history[i - 1]);
  }
}

TEST(LogReg, FlippedLabelsNegateWeights) {
  Rng rng(6);
  DenseMatrix x(40, 3);
  std::vector<int> y(40), flipped(40);
  for (int i = 0; i < 40; ++i) {
    for (int c = 0; c < 3; ++c) x(i, c) = uniform01(rng) - 0.5;
    y[i] = x(i, 0) + 0.3 * x(i, 1) + 0.2 * (uniform01(rng) - 0.5) > 0 ? 1 : 0;
    flipped[i] = 1 - y[i];
  }
  auto a = train_logreg(x, y);
  auto b = train_logreg(x, flipped);
  EXPECT_LT((a.weights + b.weights).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_NEAR(a.bias, -b.bias, 1e-6);
}

TEST(LogReg, GradientMatchesFiniteDifferences) {
  Rng rng(7);
  DenseMatrix x(30, 4);
  std::vector<int> y(30);
  for (int i = 0; i < 30; ++i) {
    for (int c = 0; c < 4; ++c) x(i, c) = 2.0 * uniform01(rng) - 1.0;
    y[i] = uniform01(rng) < 0.5;
  }
  const double l2 = 0.3;
  for (int trial = 0; trial < 2; ++trial) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(4);
    double b = 0.0;
    if (trial == 1) {
      for (int c = 0; c < 4; ++c) w(c) = uniform01(rng) - 0.5;
      b = 0.4;
    }
    const Eigen::VectorXd g = logistic_gradient(w, b, x, y, l2);
    const double h = 1e-6;
    for (int c = 0; c <= 4; ++c) {
      Eigen::VectorXd wp = w, wm = w;
      double bp = b, bm = b;
      if (c < 4) {
        wp(c) += h;
        wm(c) -= h;
      } else {
        bp += h;
        bm -= h;
      }
      const double fd =
          (logistic_loss(wp, bp, x, y, l2) - logistic_loss(wm, bm, x, y, l2)) / (2 * h);
      EXPECT_LE(std::abs(fd - g(c)), 1e-6 * std::max(1.0, std::abs(g(c))));
    }
  }
}

TEST(LogReg, NeedsBothClasses) {
  DenseMatrix x(2, 1);
  x << 1, 2;
  const std::vector<int> y{1, 1};
  EXPECT_THROW(train_logreg(x, y), DataError);
}

TEST(Auc, Fixtures) {
  EXPECT_DOUBLE_EQ(auc(std::vector<double>{0.9, 0.8}, std::vector<double>{0.1, 0.2}), 1.0);
  EXPECT_DOUBLE_EQ(auc(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5, 0.5}), 0.5);
  EXPECT_DOUBLE_EQ(auc(std::vector<double>{0.9, 0.4}, std::vector<double>{0.5, 0.1}), 0.75);
  EXPECT_THROW(auc(std::vector<double>{}, std::vector<double>{1.0}), ParameterError);
}

TEST(Auc, MatchesPairEnumeration) {
  Rng rng(8);
  std::vector<double> pos(37), neg(23);
  for (auto& s : pos) s = static_cast<double>(uniform_below(rng, 10));
  for (auto& s : neg) s = static_cast<double>(uniform_below(rng, 10));
  double wins = 0.0;
  for (double p : pos) {
    for (double q : neg) wins += p > q ? 1.0 : (p == q ? 0.5 : 0.0);
  }
  EXPECT_NEAR(auc(pos, neg), wins / (37.0 * 23.0), 1e-15);
}

TEST(Pipeline, DeterministicAndInRange) {
  Rng rng(9);
  Graph g = testing::random_connected_graph(60, 0.08, rng);
  LinkPredConfig config;
  config.holdout = 0.1;
  config.seed = 4;
  config.embedding.radius = 3;
  config.embedding.walk.walks_per_node = 5;
  config.embedding.walk.length = 20;
  auto a = evaluate_link_prediction(g, config, 1);
  auto b = evaluate_link_prediction(g, config, 3);
  EXPECT_EQ(a.auc, b.auc);
  EXPECT_GE(a.auc, 0.0);
  EXPECT_LE(a.auc, 1.0);
  EXPECT_EQ(a.test_edges,
            static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(g.num_edges()))));
}

}  // namespace
}  // namespace cove
