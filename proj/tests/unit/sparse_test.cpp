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

#include <Eigen/Dense>

#include "cove/graph.hpp"
#include "cove/sparse.hpp"
#include "test_graphs.hpp"

namespace cove {
namespace {

Eigen::MatrixXd dense(const CsrMatrix& m) {
  const auto flat = m.to_dense();
  Eigen::MatrixXd out(m.n(), m.n());
  for (std::size_t r = 0; r < m.n(); ++r) {
    for (std::size_t c = 0; c < m.n(); ++c) out(r, c) = flat[r * m.n() + c];
  }
  return out;
}

TEST(Csr, MultiplyMatchesDenseProduct) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    Graph g = testing::random_connected_graph(12, 0.25, rng, true);
    const auto p = row_normalized_adjacency(g);
    const Eigen::MatrixXd dp = dense(p);
    for (unsigned threads : {1u, 3u}) {
      const Eigen::MatrixXd prod = dense(p.multiply(p, threads));
      EXPECT_LT((prod - dp * dp).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(Csr, ThreadCountDoesNotChangeResult) {
  Rng rng(4);
  Graph g = testing::random_connected_graph(60, 0.1, rng, true);
  const auto p = row_normalized_adjacency(g);
  const auto a = p.multiply(p, 1);
  const auto b = p.multiply(p, 4);
  EXPECT_EQ(a.row_ptr(), b.row_ptr());
  EXPECT_EQ(a.cols(), b.cols());
  EXPECT_EQ(a.values(), b.values());
}

TEST(Csr, TransposeAndAddScaled) {
  Graph g = testing::make_graph(3, {{0, 1}, {1, 2}});
  const auto p = row_normalized_adjacency(g);
  const Eigen::MatrixXd dp = dense(p);
  EXPECT_EQ(dense(p.transpose()), dp.transpose());
  const auto sum = p.add_scaled(2.0, p.transpose(), -1.0);
  EXPECT_LT((dense(sum) - (2.0 * dp - dp.transpose())).cwiseAbs().maxCoeff(),
            1e-15);
  EXPECT_FALSE(p.is_symmetric(1e-12));
  EXPECT_TRUE(p.add_scaled(1.0, p.transpose(), 1.0).is_symmetric(1e-12));
}

TEST(Csr, NormalizeRows) {
  // rows: (2, 0, 2), empty, (0, 5, 0)
  CsrMatrix m(3, {0, 2, 2, 3}, {0, 2, 1}, {2.0, 2.0, 5.0});
  CsrMatrix with = m;
  with.normalize_rows(true);
  EXPECT_DOUBLE_EQ(with.at(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(with.at(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(with.at(0, 2), 0.5);
  EXPECT_DOUBLE_EQ(with.at(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(with.row_sum(1), 1.0);
  EXPECT_DOUBLE_EQ(with.at(2, 1), 1.0);
  m.normalize_rows(false);
  EXPECT_EQ(m.row_cols(1).size(), 0u);
}

TEST(Csr, RejectsInconsistentArrays) {
  EXPECT_THROW(CsrMatrix(2, {0, 1}, {0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(CsrMatrix(1, {0, 2}, {0}, {1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace cove
