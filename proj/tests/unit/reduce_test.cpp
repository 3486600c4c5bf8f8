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

#include <cmath>

#include "cove/error.hpp"
#include "cove/reduce.hpp"
#include "test_graphs.hpp"

namespace cove {
namespace {

double reconstruction_error(const DenseMatrix& x, const SvdResult& r) {
  const Eigen::MatrixXd approx = r.u * r.singular.asDiagonal() * r.v.transpose();
  return (Eigen::MatrixXd(x) - approx).norm();
}

DenseMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  DenseMatrix x(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) x(r, c) = uniform01(rng) - 0.5;
  }
  return x;
}

TEST(Svd, RankOneIsExact) {
  Eigen::VectorXd a(4), b(3);
  a << 1, -2, 3, 0.5;
  b << 2, 0, -1;
  const DenseMatrix x = a * b.transpose();
  auto r = truncated_svd(x, 1, 0);
  EXPECT_LT(reconstruction_error(x, r), 1e-9);
  EXPECT_NEAR(r.singular(0), a.norm() * b.norm(), 1e-12);
}

TEST(Svd, Identity) {
  const DenseMatrix x = DenseMatrix::Identity(3, 3);
  auto r = truncated_svd(x, 3, 0);
  EXPECT_LT(reconstruction_error(x, r), 1e-12);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.singular(i), 1.0, 1e-12);
}

TEST(Svd, DiagonalTruncation) {
  DenseMatrix x = DenseMatrix::Zero(3, 3);
  x(0, 0) = 3;
  x(1, 1) = 2;
  x(2, 2) = 1;
  auto r = truncated_svd(x, 2, 0);
  EXPECT_NEAR(r.singular(0), 3.0, 1e-12);
  EXPECT_NEAR(r.singular(1), 2.0, 1e-12);
  EXPECT_NEAR(reconstruction_error(x, r), 1.0, 1e-12);
}

TEST(Svd, ErrorNonIncreasingInRank) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const DenseMatrix x = random_matrix(8, 8, rng);
    double last = x.norm();
    for (std::size_t d = 1; d <= 8; ++d) {
      const double err = reconstruction_error(x, truncated_svd(x, d, 0));
      EXPECT_LE(err, last + 1e-12);
      last = err;
    }
    EXPECT_LT(last, 1e-12);
  }
}

TEST(Svd, SignConventionAndOrthonormality) {
  Rng rng(9);
  const DenseMatrix x = random_matrix(12, 7, rng);
  auto r = truncated_svd(x, 4, 0);
  const Eigen::MatrixXd vtv = r.v.transpose() * r.v;
  EXPECT_LT((vtv - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-12);
  for (Eigen::Index c = 0; c < 4; ++c) {
    Eigen::Index at;
    r.v.col(c).cwiseAbs().maxCoeff(&at);
    EXPECT_GT(r.v(at, c), 0.0);
  }
  for (Eigen::Index c = 1; c < 4; ++c) EXPECT_GE(r.singular(c - 1), r.singular(c));
}

TEST(Svd, RandomizedPathMatchesDense) {
  Rng rng(10);
  // Decaying spectrum so the leading subspace is well separated.
  DenseMatrix x = random_matrix(60, 40, rng);
  Eigen::JacobiSVD<Eigen::MatrixXd> full(Eigen::MatrixXd(x),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd s = full.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = std::pow(0.7, static_cast<double>(i));
  x = full.matrixU() * s.asDiagonal() * full.matrixV().transpose();

  SvdOptions randomized;
  randomized.dense_limit = 0;
  auto fast = truncated_svd(x, 5, 3, randomized);
  auto exact = truncated_svd(x, 5, 3);
  EXPECT_GT(fast.iterations, 0u);
  EXPECT_EQ(exact.iterations, 0u);
  EXPECT_LT((fast.singular - exact.singular).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((Eigen::MatrixXd(fast.v) - Eigen::MatrixXd(exact.v)).cwiseAbs().maxCoeff(),
            1e-8);
}

TEST(Svd, RejectsBadDimension) {
  const DenseMatrix x = DenseMatrix::Identity(3, 3);
  EXPECT_THROW(truncated_svd(x, 0, 0), ParameterError);
  EXPECT_THROW(truncated_svd(x, 4, 0), ParameterError);
}

TEST(SvdReduce, ProducesScoresWithLabels) {
  Rng rng(12);
  Embedding e;
  e.kind = EmbeddingKind::kHellinger;
  e.values = random_matrix(10, 6, rng);
  for (int i = 0; i < 10; ++i) e.labels.push_back(std::to_string(i));
  Embedding out = svd_reduce(e, 2, 0);
  EXPECT_EQ(out.kind, EmbeddingKind::kEuclidean);
  EXPECT_EQ(out.labels, e.labels);
  EXPECT_EQ(out.d(), 2u);
  auto r = truncated_svd(e.values, 2, 0);
  EXPECT_LT((Eigen::MatrixXd(out.values) - Eigen::MatrixXd(e.values * r.v)).norm(), 1e-12);
}

double worst_residual(const Graph& g, const SpectralResult& r) {
  const Eigen::MatrixXd lap = normalized_laplacian(g);
  double worst = 0.0;
  for (Eigen::Index c = 0; c < r.embedding.values.cols(); ++c) {
    const Eigen::VectorXd x = r.embedding.values.col(c);
    worst = std::max(worst, (lap * x - r.eigenvalues(c) * x).norm());
  }
  return worst;
}

TEST(Spectral, TriangleEigenvalue) {
  Graph g = testing::complete_graph(3);
  auto r = spectral_embedding(g, 1);
  EXPECT_NEAR(r.eigenvalues(0), 1.5, 1e-8);
  const Eigen::VectorXd x = r.embedding.values.col(0);
  EXPECT_NEAR(x.norm(), 1.0, 1e-12);
  Eigen::VectorXd trivial(3);
  for (NodeId v = 0; v < 3; ++v) trivial(v) = std::sqrt(g.weighted_degree(v));
  EXPECT_NEAR(trivial.dot(x), 0.0, 1e-10);
  EXPECT_LT(worst_residual(g, r), 1e-8);
}

TEST(Spectral, CycleResidual) {
  Graph g = testing::cycle_graph(4);
  auto r = spectral_embedding(g, 1);
  EXPECT_NEAR(r.eigenvalues(0), 1.0, 1e-8);
  EXPECT_LT(worst_residual(g, r), 1e-8);
}

TEST(Spectral, SparseSolverAgreesWithDense) {
  Rng rng(14);
  for (int t = 0; t < 5; ++t) {
    Graph g = testing::random_connected_graph(80, 0.05, rng, true);
    SpectralOptions sparse;
    sparse.dense_limit = 0;
    auto a = spectral_embedding(g, 4);
    auto b = spectral_embedding(g, 4, sparse);
    EXPECT_LT((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT(worst_residual(g, a), 1e-8);
    EXPECT_LT(worst_residual(g, b), 1e-8);
    for (Eigen::Index c = 1; c < 4; ++c) EXPECT_LE(a.eigenvalues(c - 1), a.eigenvalues(c));
  }
}

TEST(Spectral, Preconditions) {
  EXPECT_THROW(spectral_embedding(testing::make_graph(4, {{0, 1}, {2, 3}}), 1),
               DataError);
  EXPECT_THROW(spectral_embedding(testing::complete_graph(3), 3), ParameterError);
  EXPECT_THROW(spectral_embedding(testing::complete_graph(3), 0), ParameterError);
}

}  // namespace
}  // namespace cove
