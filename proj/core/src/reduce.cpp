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

#include "cove/reduce.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cove/error.hpp"
#include "cove/random.hpp"

namespace cove {
namespace {

using ColMatrix = Eigen::MatrixXd;

// Flips column j of `v` (and of `u`, if given) so that v's largest-magnitude
// entry is positive.
template <typename U, typename V>
void fix_signs(U* u, V& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      if (std::abs(v(i, j)) > best) {
        best = std::abs(v(i, j));
        arg = i;
      }
    }
    if (v(arg, j) < 0.0) {
      v.col(j) *= -1.0;
      if (u) u->col(j) *= -1.0;
    }
  }
}

ColMatrix orthonormal_basis(const ColMatrix& y) {
  Eigen::HouseholderQR<ColMatrix> qr(y);
  return qr.householderQ() * ColMatrix::Identity(y.rows(), y.cols());
}

ColMatrix gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Rng rng = stream_for(seed, 0x5644ULL);
  std::normal_distribution<double> normal;
  ColMatrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = normal(rng);
  }
  return out;
}

SvdResult dense_svd(const ColMatrix& x, std::size_t d) {
  Eigen::BDCSVD<ColMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto k = static_cast<Eigen::Index>(d);
  SvdResult r;
  r.u = svd.matrixU().leftCols(k);
  r.singular = svd.singularValues().head(k);
  r.v = svd.matrixV().leftCols(k);
  return r;
}

SvdResult randomized_svd(const ColMatrix& x, std::size_t d, std::uint64_t seed,
                         const SvdOptions& opt) {
  const Eigen::Index smaller = std::min(x.rows(), x.cols());
  const Eigen::Index k =
      std::min<Eigen::Index>(static_cast<Eigen::Index>(d + opt.oversample),
                             smaller);
  const auto dd = static_cast<Eigen::Index>(d);

  ColMatrix q = orthonormal_basis(x * gaussian(x.cols(), k, seed));
  Eigen::VectorXd previous = Eigen::VectorXd::Constant(dd, -1.0);
  for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
    ColMatrix qz = orthonormal_basis(x.transpose() * q);
    q = orthonormal_basis(x * qz);
    ColMatrix b = q.transpose() * x;
    Eigen::JacobiSVD<ColMatrix> small(b, Eigen::ComputeThinU |
                                             Eigen::ComputeThinV);
    Eigen::VectorXd s = small.singularValues().head(dd);
    const double scale = std::max(s(0), 1e-300);
    if ((s - previous).cwiseAbs().maxCoeff() <= opt.tolerance * scale) {
      SvdResult r;
      r.u = q * small.matrixU().leftCols(dd);
      r.singular = s;
      r.v = small.matrixV().leftCols(dd);
      r.iterations = it;
      return r;
    }
    previous = s;
  }
  throw NumericError("randomized SVD did not converge within " +
                     std::to_string(opt.max_iterations) +
                     " subspace iterations");
}

void require_connected(const Graph& g) {
  auto comp = connected_components(g);
  if (std::any_of(comp.begin(), comp.end(), [](NodeId c) { return c != 0; })) {
    throw DataError(
        "spectral embedding needs a connected graph; embed each connected "
        "component separately (for example its largest component)");
  }
}

// y = L_sym x for the graph's normalized Laplacian.
ColMatrix apply_laplacian(const Graph& g, const Eigen::VectorXd& inv_sqrt_deg,
                          const ColMatrix& x) {
  ColMatrix y = x;
  for (NodeId v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    auto ws = g.weights(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      y.row(v) -= (ws[k] * inv_sqrt_deg(v) * inv_sqrt_deg(nb[k])) *
                  x.row(nb[k]);
    }
  }
  return y;
}

// Orthonormal basis of span(s) with `trivial` projected out; drops directions
// that are numerically dependent.
ColMatrix deflated_basis(ColMatrix s, const Eigen::VectorXd& trivial) {
  for (int pass = 0; pass < 2; ++pass) {
    s -= trivial * (trivial.transpose() * s);
  }
  Eigen::BDCSVD<ColMatrix> svd(s, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index keep = 0;
  while (keep < sv.size() && sv(keep) > 1e-10 * sv(0)) ++keep;
  ColMatrix q = svd.matrixU().leftCols(keep);
  q -= trivial * (trivial.transpose() * q);
  return orthonormal_basis(q);
}

SpectralResult lobpcg_spectral(const Graph& g, std::size_t d,
                               const SpectralOptions& opt) {
  const auto n = static_cast<Eigen::Index>(g.n());
  const auto dd = static_cast<Eigen::Index>(d);
  const Eigen::Index k = std::min<Eigen::Index>(dd + 2, n - 1);

  Eigen::VectorXd sqrt_deg(n), inv_sqrt_deg(n);
  for (NodeId v = 0; v < g.n(); ++v) {
    sqrt_deg(v) = std::sqrt(g.weighted_degree(v));
    inv_sqrt_deg(v) = 1.0 / sqrt_deg(v);
  }
  const Eigen::VectorXd trivial = sqrt_deg.normalized();

  ColMatrix x = deflated_basis(gaussian(n, k, 0x1b0bcULL), trivial);
  ColMatrix p;
  Eigen::VectorXd lambda;
  for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
    ColMatrix ax = apply_laplacian(g, inv_sqrt_deg, x);
    Eigen::SelfAdjointEigenSolver<ColMatrix> rr(x.transpose() * ax);
    x = x * rr.eigenvectors();
    ax = ax * rr.eigenvectors();
    lambda = rr.eigenvalues();
    ColMatrix r = ax - x * lambda.asDiagonal();

    double worst = 0.0;
    for (Eigen::Index j = 0; j < dd; ++j) worst = std::max(worst, r.col(j).norm());
    if (worst < opt.residual_tolerance) {
      SpectralResult out;
      out.eigenvalues = lambda.head(dd);
      out.embedding.kind = EmbeddingKind::kEuclidean;
      out.embedding.labels = g.labels();
      ColMatrix cols = x.leftCols(dd);
      fix_signs<ColMatrix>(nullptr, cols);
      out.embedding.values = cols;
      return out;
    }

    ColMatrix s(n, x.cols() + r.cols() + p.cols());
    s << x, r, p;
    ColMatrix basis = deflated_basis(s, trivial);
    ColMatrix ab = apply_laplacian(g, inv_sqrt_deg, basis);
    ColMatrix h = basis.transpose() * ab;
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<ColMatrix> big(h);
    ColMatrix x_new = basis * big.eigenvectors().leftCols(k);
    p = x_new - x * (x.transpose() * x_new);
    x = orthonormal_basis(x_new);
  }
  throw NumericError("spectral embedding (LOBPCG) did not reach residual " +
                     std::to_string(opt.residual_tolerance) + " within " +
                     std::to_string(opt.max_iterations) + " iterations");
}

}  // namespace

ReducerMethod reducer_method_from_string(std::string_view name) {
  if (name == "svd") return ReducerMethod::kSvd;
  if (name == "spectral") return ReducerMethod::kSpectral;
  throw ParameterError("unknown reducer method '" + std::string(name) + "'");
}

SvdResult truncated_svd(const DenseMatrix& x, std::size_t d, std::uint64_t seed,
                        const SvdOptions& options) {
  const auto smaller =
      static_cast<std::size_t>(std::min(x.rows(), x.cols()));
  if (d == 0 || d > smaller) {
    throw ParameterError("SVD target dimension " + std::to_string(d) +
                         " outside [1, " + std::to_string(smaller) + "]");
  }
  ColMatrix xc = x;
  SvdResult r = smaller <= options.dense_limit
                    ? dense_svd(xc, d)
                    : randomized_svd(xc, d, seed, options);
  fix_signs(&r.u, r.v);
  return r;
}

Embedding svd_reduce(const Embedding& e, std::size_t d, std::uint64_t seed,
                     const SvdOptions& options) {
  SvdResult r = truncated_svd(e.values, d, seed, options);
  Embedding out;
  out.kind = EmbeddingKind::kEuclidean;
  out.labels = e.labels;
  out.values = r.u * r.singular.asDiagonal();
  return out;
}

DenseMatrix normalized_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.n());
  DenseMatrix l = DenseMatrix::Identity(n, n);
  for (NodeId v = 0; v < g.n(); ++v) {
    const double dv = g.weighted_degree(v);
    if (dv == 0.0) {
      l(v, v) = 0.0;
      continue;
    }
    auto nb = g.neighbors(v);
    auto ws = g.weights(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      l(v, nb[k]) = -ws[k] / std::sqrt(dv * g.weighted_degree(nb[k]));
    }
  }
  return l;
}

SpectralResult spectral_embedding(const Graph& g, std::size_t d,
                                  const SpectralOptions& options) {
  if (d == 0 || d >= g.n()) {
    throw ParameterError("spectral dimension must satisfy 1 <= d < n (d = " +
                         std::to_string(d) + ", n = " +
                         std::to_string(g.n()) + ")");
  }
  require_connected(g);
  if (g.n() > options.dense_limit) return lobpcg_spectral(g, d, options);

  ColMatrix l = normalized_laplacian(g);
  Eigen::SelfAdjointEigenSolver<ColMatrix> eig(l);
  if (eig.info() != Eigen::Success) {
    throw NumericError("dense symmetric eigensolver failed");
  }
  // Column 0 spans the trivial D^{1/2} 1 direction of a connected graph.
  const auto dd = static_cast<Eigen::Index>(d);
  ColMatrix cols = eig.eigenvectors().middleCols(1, dd);
  fix_signs<ColMatrix>(nullptr, cols);
  SpectralResult out;
  out.eigenvalues = eig.eigenvalues().segment(1, dd);
  out.embedding.kind = EmbeddingKind::kEuclidean;
  out.embedding.labels = g.labels();
  out.embedding.values = cols;
  return out;
}

}  // namespace cove
