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
#include <string_view>

#include "cove/embedding.hpp"
#include "cove/graph.hpp"

namespace cove {

enum class ReducerMethod { kSvd, kSpectral };

ReducerMethod reducer_method_from_string(std::string_view name);

struct ReducerSpec {
  ReducerMethod method = ReducerMethod::kSvd;
  std::size_t target_dim = 2;
  std::uint64_t seed = 0;
};

struct SvdOptions {
  // Inputs with min(rows, cols) at or below this use a dense divide-and-
  // conquer SVD; larger ones use randomized subspace iteration.
  std::size_t dense_limit = 400;
  std::size_t oversample = 10;
  std::size_t max_iterations = 200;
  // Relative change of the leading singular values that counts as converged.
  double tolerance = 1e-12;
};

struct SvdResult {
  DenseMatrix u;             // rows x d
  Eigen::VectorXd singular;  // d, descending
  DenseMatrix v;             // cols x d
  std::size_t iterations = 0;  // 0 for the dense path
};

// Leading d singular triplets. Each right singular vector is signed so its
// largest-magnitude entry (first on ties) is positive. Throws ParameterError
// if d is 0 or exceeds min(rows, cols), NumericError when the iterative path
// exhausts max_iterations.
SvdResult truncated_svd(const DenseMatrix& x, std::size_t d, std::uint64_t seed,
                        const SvdOptions& options = {});

// U_d * Sigma_d of the embedding values, as a euclidean embedding.
Embedding svd_reduce(const Embedding& e, std::size_t d, std::uint64_t seed,
                     const SvdOptions& options = {});

struct SpectralOptions {
  // Graphs up to this many nodes use a dense symmetric eigensolver; larger
  // ones use LOBPCG on the sparse Laplacian.
  std::size_t dense_limit = 2000;
  std::size_t max_iterations = 5000;
  double residual_tolerance = 1e-9;
};

struct SpectralResult {
  Embedding embedding;         // n x d, euclidean, unit-norm columns
  Eigen::VectorXd eigenvalues;  // d, ascending
};

// Eigenvectors of L_sym = I - D^{-1/2} A D^{-1/2} for the d smallest
// nonzero eigenvalues, ascending, excluding the D^{1/2} 1 direction. Within a
// degenerate eigenspace any orthonormal basis may be returned. Throws
// DataError for a disconnected graph and ParameterError unless 1 <= d < n.
SpectralResult spectral_embedding(const Graph& g, std::size_t d,
                                  const SpectralOptions& options = {});

// Dense L_sym, for small graphs and tests.
DenseMatrix normalized_laplacian(const Graph& g);

}  // namespace cove
