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

#include <span>
#include <string_view>
#include <vector>

#include "cove/embedding.hpp"
#include "cove/graph.hpp"
#include "cove/sparse.hpp"
#include "cove/walk.hpp"

namespace cove {

enum class CooccurrenceKind {
  kDiffusion,      // T = sum_i theta_i A^i
  kSymmetric,      // psi = T + T^t
  kNormalized,     // psi_hat, rows of psi normalized
  kCounts,         // windowed co-occurrence counts from a walk corpus
  kSampled,        // psi_tilde, rows of the counts normalized
};

std::string_view to_string(CooccurrenceKind kind);

struct CooccurrenceMatrix {
  CsrMatrix matrix;
  CooccurrenceKind kind = CooccurrenceKind::kDiffusion;

  std::size_t n() const { return matrix.n(); }
  bool is_distribution() const {
    return kind == CooccurrenceKind::kNormalized ||
           kind == CooccurrenceKind::kSampled;
  }
};

// theta_1..theta_L; an empty span means all ones with L = `radius`.
// Throws ParameterError for radius 0, a length mismatch, negative entries or
// an all-zero kernel.
std::vector<double> resolve_window_kernel(std::size_t radius,
                                          std::span<const double> theta);

// T = sum_{i=1}^{L} theta_i A^i with A the row-normalized adjacency, by
// repeated sparse products.
CooccurrenceMatrix truncated_diffusion(const Graph& g, std::size_t radius,
                                       std::span<const double> theta = {},
                                       unsigned threads = 0);

// psi = T + T^t.
CooccurrenceMatrix symmetrize(const CooccurrenceMatrix& diffusion);

// Exact COVE: the row normalization of psi. Isolated nodes get a unit
// self-indicator row.
CooccurrenceMatrix exact_cove(const Graph& g, std::size_t radius,
                              std::span<const double> theta = {},
                              unsigned threads = 0);

// Entry (u, v) counts position pairs (s, t) in the same walk with walk[s] = u,
// walk[t] = v and 1 <= |s - t| <= radius. Windows stop at walk ends. The
// result is exactly symmetric and independent of `threads`.
CooccurrenceMatrix count_cooccurrences(const WalkCorpus& corpus,
                                       std::size_t radius,
                                       unsigned threads = 0);

// Sampled COVE: row normalization of a count matrix; all-zero rows become
// unit self-indicators.
CooccurrenceMatrix sampled_cove(const CooccurrenceMatrix& counts);

// Dense distribution-kind embedding of a normalized co-occurrence matrix.
Embedding to_distribution_embedding(const CooccurrenceMatrix& m,
                                    const std::vector<std::string>& labels);

// Entrywise sqrt(x / 2): Euclidean distance between output rows equals the
// Hellinger distance between the input rows.
Embedding hellinger_transform(const CooccurrenceMatrix& m,
                              const std::vector<std::string>& labels);
Embedding hellinger_transform(const Embedding& distribution);

struct CoveConfig {
  bool exact = false;
  std::size_t radius = 6;
  std::vector<double> theta;  // empty = uniform window; exact only
  WalkParams walk;
};

// psi_hat (exact) or psi_tilde (sampled from a fresh corpus) of g.
CooccurrenceMatrix cove_matrix(const Graph& g, const CoveConfig& config,
                               unsigned threads = 0);

// Hellinger-transformed COVE embedding of g.
Embedding cove_hellinger_embedding(const Graph& g, const CoveConfig& config,
                                   unsigned threads = 0);

}  // namespace cove
