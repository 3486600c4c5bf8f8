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

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cove {

using DenseMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class EmbeddingKind { kDistribution, kHellinger, kEuclidean };

std::string_view to_string(EmbeddingKind kind);
// Throws ParameterError on an unknown name.
EmbeddingKind embedding_kind_from_string(std::string_view name);

// Dense n x d matrix, one row per node. `labels[i]` names the node of row i.
struct Embedding {
  DenseMatrix values;
  std::vector<std::string> labels;
  EmbeddingKind kind = EmbeddingKind::kEuclidean;

  std::size_t n() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t d() const { return static_cast<std::size_t>(values.cols()); }

  // Throws DataError when the rows break the kind's invariant: distribution
  // rows nonnegative summing to 1, hellinger rows of norm 1/sqrt(2), both
  // within `tol`. Also checks that labels match the row count.
  void validate(double tol = 1e-9) const;
};

// Interchange format: "COVE-EMB <n> <d> <kind>" then n lines
// "label v1 ... vd", single-space separated, shortest round-trip decimals.
void write_embedding(std::ostream& out, const Embedding& e);
void write_embedding_file(const std::string& path, const Embedding& e);

// Throws ParseError (with line number) on malformed input or a kind
// invariant violation.
Embedding read_embedding(std::istream& in);
Embedding read_embedding_file(const std::string& path);

}  // namespace cove
