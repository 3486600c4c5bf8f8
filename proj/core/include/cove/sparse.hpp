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

namespace cove {

using NodeId = std::uint32_t;

// Square compressed-sparse-row matrix of nonnegative doubles. Column indices
// within a row are strictly increasing.
class CsrMatrix {
 public:
  CsrMatrix() = default;
  explicit CsrMatrix(std::size_t n) : n_(n), row_ptr_(n + 1, 0) {}
  CsrMatrix(std::size_t n, std::vector<std::size_t> row_ptr,
            std::vector<NodeId> cols, std::vector<double> values);

  std::size_t n() const noexcept { return n_; }
  std::size_t nnz() const noexcept { return cols_.size(); }

  std::span<const NodeId> row_cols(std::size_t r) const {
    return {cols_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<const double> row_values(std::size_t r) const {
    return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }

  // Binary search in row r; zero when the entry is not stored.
  double at(std::size_t r, std::size_t c) const;
  double row_sum(std::size_t r) const;

  const std::vector<std::size_t>& row_ptr() const noexcept { return row_ptr_; }
  const std::vector<NodeId>& cols() const noexcept { return cols_; }
  const std::vector<double>& values() const noexcept { return values_; }

  CsrMatrix transpose() const;

  // Row-by-row Gustavson product; rows are computed independently, so the
  // result is identical for every thread count.
  CsrMatrix multiply(const CsrMatrix& rhs, unsigned threads = 1) const;

  // this * alpha + other * beta, union of patterns.
  CsrMatrix add_scaled(double alpha, const CsrMatrix& other,
                       double beta) const;

  // Row-normalizes in place. Rows with zero sum become a unit entry on the
  // diagonal when `self_indicator` is set, and stay empty otherwise.
  void normalize_rows(bool self_indicator);

  bool is_symmetric(double tol) const;

  // Dense row-major copy, for small matrices and tests.
  std::vector<double> to_dense() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<NodeId> cols_;
  std::vector<double> values_;
};

}  // namespace cove
