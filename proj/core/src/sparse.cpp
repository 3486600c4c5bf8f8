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

#include "cove/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cove/parallel.hpp"

namespace cove {

CsrMatrix::CsrMatrix(std::size_t n, std::vector<std::size_t> row_ptr,
                     std::vector<NodeId> cols, std::vector<double> values)
    : n_(n),
      row_ptr_(std::move(row_ptr)),
      cols_(std::move(cols)),
      values_(std::move(values)) {
  if (row_ptr_.size() != n_ + 1 || cols_.size() != values_.size() ||
      row_ptr_.back() != cols_.size()) {
    throw std::invalid_argument("CsrMatrix: inconsistent CSR arrays");
  }
}

double CsrMatrix::at(std::size_t r, std::size_t c) const {
  auto cs = row_cols(r);
  auto it = std::lower_bound(cs.begin(), cs.end(), static_cast<NodeId>(c));
  if (it == cs.end() || *it != c) return 0.0;
  return values_[row_ptr_[r] + static_cast<std::size_t>(it - cs.begin())];
}

double CsrMatrix::row_sum(std::size_t r) const {
  double s = 0.0;
  for (double v : row_values(r)) s += v;
  return s;
}

CsrMatrix CsrMatrix::transpose() const {
  std::vector<std::size_t> ptr(n_ + 1, 0);
  for (NodeId c : cols_) ++ptr[c + 1];
  for (std::size_t i = 0; i < n_; ++i) ptr[i + 1] += ptr[i];
  std::vector<NodeId> cols(nnz());
  std::vector<double> vals(nnz());
  std::vector<std::size_t> fill(ptr.begin(), ptr.end() - 1);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      std::size_t dst = fill[cols_[k]]++;
      cols[dst] = static_cast<NodeId>(r);
      vals[dst] = values_[k];
    }
  }
  return CsrMatrix(n_, std::move(ptr), std::move(cols), std::move(vals));
}

CsrMatrix CsrMatrix::multiply(const CsrMatrix& rhs, unsigned threads) const {
  if (rhs.n_ != n_) throw std::invalid_argument("CsrMatrix: size mismatch");
  struct RowOut {
    std::vector<NodeId> cols;
    std::vector<double> vals;
  };
  std::vector<RowOut> rows(n_);

  parallel_for_chunks(n_, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> acc(n_, 0.0);
    std::vector<char> seen(n_, 0);
    std::vector<NodeId> touched;
    for (std::size_t r = begin; r < end; ++r) {
      touched.clear();
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        const double a = values_[k];
        const NodeId mid = cols_[k];
        for (std::size_t j = rhs.row_ptr_[mid]; j < rhs.row_ptr_[mid + 1];
             ++j) {
          const NodeId c = rhs.cols_[j];
          if (!seen[c]) {
            seen[c] = 1;
            touched.push_back(c);
          }
          acc[c] += a * rhs.values_[j];
        }
      }
      std::sort(touched.begin(), touched.end());
      RowOut& out = rows[r];
      out.cols.reserve(touched.size());
      out.vals.reserve(touched.size());
      for (NodeId c : touched) {
        if (acc[c] != 0.0) {
          out.cols.push_back(c);
          out.vals.push_back(acc[c]);
        }
        acc[c] = 0.0;
        seen[c] = 0;
      }
    }
  });

  std::vector<std::size_t> ptr(n_ + 1, 0);
  for (std::size_t r = 0; r < n_; ++r) ptr[r + 1] = ptr[r] + rows[r].cols.size();
  std::vector<NodeId> cols;
  std::vector<double> vals;
  cols.reserve(ptr.back());
  vals.reserve(ptr.back());
  for (auto& row : rows) {
    cols.insert(cols.end(), row.cols.begin(), row.cols.end());
    vals.insert(vals.end(), row.vals.begin(), row.vals.end());
  }
  return CsrMatrix(n_, std::move(ptr), std::move(cols), std::move(vals));
}

CsrMatrix CsrMatrix::add_scaled(double alpha, const CsrMatrix& other,
                                double beta) const {
  if (other.n_ != n_) throw std::invalid_argument("CsrMatrix: size mismatch");
  std::vector<std::size_t> ptr(n_ + 1, 0);
  std::vector<NodeId> cols;
  std::vector<double> vals;
  cols.reserve(nnz() + other.nnz());
  vals.reserve(nnz() + other.nnz());
  for (std::size_t r = 0; r < n_; ++r) {
    std::size_t i = row_ptr_[r], ie = row_ptr_[r + 1];
    std::size_t j = other.row_ptr_[r], je = other.row_ptr_[r + 1];
    while (i < ie || j < je) {
      if (j >= je || (i < ie && cols_[i] < other.cols_[j])) {
        cols.push_back(cols_[i]);
        vals.push_back(alpha * values_[i]);
        ++i;
      } else if (i >= ie || other.cols_[j] < cols_[i]) {
        cols.push_back(other.cols_[j]);
        vals.push_back(beta * other.values_[j]);
        ++j;
      } else {
        cols.push_back(cols_[i]);
        vals.push_back(alpha * values_[i] + beta * other.values_[j]);
        ++i;
        ++j;
      }
    }
    ptr[r + 1] = cols.size();
  }
  return CsrMatrix(n_, std::move(ptr), std::move(cols), std::move(vals));
}

void CsrMatrix::normalize_rows(bool self_indicator) {
  std::vector<std::size_t> ptr(n_ + 1, 0);
  std::vector<NodeId> cols;
  std::vector<double> vals;
  cols.reserve(nnz() + n_);
  vals.reserve(nnz() + n_);
  for (std::size_t r = 0; r < n_; ++r) {
    const double s = row_sum(r);
    if (s > 0.0) {
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        if (values_[k] == 0.0) continue;
        cols.push_back(cols_[k]);
        vals.push_back(values_[k] / s);
      }
    } else if (self_indicator) {
      cols.push_back(static_cast<NodeId>(r));
      vals.push_back(1.0);
    }
    ptr[r + 1] = cols.size();
  }
  row_ptr_ = std::move(ptr);
  cols_ = std::move(cols);
  values_ = std::move(vals);
}

bool CsrMatrix::is_symmetric(double tol) const {
  for (std::size_t r = 0; r < n_; ++r) {
    auto cs = row_cols(r);
    auto vs = row_values(r);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (std::abs(vs[k] - at(cs[k], r)) > tol) return false;
    }
  }
  // Entries present only in the transpose were covered from the other side.
  return true;
}

std::vector<double> CsrMatrix::to_dense() const {
  std::vector<double> out(n_ * n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      out[r * n_ + cols_[k]] = values_[k];
    }
  }
  return out;
}

}  // namespace cove
