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

#include "cove/embedding.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "cove/error.hpp"
#include "cove/text_io.hpp"

namespace cove {
namespace {

// Row index of the first kind violation, or -1.
long first_invalid_row(const Embedding& e, double tol) {
  const double half_norm2 = 0.5;
  for (Eigen::Index i = 0; i < e.values.rows(); ++i) {
    auto row = e.values.row(i);
    if (!row.allFinite()) return static_cast<long>(i);
    switch (e.kind) {
      case EmbeddingKind::kDistribution:
        if (row.minCoeff() < -tol || std::abs(row.sum() - 1.0) > tol) {
          return static_cast<long>(i);
        }
        break;
      case EmbeddingKind::kHellinger:
        if (std::abs(row.norm() - std::sqrt(half_norm2)) > tol) {
          return static_cast<long>(i);
        }
        break;
      case EmbeddingKind::kEuclidean:
        break;
    }
  }
  return -1;
}

}  // namespace

std::string_view to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::kDistribution:
      return "distribution";
    case EmbeddingKind::kHellinger:
      return "hellinger";
    case EmbeddingKind::kEuclidean:
      return "euclidean";
  }
  return "euclidean";
}

EmbeddingKind embedding_kind_from_string(std::string_view name) {
  if (name == "distribution") return EmbeddingKind::kDistribution;
  if (name == "hellinger") return EmbeddingKind::kHellinger;
  if (name == "euclidean") return EmbeddingKind::kEuclidean;
  throw ParameterError("unknown embedding kind '" + std::string(name) + "'");
}

void Embedding::validate(double tol) const {
  if (labels.size() != n()) {
    throw DataError("embedding has " + std::to_string(n()) + " rows but " +
                    std::to_string(labels.size()) + " labels");
  }
  if (long bad = first_invalid_row(*this, tol); bad >= 0) {
    throw DataError("embedding row " + std::to_string(bad) + " (" +
                    labels[static_cast<std::size_t>(bad)] +
                    ") violates the " + std::string(to_string(kind)) +
                    " invariant");
  }
}

void write_embedding(std::ostream& out, const Embedding& e) {
  out << "COVE-EMB " << e.n() << ' ' << e.d() << ' ' << to_string(e.kind)
      << '\n';
  for (std::size_t i = 0; i < e.n(); ++i) {
    out << e.labels[i];
    for (std::size_t j = 0; j < e.d(); ++j) {
      out << ' '
          << format_double(e.values(static_cast<Eigen::Index>(i),
                                    static_cast<Eigen::Index>(j)));
    }
    out << '\n';
  }
}

void write_embedding_file(const std::string& path, const Embedding& e) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  write_embedding(out, e);
  if (!out) throw DataError("write to '" + path + "' failed");
}

Embedding read_embedding(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty embedding file");
  ++lineno;
  auto header = split_fields(line);
  if (header.size() != 4 || header[0] != "COVE-EMB") {
    throw ParseError(lineno, "expected header 'COVE-EMB <n> <d> <kind>'");
  }
  auto n = parse_int(header[1]);
  auto d = parse_int(header[2]);
  if (!n || !d || *n < 0 || *d < 0) {
    throw ParseError(lineno, "header n and d must be nonnegative integers");
  }
  Embedding e;
  try {
    e.kind = embedding_kind_from_string(header[3]);
  } catch (const ParameterError& err) {
    throw ParseError(lineno, err.what());
  }
  e.values.resize(*n, *d);
  e.labels.reserve(static_cast<std::size_t>(*n));

  std::vector<std::size_t> row_line;
  row_line.reserve(static_cast<std::size_t>(*n));
  long long row = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (row >= *n) {
      throw ParseError(lineno, "more rows than the header's n = " +
                                   std::to_string(*n));
    }
    if (static_cast<long long>(fields.size()) != *d + 1) {
      throw ParseError(lineno, "expected label and " + std::to_string(*d) +
                                   " values, got " +
                                   std::to_string(fields.size()) + " fields");
    }
    e.labels.emplace_back(fields[0]);
    row_line.push_back(lineno);
    for (long long j = 0; j < *d; ++j) {
      auto v = parse_double(fields[static_cast<std::size_t>(j) + 1]);
      if (!v) {
        throw ParseError(lineno,
                         "non-numeric entry '" +
                             std::string(fields[static_cast<std::size_t>(j) +
                                                1]) +
                             "'");
      }
      e.values(row, j) = *v;
    }
    ++row;
  }
  if (row != *n) {
    throw ParseError(lineno, "header declares " + std::to_string(*n) +
                                 " rows but file has " + std::to_string(row));
  }
  if (long bad = first_invalid_row(e, 1e-9); bad >= 0) {
    throw ParseError(row_line[static_cast<std::size_t>(bad)],
                     "row violates the " + std::string(to_string(e.kind)) +
                         " invariant");
  }
  return e;
}

Embedding read_embedding_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open embedding '" + path + "'");
  return read_embedding(in);
}

}  // namespace cove
