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

#include <sstream>

#include "cove/embedding.hpp"
#include "cove/error.hpp"
#include "cove/random.hpp"

namespace cove {
namespace {

Embedding parse(const std::string& text) {
  std::istringstream in(text);
  return read_embedding(in);
}

TEST(EmbeddingIo, RoundTripIsExact) {
  Rng rng(1);
  Embedding e;
  e.values.resize(5, 3);
  for (Eigen::Index r = 0; r < 5; ++r) {
    for (Eigen::Index c = 0; c < 3; ++c) e.values(r, c) = uniform01(rng) * 1e3 - 500.0;
    e.labels.push_back("node" + std::to_string(r));
  }
  e.values(0, 0) = 1e-300;
  e.values(1, 1) = -0.1;
  std::stringstream io;
  write_embedding(io, e);
  Embedding back = read_embedding(io);
  EXPECT_EQ(back.kind, EmbeddingKind::kEuclidean);
  EXPECT_EQ(back.labels, e.labels);
  EXPECT_EQ(back.values, e.values);
}

TEST(EmbeddingIo, HeaderFormat) {
  Embedding e;
  e.kind = EmbeddingKind::kDistribution;
  e.values = DenseMatrix::Identity(2, 2);
  e.labels = {"a", "b"};
  std::ostringstream out;
  write_embedding(out, e);
  EXPECT_EQ(out.str(), "COVE-EMB 2 2 distribution\na 1 0\nb 0 1\n");
}

TEST(EmbeddingIo, RowCountMismatch) {
  EXPECT_THROW(parse("COVE-EMB 2 3 euclidean\na 1 2 3\n"), ParseError);
}

TEST(EmbeddingIo, KindInvariantViolation) {
  try {
    parse("COVE-EMB 1 2 distribution\nx 0.5 0.4\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_NO_THROW(parse("COVE-EMB 1 2 distribution\nx 0.5 0.5\n"));
  EXPECT_THROW(parse("COVE-EMB 1 2 hellinger\nx 0.5 0.6\n"), ParseError);
}

TEST(EmbeddingIo, MalformedInput) {
  EXPECT_THROW(parse("EMB 1 1 euclidean\nx 1\n"), ParseError);
  EXPECT_THROW(parse("COVE-EMB 1 1 fancy\nx 1\n"), ParseError);
  EXPECT_THROW(parse("COVE-EMB 1 2 euclidean\nx 1 y\n"), ParseError);
  EXPECT_THROW(parse("COVE-EMB 1 2 euclidean\nx 1\n"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
}

TEST(EmbeddingKinds, StringRoundTrip) {
  for (auto k : {EmbeddingKind::kDistribution, EmbeddingKind::kHellinger,
                 EmbeddingKind::kEuclidean}) {
    EXPECT_EQ(embedding_kind_from_string(to_string(k)), k);
  }
}

}  // namespace
}  // namespace cove
