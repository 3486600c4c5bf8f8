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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "cove/clustering.hpp"
#include "cove/embedding.hpp"
#include "cove/graph.hpp"

namespace cove {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cove(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(COVE_TEST_TMPDIR) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, ExactEmbeddingOfTriangle) {
  const auto edges = write("k3.edges", "0 1\n1 2\n2 0\n");
  Outcome r = cove({"embed", "--input", edges, "--exact", "--window", "2", "--out",
                path("e.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3\t3\tdistribution\n");
  EXPECT_NE(r.err.find("window=2"), std::string::npos);
  Embedding e = read_embedding_file(path("e.tsv"));
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) {
      EXPECT_NEAR(e.values(i, j), i == j ? 0.25 : 0.375, 1e-15);
    }
  }
}

TEST_F(CliTest, EvalClusterIdentical) {
  const auto a = write("a.txt", "x 0\ny 0\nz 1\nw -1\n");
  Outcome r = cove({"eval-cluster", "--pred", a, "--truth", a, "--metric", "fstar"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1.0\n");
  const auto b = write("b.txt", "x 0\ny 0\nz 1\n");
  EXPECT_EQ(cove({"eval-cluster", "--pred", b, "--truth", b, "--metric", "ami"}).out,
            "1.0\n");
  EXPECT_EQ(cove({"eval-cluster", "--pred", a, "--truth", b}).code, cli::kExitData);
}

TEST_F(CliTest, GenerateWithoutNoiseHasNoInterCommunityEdges) {
  Outcome r = cove({"generate", "--n", "100", "--xi", "0", "--seed", "3",
                "--community-max", "50", "--out-edges", path("g.edges"),
                "--out-truth", path("truth.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto truth = read_clustering_file(path("truth.txt"));
  std::map<std::string, long long> community;
  for (const auto& [label, id] : truth.assignments) community[label] = id;
  EXPECT_EQ(community.size(), 100u);
  std::ifstream in(path("g.edges"));
  std::string u, v;
  std::size_t edges = 0;
  while (in >> u >> v) {
    ++edges;
    EXPECT_EQ(community.at(u), community.at(v));
  }
  EXPECT_GT(edges, 0u);
}

TEST_F(CliTest, FullPipeline) {
  ASSERT_EQ(cove({"generate", "--n", "200", "--xi", "0.1", "--seed", "1",
                  "--community-max", "80", "--out-edges", path("g.edges"),
                  "--out-truth", path("truth.txt")})
                .code,
            0);
  ASSERT_EQ(cove({"walk", "--input", path("g.edges"), "--walks", "2", "--length",
                  "10", "--out", path("walks.txt")})
                .code,
            0);
  ASSERT_EQ(cove({"embed", "--input", path("g.edges"), "--sampled", "--corpus",
                  path("walks.txt"), "--window", "3", "--hellinger", "--out",
                  path("h.tsv")})
                .code,
            0);
  Outcome red = cove({"reduce", "--method", "svd", "--dim", "2", "--in", path("h.tsv"),
                  "--out", path("r.tsv")});
  ASSERT_EQ(red.code, 0) << red.err;
  EXPECT_EQ(red.out, "200\t2\teuclidean\n");
  Outcome km = cove({"kmeans", "--in", path("r.tsv"), "--k", "3", "--out",
                 path("pred.txt")});
  ASSERT_EQ(km.code, 0) << km.err;
  Outcome ev = cove({"eval-cluster", "--pred", path("pred.txt"), "--truth",
                 path("truth.txt")});
  ASSERT_EQ(ev.code, 0) << ev.err;
  const double score = std::stod(ev.out);
  EXPECT_GT(score, 0.0);
  EXPECT_LE(score, 1.0);
  Outcome spec = cove({"reduce", "--method", "spectral", "--dim", "2", "--graph",
                   path("g.edges"), "--out", path("s.tsv")});
  ASSERT_EQ(spec.code, 0) << spec.err;
  Outcome lp = cove({"linkpred", "--input", path("g.edges"), "--seed", "2",
                 "--walks", "4", "--length", "20"});
  ASSERT_EQ(lp.code, 0) << lp.err;
  EXPECT_EQ(lp.out.substr(0, 2), "2\t");
}

TEST_F(CliTest, SpectralDropsSmallComponents) {
  const auto edges = write("two.edges", "a b\nb c\nc a\nc d\nx y\n");
  Outcome r = cove({"reduce", "--method", "spectral", "--dim", "1", "--graph", edges,
                "--out", path("s.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("dropped 2"), std::string::npos);
  EXPECT_EQ(read_embedding_file(path("s.tsv")).n(), 4u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(cove({}).code, cli::kExitUsage);
  EXPECT_EQ(cove({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(cove({"embed", "--help"}).code, cli::kExitOk);
  EXPECT_EQ(cove({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(cove({"embed", "--input", path("missing"), "--exact", "--out", path("o")})
                .code,
            cli::kExitUsage);
  const auto edges = write("g.edges", "0 1\n1 2\n");
  EXPECT_EQ(cove({"embed", "--input", edges, "--out", path("o")}).code,
            cli::kExitUsage);
  EXPECT_EQ(cove({"embed", "--input", edges, "--exact", "--sampled", "--out",
                  path("o")})
                .code,
            cli::kExitUsage);
  EXPECT_EQ(cove({"embed", "--input", edges, "--exact", "--out",
                  path("no/such/dir/o")})
                .code,
            cli::kExitUsage);
  const auto bad = write("bad.edges", "0 1\n1 2 -3\n");
  Outcome r = cove({"embed", "--input", bad, "--exact", "--out", path("o")});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(cove({"embed", "--input", edges, "--exact", "--theta", "1,2", "--window",
                  "3", "--out", path("o")})
                .code,
            cli::kExitData);
  EXPECT_EQ(cove({"kmeans", "--in", path("o"), "--k", "2", "--out", path("c")}).code,
            cli::kExitUsage);
}

}  // namespace
}  // namespace cove
