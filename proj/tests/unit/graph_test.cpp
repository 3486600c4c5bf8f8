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

#include "cove/error.hpp"
#include "cove/graph.hpp"
#include "test_graphs.hpp"

namespace cove {
namespace {

EdgeListParse parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

TEST(EdgeList, ParsesPath) {
  auto r = parse("0 1\n1 2\n");
  EXPECT_EQ(r.graph.n(), 3u);
  EXPECT_EQ(r.graph.num_edges(), 2u);
  EXPECT_TRUE(r.graph.has_edge(0, 1));
  EXPECT_TRUE(r.graph.has_edge(2, 1));
  EXPECT_FALSE(r.graph.has_edge(0, 2));
}

TEST(EdgeList, MergesDuplicatesBySumming) {
  auto r = parse("0 1\n0 1\n");
  EXPECT_EQ(r.graph.num_edges(), 1u);
  EXPECT_DOUBLE_EQ(r.graph.edge_weight(0, 1), 2.0);
  EXPECT_EQ(r.duplicates_merged, 1u);
}

TEST(EdgeList, DropsSelfLoops) {
  auto r = parse("0 0\n0 1\n");
  EXPECT_EQ(r.graph.num_edges(), 1u);
  EXPECT_EQ(r.self_loops_dropped, 1u);
  EXPECT_EQ(r.graph.n(), 2u);
}

TEST(EdgeList, SelfLoopKeepsIsolatedNode) {
  auto r = parse("5 5\n1 2\n");
  ASSERT_EQ(r.graph.n(), 3u);
  EXPECT_EQ(r.graph.label(2), "5");
  EXPECT_EQ(r.graph.degree(2), 0u);
}

TEST(EdgeList, NumericLabelsSortNumerically) {
  auto r = parse("10 2\n2 9\n");
  EXPECT_EQ(r.graph.labels(), (std::vector<std::string>{"2", "9", "10"}));
}

TEST(EdgeList, WeightsAndComments) {
  auto r = parse("# header\na b 2.5\n\nb c\n");
  ASSERT_EQ(r.graph.n(), 3u);
  EXPECT_DOUBLE_EQ(r.graph.edge_weight(0, 1), 2.5);
  EXPECT_DOUBLE_EQ(r.graph.weighted_degree(1), 3.5);
}

TEST(EdgeList, ReportsLineOfBadWeight) {
  try {
    parse("0 1\n1 2 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse("0 1 -1\n"), ParseError);
  EXPECT_THROW(parse("0 1 2 3\n"), ParseError);
  EXPECT_THROW(parse("0\n"), ParseError);
}

TEST(EdgeList, RoundTripsThroughWriter) {
  auto r = parse("a b 2\nb c\nd d\n");
  std::ostringstream out;
  write_edge_list(out, r.graph);
  auto again = parse(out.str());
  EXPECT_EQ(again.graph, r.graph);
}

TEST(Graph, RejectsBadInput) {
  std::vector<Edge> out_of_range{{0, 3, 1.0}};
  EXPECT_THROW(Graph::from_edges(2, out_of_range), ParameterError);
  std::vector<Edge> zero{{0, 1, 0.0}};
  EXPECT_THROW(Graph::from_edges(2, zero), ParameterError);
}

TEST(Transition, TriangleRowsAreUniform) {
  auto p = row_normalized_adjacency(testing::complete_graph(3));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_DOUBLE_EQ(p.at(r, c), r == c ? 0.0 : 0.5);
    }
  }
}

TEST(Transition, PathRows) {
  auto p = row_normalized_adjacency(testing::path_graph(3));
  EXPECT_DOUBLE_EQ(p.at(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(p.at(1, 1), 0.0);
  EXPECT_DOUBLE_EQ(p.at(1, 2), 0.5);
  EXPECT_DOUBLE_EQ(p.at(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(p.at(2, 1), 1.0);
}

TEST(Transition, WeightedStar) {
  std::vector<Edge> edges{{0, 1, 3.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  auto p = row_normalized_adjacency(Graph::from_edges(4, edges));
  EXPECT_DOUBLE_EQ(p.at(0, 1), 0.6);
  EXPECT_DOUBLE_EQ(p.at(0, 2), 0.2);
  EXPECT_DOUBLE_EQ(p.at(0, 3), 0.2);
}

TEST(Transition, RowsSumToOneOnRandomGraphs) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Graph g = testing::random_connected_graph(15, 0.2, rng, true);
    auto p = row_normalized_adjacency(g);
    for (std::size_t r = 0; r < g.n(); ++r) EXPECT_NEAR(p.row_sum(r), 1.0, 1e-12);
  }
}

std::size_t count_components(const std::vector<NodeId>& labels) {
  return std::set<NodeId>(labels.begin(), labels.end()).size();
}

TEST(Components, Counts) {
  EXPECT_EQ(count_components(connected_components(testing::complete_graph(3))), 1u);
  EXPECT_EQ(count_components(connected_components(
                testing::make_graph(4, {{0, 1}, {2, 3}}))),
            2u);
  EXPECT_EQ(count_components(connected_components(Graph::from_edges(4, {}))), 4u);
}

TEST(Components, LargestAndInducedSubgraph) {
  Graph g = testing::make_graph(6, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
  auto keep = largest_component(g);
  EXPECT_EQ(keep, (std::vector<NodeId>{2, 3, 4}));
  Graph sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.n(), 3u);
  EXPECT_EQ(sub.num_edges(), 3u);
}

}  // namespace
}  // namespace cove
