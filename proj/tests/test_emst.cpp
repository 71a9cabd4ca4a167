// Copyright 2026 The topolayout Authors.
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

#include <variant>

#include "oracles.hpp"
#include "topolayout/error.hpp"
#include "topolayout/spanning_tree.hpp"

namespace topolayout {
namespace {

TEST(MstOfGraphTest, PicksTwoSmallestAcyclicEdges) {
  const std::vector<WeightedEdge> edges{{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}};
  const auto result = mst_of_graph(3, edges);
  ASSERT_TRUE(std::holds_alternative<SpanningTree>(result));
  const auto& tree = std::get<SpanningTree>(result);
  ASSERT_EQ(tree.edges.size(), 2u);
  EXPECT_EQ(tree.edges[0], (WeightedEdge{0, 1, 1.0}));
  EXPECT_EQ(tree.edges[1], (WeightedEdge{1, 2, 2.0}));
  EXPECT_EQ(tree.total_weight, 3.0);
}

TEST(MstOfGraphTest, DisconnectedInputGivesForest) {
  const std::vector<WeightedEdge> edges{{0, 1, 1.0}, {2, 3, 1.0}};
  const auto result = mst_of_graph(4, edges);
  ASSERT_TRUE(std::holds_alternative<Forest>(result));
  const auto& forest = std::get<Forest>(result);
  EXPECT_EQ(forest.trees.size(), 2u);
  EXPECT_NE(forest.component_of[0], forest.component_of[2]);
}

TEST(MstOfGraphTest, MatchesKruskalOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> weight(0.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<WeightedEdge> edges;
    std::vector<oracle::Edge> plain;
    for (PointId i = 1; i < n; ++i) {
      const PointId j = static_cast<PointId>(rng() % i);
      const double w = std::round(weight(rng) * 4) / 4;  // ties on purpose
      edges.push_back(make_edge(i, j, w));
      plain.push_back({std::min<std::size_t>(i, j), std::max<std::size_t>(i, j), w});
    }
    for (int extra = 0; extra < 40; ++extra) {
      const PointId a = static_cast<PointId>(rng() % n), b = static_cast<PointId>(rng() % n);
      if (a == b) continue;
      const double w = std::round(weight(rng) * 4) / 4;
      edges.push_back(make_edge(a, b, w));
      plain.push_back({std::min<std::size_t>(a, b), std::max<std::size_t>(a, b), w});
    }
    const auto tree = std::get<SpanningTree>(mst_of_graph(n, edges));
    const auto expected = oracle::kruskal(n, plain);
    EXPECT_DOUBLE_EQ(tree.total_weight, oracle::total_weight(expected));
    ASSERT_EQ(tree.edges.size(), expected.size());
  }
}

TEST(ExactEmstTest, TwoPointsGiveOneEdge) {
  const auto ps = PointSet::from_rows({{0.0, 0.0}, {3.0, 4.0}});
  const auto tree = exact_emst(ps);
  ASSERT_EQ(tree.edges.size(), 1u);
  EXPECT_EQ(tree.edges[0].w, 5.0);
}

TEST(ExactEmstTest, MatchesCompleteGraphKruskal) {
  for (std::size_t d : {2u, 5u, 16u, 33u}) {
    for (std::size_t n : {1u, 7u, 60u, 250u}) {
      const auto ps = oracle::gaussian_points(n, d, n * 100 + d);
      const auto tree = exact_emst(ps);
      const auto expected = oracle::complete_graph_mst(ps);
      ASSERT_EQ(tree.edges.size(), expected.size());
      const auto weights = tree.sorted_weights();
      for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_NEAR(weights[k], expected[k].w, 1e-12 * (1 + expected[k].w));
      }
      validate_spanning_tree(tree);
    }
  }
}

TEST(ExactEmstTest, ThreadCountDoesNotChangeTheTree) {
  const auto ps = oracle::gaussian_points(400, 12, 5);
  const auto one = exact_emst(ps);
  ExactEmstOptions options;
  options.threads = 3;
  const auto three = exact_emst(ps, options);
  EXPECT_EQ(one.edges, three.edges);
}

TEST(ExactEmstTest, DuplicatePointsGiveZeroEdges) {
  const auto ps = PointSet::from_rows({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}, {2.0, 1.0}});
  const auto tree = exact_emst(ps);
  EXPECT_EQ(tree.total_weight, 1.0);
  EXPECT_EQ(tree.edges[0].w, 0.0);
  EXPECT_EQ(tree.edges[1].w, 0.0);
}

TEST(SpanningTreeTest, RejectsCyclesAndMissingVertices) {
  EXPECT_THROW(make_spanning_tree(3, {{0, 1, 1.0}, {0, 1, 2.0}}), Error);
  EXPECT_THROW(make_spanning_tree(4, {{0, 1, 1.0}, {1, 2, 1.0}}), Error);
  EXPECT_THROW(make_spanning_tree(2, {{0, 5, 1.0}}), Error);
  const auto tree = make_spanning_tree(3, {{2, 1, 2.0}, {1, 0, 1.0}});
  EXPECT_EQ(tree.edges[0], (WeightedEdge{0, 1, 1.0}));
  EXPECT_EQ(tree.edges[1], (WeightedEdge{1, 2, 2.0}));
}

}  // namespace
}  // namespace topolayout
