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

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "topolayout/error.hpp"
#include "topolayout/metrics.hpp"
#include "topolayout/vamana.hpp"

namespace topolayout {
namespace {

// Alpha-dominance pruning written out directly.
std::vector<PointId> prune_reference(std::vector<Neighbor> candidates, double alpha,
                                     std::size_t R, const PointSet& ps, PointId center) {
  std::sort(candidates.begin(), candidates.end());
  std::vector<Neighbor> pool;
  for (const auto& c : candidates) {
    if (c.id == center) continue;
    if (!pool.empty() && pool.back().id == c.id) continue;
    if (std::any_of(pool.begin(), pool.end(), [&](const Neighbor& p) { return p.id == c.id; })) continue;
    pool.push_back(c);
  }
  std::vector<PointId> kept;
  while (!pool.empty() && kept.size() < R) {
    const Neighbor best = pool.front();
    kept.push_back(best.id);
    std::vector<Neighbor> rest;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      const double d = oracle::distance(ps.row_ptr(best.id), ps.row_ptr(pool[i].id), ps.dim());
      if (alpha * d > pool[i].distance) rest.push_back(pool[i]);
    }
    pool = std::move(rest);
  }
  return kept;
}

TEST(RobustPruneTest, MatchesDirectAlphaDominance) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 30 + rng() % 60;
    const auto ps = oracle::gaussian_points(n, 6, rng());
    const PointId center = static_cast<PointId>(rng() % n);
    std::vector<Neighbor> candidates;
    for (PointId i = 0; i < n; ++i) {
      if (rng() % 2) continue;
      candidates.push_back({i, oracle::distance(ps.row_ptr(center), ps.row_ptr(i), ps.dim())});
    }
    const double alpha = trial % 3 == 0 ? 1.0 : 1.2 + 0.01 * (trial % 30);
    const std::size_t R = 1 + rng() % 12;
    EXPECT_EQ(robust_prune(candidates, alpha, R, ps, center),
              prune_reference(candidates, alpha, R, ps, center));
  }
}

TEST(GreedySearchTest, CompleteGraphFindsExactNeighbors) {
  const std::size_t n = 120;
  const auto ps = oracle::gaussian_points(n, 5, 9);
  VamanaGraph graph;
  graph.out_neighbors.resize(n);
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = 0; j < n; ++j) {
      if (i != j) graph.out_neighbors[i].push_back(j);
    }
  }
  const auto query = oracle::gaussian_points(1, 5, 99);
  const auto result = greedy_search(graph, ps, query[0], 10, 20);
  std::vector<std::pair<double, PointId>> truth;
  for (PointId i = 0; i < n; ++i) {
    truth.push_back({oracle::distance(query.row_ptr(0), ps.row_ptr(i), 5), i});
  }
  std::sort(truth.begin(), truth.end());
  ASSERT_EQ(result.nearest.size(), 10u);
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_EQ(result.nearest[k].id, truth[k].second);
    EXPECT_NEAR(result.nearest[k].distance, truth[k].first, 1e-12);
  }
  EXPECT_TRUE(std::is_sorted(result.visited.begin(), result.visited.end()));
}

TEST(BuildVamanaTest, DegreeBoundAndDeterminism) {
  const auto ps = oracle::gaussian_points(600, 10, 4);
  VamanaParams params;
  params.R = 16;
  params.L = 32;
  params.seed = 5;
  const auto g1 = build_vamana(ps, params);
  const auto g2 = build_vamana(ps, params);
  EXPECT_EQ(g1.out_neighbors, g2.out_neighbors);
  EXPECT_EQ(g1.medoid, g2.medoid);
  for (PointId i = 0; i < ps.size(); ++i) {
    const auto& out = g1.out_neighbors[i];
    EXPECT_LE(out.size(), params.R);
    EXPECT_EQ(std::count(out.begin(), out.end(), i), 0);
    EXPECT_EQ(std::set<PointId>(out.begin(), out.end()).size(), out.size());
  }
}

TEST(BuildVamanaTest, RejectsInvalidParameters) {
  const auto ps = oracle::gaussian_points(10, 2, 1);
  VamanaParams params;
  params.alpha = 0.9;
  EXPECT_THROW(build_vamana(ps, params), Error);
  params = {};
  params.R = 50;
  params.L = 10;
  EXPECT_THROW(build_vamana(ps, params), Error);
}

TEST(AmstTest, SymmetrizedEdgesCarryEuclideanWeights) {
  const auto ps = oracle::gaussian_points(200, 4, 8);
  VamanaParams params;
  params.R = 8;
  params.L = 16;
  const auto graph = build_vamana(ps, params);
  for (const auto& e : symmetrized_edges(ps, graph)) {
    EXPECT_LT(e.u, e.v);
    EXPECT_NEAR(e.w, oracle::distance(ps.row_ptr(e.u), ps.row_ptr(e.v), 4), 1e-12);
  }
}

TEST(AmstTest, SpansAndStaysCloseToExact) {
  const auto ps = oracle::gaussian_points(800, 8, 12);
  VamanaParams params;
  params.R = 32;
  params.L = 48;
  const auto approx = amst(ps, params);
  validate_spanning_tree(approx);
  const auto exact = oracle::complete_graph_mst(ps);
  const double w_exact = oracle::total_weight(exact);
  EXPECT_GE(approx.total_weight, w_exact * (1 - 1e-12));
  EXPECT_LE((approx.total_weight - w_exact) / w_exact, 1e-2);
}

TEST(AmstTest, RepairsDisconnectedGraphsWithNearestBridges) {
  // Three blobs whose graph edges never leave the blob.
  const std::size_t per = 30;
  const auto ps = oracle::blobs(3, per, 3, 50.0, 3);
  VamanaGraph graph;
  graph.out_neighbors.resize(ps.size());
  for (PointId i = 0; i < ps.size(); ++i) {
    const PointId base = static_cast<PointId>(i / per * per);
    for (PointId j = base; j < base + per; ++j) {
      if (j != i) graph.out_neighbors[i].push_back(j);
    }
  }
  const auto tree = amst_from_graph(ps, graph);
  validate_spanning_tree(tree);
  ASSERT_EQ(tree.bridge_edges.size(), 2u);
  // Every bridge is the closest pair between the blobs it joins, so the
  // repaired tree equals the exact EMST here.
  const auto exact = oracle::complete_graph_mst(ps);
  EXPECT_NEAR(tree.total_weight, oracle::total_weight(exact), 1e-9);
  for (std::size_t k : tree.bridge_edges) {
    const auto& e = tree.edges.at(k);
    EXPECT_NE(e.u / per, e.v / per);
  }
}

TEST(AmstTest, IrisLikeSmallSetHasZeroError) {
  const auto ps = oracle::gaussian_points(150, 4, 2);
  const auto approx = amst(ps, VamanaParams{});
  const auto exact = exact_emst(ps);
  EXPECT_EQ(rwe(approx, exact), 0.0);
}

}  // namespace
}  // namespace topolayout
