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

#include <random>
#include <string>

#include "oracles.hpp"
#include "topolayout/error.hpp"
#include "topolayout/filtration.hpp"
#include "topolayout/layout.hpp"
#include "topolayout/spanning_tree.hpp"

namespace topolayout {
namespace {

PlacedComponent random_component(std::mt19937_64& rng, PointId first, std::size_t size) {
  std::normal_distribution<double> normal;
  std::vector<PointId> ids;
  std::vector<Point2> coords;
  for (std::size_t i = 0; i < size; ++i) {
    ids.push_back(first + static_cast<PointId>(i));
    coords.push_back({normal(rng) * 3, normal(rng)});
  }
  return PlacedComponent::from(std::move(ids), std::move(coords));
}

TEST(PlaceComponentsTest, SeparatesByTheMergeLength) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_component(rng, 0, 1 + rng() % 12);
    auto b = random_component(rng, 100, 1 + rng() % 12);
    const double l = 0.5 + static_cast<double>(rng() % 50) / 10.0;
    const PointId pa = a.ids[rng() % a.ids.size()];
    const PointId pb = b.ids[rng() % b.ids.size()];
    const auto placement = place_components(a, b, pa, pb, l);
    EXPECT_NEAR(placement.motion_a.scale(), 1.0, 1e-12);
    EXPECT_NEAR(placement.motion_b.scale(), 1.0, 1e-12);
    a.apply(placement.motion_a);
    b.apply(placement.motion_b);
    for (const auto& p : a.coords) EXPECT_LE(p.y, 1e-9);
    for (const auto& p : b.coords) EXPECT_GE(p.y, l - 1e-9);
    const Point2 qa = a.coords[a.index_of(placement.qa)];
    const Point2 qb = b.coords[b.index_of(placement.qb)];
    EXPECT_NEAR(qa.x, 0.0, 1e-9);
    EXPECT_NEAR(qa.y, 0.0, 1e-9);
    EXPECT_NEAR(qb.x, 0.0, 1e-9);
    EXPECT_NEAR(qb.y, l, 1e-9);
    EXPECT_NEAR(oracle::min_cross_distance(a.coords, b.coords), l, 1e-9);
  }
}

TEST(PlaceComponentsTest, RejectsNegativeLength) {
  std::mt19937_64 rng(1);
  const auto a = random_component(rng, 0, 3);
  const auto b = random_component(rng, 10, 3);
  EXPECT_THROW(place_components(a, b, 0, 10, -1.0), Error);
  EXPECT_THROW(place_components(a, b, 99, 10, 1.0), Error);
}

TEST(TopomapTest, PlanarMstReproducesTheInputMst) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (std::size_t d : {3u, 10u}) {
      const auto ps = oracle::gaussian_points(120, d, seed * 10 + d);
      const auto tree = exact_emst(ps);
      const auto layout = topomap_project(ps.size(), tree, {}, ScalingParams{});
      const auto planar = oracle::planar_mst_weights(layout.coords);
      const auto expected = tree.sorted_weights();
      ASSERT_EQ(planar.size(), expected.size());
      for (std::size_t k = 0; k < planar.size(); ++k) {
        EXPECT_NEAR(planar[k], expected[k], 1e-9 * (1 + expected[k])) << "k=" << k;
      }
    }
  }
}

TEST(TopomapTest, EveryMergeIsSeparatedByItsEdgeLength) {
  const auto ps = oracle::gaussian_points(80, 5, 17);
  const auto tree = exact_emst(ps);
  std::size_t merges = 0;
  topomap_project(ps.size(), tree, {}, ScalingParams{}, [&](const MergeEvent& event) {
    ++merges;
    EXPECT_NEAR(oracle::min_cross_distance(event.side_a, event.side_b), event.edge.w,
                1e-9 * (1 + event.edge.w));
  });
  EXPECT_EQ(merges, ps.size() - 1);
}

TEST(TopomapTest, ComponentsScaleByTheScalingLaw) {
  const auto ps = oracle::blobs(3, 40, 4, 12.0, 8);
  const auto tree = exact_emst(ps);
  const auto mt = build_merge_tree(tree);
  const auto simplified = simplify(mt, 20);
  const auto map = components_point_map(simplified, mt);
  ASSERT_EQ(simplified.components_of_interest.size(), 3u);

  for (double alpha_max : {kInfinity, 3.0}) {
    ScalingParams params;
    params.c = 2.0;
    params.alpha_max = alpha_max;
    const auto plain = topomap_project(ps.size(), tree, {}, params);
    const auto scaled = topomap_project(ps.size(), tree, map, params);
    double l_max = 0.0;
    for (const auto& e : tree.edges) l_max = std::max(l_max, e.w);
    EXPECT_EQ(scaled.l_max, l_max);

    for (std::uint32_t c = 0; c < 3; ++c) {
      std::vector<double> internal;
      std::size_t size = 0;
      for (const auto& e : tree.edges) {
        if (map[e.u] == c && map[e.v] == c) internal.push_back(e.w);
      }
      for (auto m : map) size += m == c;
      const double l_avg = oracle::sum_ascending(internal, 1.0) / static_cast<double>(size - 1);
      const double alpha = std::min(params.c * l_max / l_avg, alpha_max);
      EXPECT_EQ(scaled.applied_scale[c], alpha);
      EXPECT_EQ(scaled.component_sizes[c], size);

      // Internal shape is the unscaled one times alpha, up to a rigid motion.
      std::vector<PointId> members;
      for (PointId i = 0; i < ps.size(); ++i) {
        if (map[i] == c) members.push_back(i);
      }
      for (std::size_t i = 0; i < members.size(); i += 7) {
        for (std::size_t j = i + 1; j < members.size(); j += 5) {
          const double before = distance(plain.coords[members[i]], plain.coords[members[j]]);
          const double after = distance(scaled.coords[members[i]], scaled.coords[members[j]]);
          EXPECT_NEAR(after, alpha * before, 1e-8 * (1 + after));
        }
      }
    }
  }
}

TEST(TopomapTest, ZeroLengthComponentWarnsAndUsesAlphaMax) {
  const auto ps = PointSet::from_rows({{0, 0}, {0, 0}, {0, 0}, {5, 0}});
  const auto tree = exact_emst(ps);
  const std::vector<std::uint32_t> map{0, 0, 0, kUnassigned};
  std::vector<std::string> warnings;
  const auto previous = set_warning_handler(
      [&](std::string_view message) { warnings.emplace_back(message); });
  ScalingParams params;
  params.alpha_max = 4.0;
  const auto layout = topomap_project(ps.size(), tree, map, params);
  set_warning_handler(previous);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("zero average edge length"), std::string::npos);
  EXPECT_EQ(layout.applied_scale[0], 4.0);
}

TEST(TopomapTest, RejectsBadInputs) {
  const auto ps = oracle::gaussian_points(5, 2, 1);
  const auto tree = exact_emst(ps);
  EXPECT_THROW(topomap_project(4, tree, {}, ScalingParams{}), Error);
  ScalingParams bad;
  bad.c = 0.5;
  EXPECT_THROW(topomap_project(5, tree, {}, bad), Error);
  const std::vector<std::uint32_t> short_map{0, 0};
  EXPECT_THROW(topomap_project(5, tree, short_map, ScalingParams{}), Error);
}

TEST(TopomapTest, OutputIsDeterministic) {
  const auto ps = oracle::gaussian_points(200, 6, 3);
  const auto tree = exact_emst(ps);
  const auto a = topomap_project(ps.size(), tree, {}, ScalingParams{});
  const auto b = topomap_project(ps.size(), tree, {}, ScalingParams{});
  EXPECT_EQ(a.coords, b.coords);
}

}  // namespace
}  // namespace topolayout
