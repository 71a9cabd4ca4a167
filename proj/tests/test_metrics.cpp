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

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "topolayout/error.hpp"
#include "topolayout/metrics.hpp"

namespace topolayout {
namespace {

constexpr GroundMetric kMetrics[] = {GroundMetric::kLInf, GroundMetric::kL1, GroundMetric::kL2};

PersistenceDiagram random_diagram(std::mt19937_64& rng, std::size_t max_points, bool zero_birth,
                                  bool dyadic) {
  std::uniform_real_distribution<double> u(0.0, 4.0);
  auto value = [&] { return dyadic ? static_cast<double>(rng() % 32) / 8.0 : u(rng); };
  PersistenceDiagram d;
  const std::size_t k = rng() % (max_points + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const double b = zero_birth ? 0.0 : value();
    d.pairs.push_back({b, b + value()});
  }
  d.pairs.push_back({0.0, kInfinity});
  return d;
}

void expect_matches_enumeration(const PersistenceDiagram& a, const PersistenceDiagram& b,
                                double tolerance, const std::string& where) {
  for (GroundMetric metric : kMetrics) {
    for (double order : {1.0, 2.0}) {
      const auto truth = oracle::enumerate(a, b, order, metric);
      EXPECT_NEAR(bottleneck_distance(a, b, metric), truth.bottleneck, tolerance)
          << where << " metric " << to_string(metric);
      EXPECT_NEAR(wasserstein_distance(a, b, order, metric), truth.wasserstein, tolerance)
          << where << " metric " << to_string(metric) << " order " << order;
    }
  }
}

TEST(DiagramDistanceTest, GeneralDiagramsMatchEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_diagram(rng, 5, false, false);
    const auto b = random_diagram(rng, 5, false, false);
    expect_matches_enumeration(a, b, 1e-9, "trial " + std::to_string(trial));
  }
}

TEST(DiagramDistanceTest, ZeroBirthDiagramsMatchEnumeration) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_diagram(rng, 6, true, false);
    const auto b = random_diagram(rng, 6, true, false);
    expect_matches_enumeration(a, b, 1e-9, "trial " + std::to_string(trial));
  }
}

TEST(DiagramDistanceTest, DyadicGridIsExact) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const bool zero_birth = trial % 2 == 0;
    const auto a = random_diagram(rng, 5, zero_birth, true);
    const auto b = random_diagram(rng, 5, zero_birth, true);
    for (GroundMetric metric : {GroundMetric::kLInf, GroundMetric::kL1}) {
      const auto truth = oracle::enumerate(a, b, 1.0, metric);
      EXPECT_EQ(bottleneck_distance(a, b, metric), truth.bottleneck) << "trial " << trial;
      EXPECT_EQ(wasserstein_distance(a, b, 1.0, metric), truth.wasserstein) << "trial " << trial;
    }
  }
}

// Terms k * 2^-40 with |k| < 2^50 sum exactly in 128-bit fixed point, and
// the int128 to double conversion rounds to nearest even.
TEST(ExactSumTest, MatchesFixedPointReference) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> terms;
    __int128 total = 0;
    const std::size_t count = 1 + rng() % 12;
    for (std::size_t i = 0; i < count; ++i) {
      const std::int64_t k =
          static_cast<std::int64_t>(rng() >> (14 + rng() % 40)) * (rng() % 2 ? 1 : -1);
      terms.push_back(std::ldexp(static_cast<double>(k), -40));
      total += k;
    }
    const double expected = std::ldexp(static_cast<double>(total), -40);
    EXPECT_EQ(exact_sum(terms), expected) << "trial " << trial;
  }
  EXPECT_EQ(exact_sum(std::vector<double>{1e16, 1.0, -1e16}), 1.0);
  EXPECT_EQ(exact_sum(std::vector<double>{0.1, 0.2, -0.3}), 2.7755575615628914e-17);
  EXPECT_EQ(exact_sum(std::vector<double>{}), 0.0);
}

TEST(DiagramDistanceTest, EqualCostMatchingsGiveOneValue) {
  // Crossing and non-crossing matchings have the same real cost here.
  PersistenceDiagram a{{{0, 2.5025208068967948}, {0, 2.6457781587580245}, {0, kInfinity}}};
  PersistenceDiagram b{{{0, 3.8793447470197764}, {0, 4.0634187151941612}, {0, kInfinity}}};
  const auto truth = oracle::enumerate(a, b, 1.0, GroundMetric::kLInf);
  EXPECT_EQ(wasserstein_distance(a, b), truth.wasserstein);
  EXPECT_EQ(wasserstein_distance(b, a), truth.wasserstein);
}

TEST(DiagramDistanceTest, MetricAxioms) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const bool zero_birth = trial % 2 == 0;
    const auto a = random_diagram(rng, 8, zero_birth, false);
    const auto b = random_diagram(rng, 8, zero_birth, false);
    const auto c = random_diagram(rng, 8, zero_birth, false);
    for (GroundMetric m : kMetrics) {
      EXPECT_EQ(bottleneck_distance(a, a, m), 0.0);
      EXPECT_EQ(wasserstein_distance(a, a, 1.0, m), 0.0);
      EXPECT_NEAR(wasserstein_distance(a, b, 1.0, m), wasserstein_distance(b, a, 1.0, m), 1e-12);
      EXPECT_NEAR(bottleneck_distance(a, b, m), bottleneck_distance(b, a, m), 1e-12);
      EXPECT_LE(wasserstein_distance(a, c, 1.0, m),
                wasserstein_distance(a, b, 1.0, m) + wasserstein_distance(b, c, 1.0, m) + 1e-9);
      EXPECT_LE(bottleneck_distance(a, c, m),
                bottleneck_distance(a, b, m) + bottleneck_distance(b, c, m) + 1e-9);
      EXPECT_LE(bottleneck_distance(a, b, m), wasserstein_distance(a, b, 1.0, m) + 1e-12);
    }
  }
}

TEST(DiagramDistanceTest, MatchingCostsAgreeWithDistances) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_diagram(rng, 7, trial % 2 == 0, false);
    const auto b = random_diagram(rng, 7, trial % 2 == 0, false);
    const auto wm = wasserstein_matching(a, b, 1.0, GroundMetric::kL2);
    EXPECT_NEAR(wm.cost, wasserstein_distance(a, b, 1.0, GroundMetric::kL2), 1e-12);
    const auto bm = bottleneck_matching(a, b);
    EXPECT_NEAR(bm.cost, bottleneck_distance(a, b), 1e-12);
  }
}

TEST(DiagramDistanceTest, NormalizedDiagramsAreScaleInvariant) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_diagram(rng, 6, true, false);
    const auto b = random_diagram(rng, 6, true, false);
    auto scale = [](PersistenceDiagram d, double s) {
      for (auto& p : d.pairs) {
        if (p.is_finite()) p = {p.birth * s, p.death * s};
      }
      return d;
    };
    const double direct = wasserstein_distance(normalize_diagram(a), normalize_diagram(b));
    const double scaled =
        wasserstein_distance(normalize_diagram(scale(a, 8.0)), normalize_diagram(scale(b, 8.0)));
    EXPECT_NEAR(direct, scaled, 1e-12);
  }
}

TEST(DiagramDistanceTest, NormalizedWassersteinDividesByLargerCount) {
  PersistenceDiagram a{{{0, 1}, {0, 3}, {0, kInfinity}}};
  PersistenceDiagram b{{{0, 1}, {0, kInfinity}}};
  EXPECT_EQ(wasserstein_distance(a, b), 1.5);
  EXPECT_EQ(normalized_wasserstein(a, b), 0.75);
}

TEST(DiagramDistanceTest, InfiniteCountMismatchThrows) {
  PersistenceDiagram a{{{0, 1}, {0, kInfinity}}};
  PersistenceDiagram b{{{0, 1}}};
  EXPECT_THROW(bottleneck_distance(a, b), Error);
  EXPECT_THROW(wasserstein_distance(a, b), Error);
}

TEST(RweTest, RelativeTotalWeightExcess) {
  const auto exact = make_spanning_tree(3, {{0, 1, 1.0}, {1, 2, 2.0}});
  const auto approx = make_spanning_tree(3, {{0, 1, 1.0}, {0, 2, 3.0}});
  EXPECT_DOUBLE_EQ(rwe(approx, exact), 1.0 / 3.0);
  EXPECT_EQ(rwe(exact, exact), 0.0);
  const auto zero = make_spanning_tree(2, {{0, 1, 0.0}});
  EXPECT_THROW(rwe(zero, zero), Error);
}

TEST(GroundMetricTest, NamesRoundTrip) {
  for (GroundMetric m : kMetrics) EXPECT_EQ(parse_ground_metric(to_string(m)), m);
  EXPECT_THROW(parse_ground_metric("l3"), Error);
}

}  // namespace
}  // namespace topolayout
