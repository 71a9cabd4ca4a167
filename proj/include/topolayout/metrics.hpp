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

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topolayout/filtration.hpp"
#include "topolayout/spanning_tree.hpp"

namespace topolayout {

enum class GroundMetric { kLInf, kL1, kL2 };

// Pairs index finite points of the two diagrams (in their stored order);
// kDiagonal marks a match to the diagonal projection.
struct DiagramMatching {
  static constexpr std::size_t kDiagonal = std::numeric_limits<std::size_t>::max();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double cost = 0.0;
};

// (W(approx) - W(exact)) / W(exact).
double rwe(const SpanningTree& approx, const SpanningTree& exact);

// Divides finite coordinates by the largest finite death.
PersistenceDiagram normalize_diagram(const PersistenceDiagram& d);

double pair_cost(const PersistencePair& a, const PersistencePair& b, GroundMetric metric);
double diagonal_cost(const PersistencePair& a, GroundMetric metric);

double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                           GroundMetric metric = GroundMetric::kLInf);
DiagramMatching bottleneck_matching(const PersistenceDiagram& d1,
                                    const PersistenceDiagram& d2,
                                    GroundMetric metric = GroundMetric::kLInf);

double wasserstein_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                            double order = 1.0, GroundMetric metric = GroundMetric::kLInf);
DiagramMatching wasserstein_matching(const PersistenceDiagram& d1,
                                     const PersistenceDiagram& d2, double order = 1.0,
                                     GroundMetric metric = GroundMetric::kLInf);

// Wasserstein distance divided by the larger finite point count.
double normalized_wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                              double order = 1.0,
                              GroundMetric metric = GroundMetric::kLInf);

// Sum of cost^order over the matching, summed in ascending order, then
// raised to 1/order. Used for order != 1 and for the L2 ground metric.
double canonical_wasserstein_sum(std::vector<double> costs, double order);

// Correctly rounded sum of `terms`. Order-1 distances under L-inf and L1
// sum the matched coordinates with it, so every optimal matching yields the
// same double.
double exact_sum(std::span<const double> terms);

const char* to_string(GroundMetric metric);
GroundMetric parse_ground_metric(const std::string& name);

}  // namespace topolayout
