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
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "topolayout/geometry.hpp"
#include "topolayout/point_set.hpp"
#include "topolayout/spanning_tree.hpp"

namespace topolayout {

struct ScalingParams {
  double c = 2.0;
  double alpha_max = std::numeric_limits<double>::infinity();

  void validate() const;
};

struct PlacedComponent {
  std::vector<PointId> ids;
  std::vector<Point2> coords;     // parallel to ids
  std::vector<std::size_t> hull;  // counter-clockwise indices into ids

  // Computes the hull of the given coordinates.
  static PlacedComponent from(std::vector<PointId> ids, std::vector<Point2> coords);
  std::size_t index_of(PointId id) const;
  void apply(const Similarity2& motion);
};

struct Placement {
  Similarity2 motion_a;  // Ca ends up in y <= 0 with qa at the origin
  Similarity2 motion_b;  // Cb ends up in y >= l with qb at (0, l)
  PointId qa = 0;
  PointId qb = 0;
};

Placement place_components(const PlacedComponent& a, const PlacedComponent& b,
                           PointId pa, PointId pb, double l);

// Scales about the centroid by min(c * l_max / L_avg, alpha_max) and
// returns the factor.
double scale_component(PlacedComponent& component, double l_avg, double l_max,
                       const ScalingParams& params);

struct Layout2D {
  std::vector<Point2> coords;
  std::vector<std::uint32_t> component_of;   // kUnassigned when outside
  std::vector<double> applied_scale;         // per component of interest
  std::vector<std::vector<Point2>> hulls;    // per component of interest
  std::vector<std::size_t> component_sizes;  // per component of interest
  double l_max = 0.0;
};

// World coordinates of both sides right after a merge is placed.
struct MergeEvent {
  WeightedEdge edge;
  std::span<const Point2> side_a;
  std::span<const Point2> side_b;
};
using MergeObserver = std::function<void(const MergeEvent&)>;

// `component_of` holds a component index or kUnassigned per point; an empty
// vector means no highlighted components.
Layout2D topomap_project(std::size_t n, const SpanningTree& tree,
                         std::span<const std::uint32_t> component_of,
                         const ScalingParams& params,
                         const MergeObserver& observer = {});

}  // namespace topolayout
