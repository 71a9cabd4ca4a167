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
#include <span>
#include <vector>

#include "topolayout/point_set.hpp"
#include "topolayout/spanning_tree.hpp"

namespace topolayout {

struct VamanaParams {
  double alpha = 1.3;  // pruning distance factor, >= 1
  std::size_t R = 100;  // max out-degree
  std::size_t L = 100;  // search list size, >= R
  std::uint64_t seed = 0;
  std::size_t passes = 2;  // first pass runs at alpha = 1 when passes > 1
  unsigned threads = 1;    // > 1 enables the non-deterministic parallel build

  void validate() const;
};

struct VamanaGraph {
  std::vector<std::vector<PointId>> out_neighbors;
  PointId medoid = 0;
  VamanaParams params;  // as used, i.e. with R clamped to n - 1

  std::size_t size() const noexcept { return out_neighbors.size(); }
};

struct Neighbor {
  PointId id = 0;
  double distance = 0.0;

  friend bool operator<(const Neighbor& a, const Neighbor& b) noexcept {
    return a.distance < b.distance || (a.distance == b.distance && a.id < b.id);
  }
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct SearchResult {
  std::vector<Neighbor> nearest;  // k best, ascending
  std::vector<Neighbor> visited;  // every expanded vertex, ascending
};

/// Beam search from the medoid keeping the L closest discovered vertices
/// until all of them are expanded.
SearchResult greedy_search(const VamanaGraph& graph, const PointSet& points,
                           std::span<const double> query, std::size_t k,
                           std::size_t L);

/// alpha-dominance pruning: repeatedly keep the closest remaining candidate
/// p* and drop every v with alpha * d(p*, v) <= d(center, v). Candidate
/// distances are to `center`. Returns at most R ids, closest first.
std::vector<PointId> robust_prune(std::span<const Neighbor> candidates,
                                  double alpha, std::size_t R,
                                  const PointSet& points, PointId center);

VamanaGraph build_vamana(const PointSet& points, const VamanaParams& params);

/// MST of the symmetrized Vamana graph; disconnected results are bridged
/// with exact nearest cross-component pairs, smallest bridge first.
SpanningTree amst(const PointSet& points, const VamanaParams& params);
SpanningTree amst_from_graph(const PointSet& points, const VamanaGraph& graph);

/// Undirected edge set {u, v} of the graph (either direction), weighted by
/// Euclidean distance.
std::vector<WeightedEdge> symmetrized_edges(const PointSet& points,
                                            const VamanaGraph& graph);

}  // namespace topolayout
