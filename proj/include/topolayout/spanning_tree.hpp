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
#include <span>
#include <variant>
#include <vector>

#include "topolayout/point_set.hpp"

namespace topolayout {

/// Undirected edge stored with u < v.
struct WeightedEdge {
  PointId u = 0;
  PointId v = 0;
  double w = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Lexicographic (w, u, v); the single tie-breaking rule used everywhere an
/// edge order matters.
inline bool edge_less(const WeightedEdge& a, const WeightedEdge& b) noexcept {
  if (a.w != b.w) return a.w < b.w;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

WeightedEdge make_edge(PointId a, PointId b, double w);

struct SpanningTree {
  std::size_t n = 0;
  std::vector<WeightedEdge> edges;  // n - 1 edges, ascending by edge_less
  double total_weight = 0.0;
  // Indices into `edges` of bridges added by forest repair (approximate
  // trees only); empty for exact trees.
  std::vector<std::size_t> bridge_edges;

  double max_edge_weight() const noexcept {
    return edges.empty() ? 0.0 : edges.back().w;
  }
  std::vector<double> sorted_weights() const;
};

/// Result of Kruskal on a disconnected graph.
struct Forest {
  std::size_t n = 0;
  std::vector<std::vector<WeightedEdge>> trees;  // one per component
  std::vector<std::uint32_t> component_of;       // point -> index in `trees`
  std::vector<WeightedEdge> all_edges() const;
};

using MstResult = std::variant<SpanningTree, Forest>;

/// Builds a SpanningTree from an arbitrary edge list: canonicalizes, sorts,
/// and verifies it connects all n vertices without cycles.
SpanningTree make_spanning_tree(std::size_t n, std::vector<WeightedEdge> edges);

/// Throws kMalformedTree unless the tree is sorted, acyclic and spanning.
void validate_spanning_tree(const SpanningTree& tree);

/// Kruskal over edges sorted by (w, u, v).
MstResult mst_of_graph(std::size_t n, std::span<const WeightedEdge> candidates);

struct ExactEmstOptions {
  // Workers for the dense distance scan; results do not depend on it.
  unsigned threads = 1;
};

/// Exact EMST by dense O(n^2) Prim.
SpanningTree exact_emst(const PointSet& points,
                        const ExactEmstOptions& options = {});

}  // namespace topolayout
