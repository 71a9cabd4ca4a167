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

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "topolayout/point_set.hpp"
#include "topolayout/spanning_tree.hpp"

namespace topolayout {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Leaves are 0..n-1 (leaf i holds point i); the node created by the k-th
// edge of the sorted tree is n + k, so the root is the last node.
struct MergeNode {
  NodeId id = 0;
  std::uint32_t size = 1;
  double birth = 0.0;
  double death = kInfinity;
  std::array<NodeId, 2> children{kNoNode, kNoNode};
  NodeId parent = kNoNode;
  std::optional<WeightedEdge> merge_edge;

  bool is_leaf() const noexcept { return children[0] == kNoNode; }
  double persistence() const noexcept { return death - birth; }
};

struct MergeTree {
  std::size_t n_points = 0;
  std::vector<MergeNode> nodes;
  NodeId root = 0;

  const MergeNode& operator[](NodeId id) const { return nodes.at(id); }
  std::size_t size() const noexcept { return nodes.size(); }
  // Point ids under `id`, ascending.
  std::vector<PointId> members(NodeId id) const;
  // Sum of merge-edge weights strictly inside the subtree of `id`, added in
  // ascending order.
  double internal_weight(NodeId id) const;
};

struct SimplifiedTree {
  std::size_t eta = 1;
  std::vector<char> retained;  // per MergeTree node
  std::vector<NodeId> components_of_interest;  // ascending node id

  bool is_retained(NodeId id) const { return retained.at(id) != 0; }
  bool is_leaf(const MergeTree& tree, NodeId id) const;
  bool is_component_of_interest(NodeId id) const;
};

struct PersistencePair {
  double birth = 0.0;
  double death = kInfinity;

  bool is_finite() const noexcept { return death != kInfinity; }
  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  std::size_t infinite_count() const noexcept;
};

MergeTree build_merge_tree(const SpanningTree& tree);

// (0, w) for every edge plus one (0, inf), sorted by death.
PersistenceDiagram persistence_diagram(const SpanningTree& tree);

SimplifiedTree simplify(const MergeTree& tree, std::size_t eta);

inline constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

// Per point: index into components_of_interest, or kUnassigned.
std::vector<std::uint32_t> components_point_map(const SimplifiedTree& simplified,
                                                const MergeTree& tree);

std::size_t default_eta(std::size_t n);

}  // namespace topolayout
