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

#include "topolayout/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <tuple>

#include "topolayout/error.hpp"
#include "topolayout/union_find.hpp"

namespace topolayout {

std::vector<PointId> MergeTree::members(NodeId id) const {
  std::vector<PointId> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const MergeNode& node = nodes.at(stack.back());
    stack.pop_back();
    if (node.is_leaf()) {
      out.push_back(static_cast<PointId>(node.id));
    } else {
      stack.push_back(node.children[0]);
      stack.push_back(node.children[1]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double MergeTree::internal_weight(NodeId id) const {
  std::vector<double> weights;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const MergeNode& node = nodes.at(stack.back());
    stack.pop_back();
    if (node.is_leaf()) continue;
    weights.push_back(node.merge_edge->w);
    stack.push_back(node.children[0]);
    stack.push_back(node.children[1]);
  }
  std::sort(weights.begin(), weights.end());
  double sum = 0.0;
  for (double w : weights) sum += w;
  return sum;
}

bool SimplifiedTree::is_leaf(const MergeTree& tree, NodeId id) const {
  if (!is_retained(id)) return false;
  const MergeNode& node = tree[id];
  return node.is_leaf() || !is_retained(node.children[0]);
}

bool SimplifiedTree::is_component_of_interest(NodeId id) const {
  return std::binary_search(components_of_interest.begin(),
                            components_of_interest.end(), id);
}

std::size_t PersistenceDiagram::infinite_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      pairs.begin(), pairs.end(), [](const PersistencePair& p) { return !p.is_finite(); }));
}

MergeTree build_merge_tree(const SpanningTree& tree) {
  validate_spanning_tree(tree);
  const std::size_t n = tree.n;
  MergeTree out;
  out.n_points = n;
  out.nodes.resize(2 * n - 1);
  for (NodeId i = 0; i < n; ++i) out.nodes[i].id = i;

  UnionFind uf(n);
  std::vector<NodeId> node_of_root(n);
  for (NodeId i = 0; i < n; ++i) node_of_root[i] = i;
  for (std::size_t k = 0; k < tree.edges.size(); ++k) {
    const WeightedEdge& e = tree.edges[k];
    const NodeId a = node_of_root[uf.find(e.u)];
    const NodeId b = node_of_root[uf.find(e.v)];
    const auto id = static_cast<NodeId>(n + k);
    MergeNode& node = out.nodes[id];
    node.id = id;
    node.size = out.nodes[a].size + out.nodes[b].size;
    node.birth = e.w;
    node.children = {std::min(a, b), std::max(a, b)};
    node.merge_edge = e;
    for (NodeId child : node.children) {
      out.nodes[child].death = e.w;
      out.nodes[child].parent = id;
    }
    node_of_root[uf.unite(e.u, e.v)] = id;
  }
  out.root = static_cast<NodeId>(out.nodes.size() - 1);
  return out;
}

PersistenceDiagram persistence_diagram(const SpanningTree& tree) {
  PersistenceDiagram d;
  d.pairs.reserve(tree.edges.size() + 1);
  for (double w : tree.sorted_weights()) d.pairs.push_back(PersistencePair{0.0, w});
  d.pairs.push_back(PersistencePair{0.0, kInfinity});
  return d;
}

SimplifiedTree simplify(const MergeTree& tree, std::size_t eta) {
  if (eta < 1) throw Error(ErrorKind::kInvalidArgument, "eta must be >= 1");
  const std::size_t total = tree.size();
  SimplifiedTree out;
  out.eta = eta;
  out.retained.assign(total, 1);
  std::vector<char> leaf(total, 0);
  for (NodeId id = 0; id < total; ++id) leaf[id] = tree[id].is_leaf();

  // A parent collapses when both children are working leaves and one of
  // them is smaller than eta.
  auto collapsible = [&](NodeId parent) {
    const MergeNode& p = tree[parent];
    if (leaf[parent] || p.is_leaf()) return false;
    const MergeNode& a = tree[p.children[0]];
    const MergeNode& b = tree[p.children[1]];
    return leaf[a.id] && leaf[b.id] && (a.size < eta || b.size < eta);
  };
  using Key = std::tuple<double, NodeId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  for (NodeId id = static_cast<NodeId>(tree.n_points); id < total; ++id) {
    if (collapsible(id)) queue.emplace(tree[id].birth, id);
  }
  while (!queue.empty()) {
    const NodeId id = std::get<1>(queue.top());
    queue.pop();
    if (!collapsible(id)) continue;
    const MergeNode& node = tree[id];
    for (NodeId child : node.children) {
      out.retained[child] = 0;
      leaf[child] = 0;
    }
    leaf[id] = 1;
    if (node.parent != kNoNode && collapsible(node.parent)) {
      queue.emplace(tree[node.parent].birth, node.parent);
    }
  }
  // Descendants of collapsed nodes are gone as well.
  for (NodeId id = static_cast<NodeId>(total); id-- > 0;) {
    const MergeNode& node = tree[id];
    if (node.is_leaf() || out.retained[id]) continue;
    for (NodeId child : node.children) out.retained[child] = 0;
  }
  for (NodeId id = 0; id < total; ++id) {
    if (out.retained[id] && leaf[id] && tree[id].size >= eta) {
      out.components_of_interest.push_back(id);
    }
  }
  return out;
}

std::vector<std::uint32_t> components_point_map(const SimplifiedTree& simplified,
                                                const MergeTree& tree) {
  std::vector<std::uint32_t> map(tree.n_points, kUnassigned);
  for (std::size_t c = 0; c < simplified.components_of_interest.size(); ++c) {
    for (PointId p : tree.members(simplified.components_of_interest[c])) {
      map[p] = static_cast<std::uint32_t>(c);
    }
  }
  return map;
}

std::size_t default_eta(std::size_t n) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(0.01 * n)));
}

}  // namespace topolayout
