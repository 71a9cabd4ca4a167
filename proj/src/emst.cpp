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

#include <algorithm>
#include <barrier>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "topolayout/error.hpp"
#include "topolayout/spanning_tree.hpp"
#include "topolayout/union_find.hpp"

namespace topolayout {

WeightedEdge make_edge(PointId a, PointId b, double w) {
  if (a == b) {
    throw Error(ErrorKind::kInvalidArgument,
                "self-loop on vertex " + std::to_string(a));
  }
  return a < b ? WeightedEdge{a, b, w} : WeightedEdge{b, a, w};
}

std::vector<double> SpanningTree::sorted_weights() const {
  std::vector<double> w;
  w.reserve(edges.size());
  for (const auto& e : edges) w.push_back(e.w);
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<WeightedEdge> Forest::all_edges() const {
  std::vector<WeightedEdge> out;
  for (const auto& t : trees) out.insert(out.end(), t.begin(), t.end());
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

void validate_spanning_tree(const SpanningTree& tree) {
  if (tree.n == 0) throw Error(ErrorKind::kMalformedTree, "tree has no vertices");
  if (tree.edges.size() + 1 != tree.n) {
    throw Error(ErrorKind::kMalformedTree,
                "tree on " + std::to_string(tree.n) + " vertices has " +
                    std::to_string(tree.edges.size()) + " edges");
  }
  UnionFind uf(tree.n);
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const auto& e = tree.edges[i];
    if (e.u >= e.v || e.v >= tree.n) {
      throw Error(ErrorKind::kMalformedTree,
                  "edge " + std::to_string(i) + " is not canonical or out of range");
    }
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw Error(ErrorKind::kMalformedTree,
                  "edge " + std::to_string(i) + " has invalid weight");
    }
    if (i > 0 && edge_less(e, tree.edges[i - 1])) {
      throw Error(ErrorKind::kMalformedTree, "edges are not sorted by (w, u, v)");
    }
    if (uf.unite(e.u, e.v) == UnionFind::npos) {
      throw Error(ErrorKind::kMalformedTree,
                  "edge " + std::to_string(i) + " closes a cycle");
    }
  }
}

SpanningTree make_spanning_tree(std::size_t n, std::vector<WeightedEdge> edges) {
  for (auto& e : edges) e = make_edge(e.u, e.v, e.w);
  std::sort(edges.begin(), edges.end(), edge_less);
  SpanningTree tree;
  tree.n = n;
  tree.edges = std::move(edges);
  for (const auto& e : tree.edges) tree.total_weight += e.w;
  validate_spanning_tree(tree);
  return tree;
}

MstResult mst_of_graph(std::size_t n, std::span<const WeightedEdge> candidates) {
  if (n == 0) throw Error(ErrorKind::kEmptyInput, "graph has no vertices");
  std::vector<WeightedEdge> sorted;
  sorted.reserve(candidates.size());
  for (const auto& e : candidates) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") references a vertex outside [0, " + std::to_string(n) +
                      ")");
    }
    if (!std::isfinite(e.w)) {
      throw Error(ErrorKind::kInvalidArgument, "edge weight is not finite");
    }
    if (e.u == e.v) continue;
    sorted.push_back(make_edge(e.u, e.v, e.w));
  }
  std::sort(sorted.begin(), sorted.end(), edge_less);

  UnionFind uf(n);
  std::vector<WeightedEdge> chosen;
  chosen.reserve(n - 1);
  for (const auto& e : sorted) {
    if (uf.unite(e.u, e.v) != UnionFind::npos) {
      chosen.push_back(e);
      if (chosen.size() + 1 == n) break;
    }
  }

  if (chosen.size() + 1 == n) {
    SpanningTree tree;
    tree.n = n;
    tree.edges = std::move(chosen);
    for (const auto& e : tree.edges) tree.total_weight += e.w;
    return tree;
  }

  Forest forest;
  forest.n = n;
  forest.component_of.assign(n, 0);
  std::vector<std::uint32_t> index_of_root(n, UnionFind::npos);
  for (PointId v = 0; v < n; ++v) {
    const auto root = uf.find(v);
    if (index_of_root[root] == UnionFind::npos) {
      index_of_root[root] = static_cast<std::uint32_t>(forest.trees.size());
      forest.trees.emplace_back();
    }
    forest.component_of[v] = index_of_root[root];
  }
  for (const auto& e : chosen) {
    forest.trees[forest.component_of[e.u]].push_back(e);
  }
  return forest;
}

namespace {

struct PrimState {
  const PointSet* points = nullptr;
  std::vector<double> key;  // squared distance to the tree
  std::vector<PointId> parent;
  std::vector<char> in_tree;
  PointId current = 0;
};

struct Candidate {
  double key = std::numeric_limits<double>::infinity();
  PointId id = std::numeric_limits<PointId>::max();

  bool better_than(const Candidate& o) const noexcept {
    return key < o.key || (key == o.key && id < o.id);
  }
};

Candidate relax_range(PrimState& s, std::size_t begin, std::size_t end) {
  const double* cur = s.points->row_ptr(s.current);
  const std::size_t dim = s.points->dim();
  Candidate best;
  for (std::size_t v = begin; v < end; ++v) {
    if (s.in_tree[v]) continue;
    const double d = detail::squared_distance(cur, s.points->row_ptr(v), dim);
    if (d < s.key[v]) {
      s.key[v] = d;
      s.parent[v] = s.current;
    }
    const Candidate c{s.key[v], static_cast<PointId>(v)};
    if (c.better_than(best)) best = c;
  }
  return best;
}

}  // namespace

SpanningTree exact_emst(const PointSet& points, const ExactEmstOptions& options) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorKind::kEmptyInput, "point set is empty");
  for (double x : points.coords()) {
    if (!std::isfinite(x)) {
      throw Error(ErrorKind::kInvalidArgument, "non-finite coordinate");
    }
  }

  PrimState s;
  s.points = &points;
  s.key.assign(n, std::numeric_limits<double>::infinity());
  s.parent.assign(n, 0);
  s.in_tree.assign(n, 0);
  s.in_tree[0] = 1;
  s.current = 0;

  std::vector<WeightedEdge> edges;
  edges.reserve(n ? n - 1 : 0);
  auto commit = [&](const Candidate& best) {
    const PointId v = best.id;
    s.in_tree[v] = 1;
    edges.push_back(make_edge(s.parent[v], v, std::sqrt(best.key)));
    s.current = v;
  };

  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads,
                                      static_cast<unsigned>(n / 1024 + 1)));
  if (threads == 1) {
    for (std::size_t step = 1; step < n; ++step) commit(relax_range(s, 0, n));
  } else {
    std::vector<Candidate> local(threads);
    std::size_t step = 1;
    bool done = n <= 1;
    auto on_phase = [&]() noexcept {
      Candidate best;
      for (const auto& c : local) {
        if (c.better_than(best)) best = c;
      }
      commit(best);
      done = ++step >= n;
    };
    std::barrier sync(static_cast<std::ptrdiff_t>(threads), on_phase);
    auto worker = [&](unsigned t) {
      const std::size_t begin = n * t / threads;
      const std::size_t end = n * (t + 1) / threads;
      while (!done) {
        local[t] = relax_range(s, begin, end);
        sync.arrive_and_wait();
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
  }

  std::sort(edges.begin(), edges.end(), edge_less);
  SpanningTree tree;
  tree.n = n;
  tree.edges = std::move(edges);
  for (const auto& e : tree.edges) tree.total_weight += e.w;
  return tree;
}

}  // namespace topolayout
