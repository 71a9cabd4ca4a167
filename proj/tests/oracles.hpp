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

// Brute-force reference implementations used as test oracles. None of them
// call into the library beyond plain data types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "topolayout/filtration.hpp"
#include "topolayout/geometry.hpp"
#include "topolayout/metrics.hpp"
#include "topolayout/point_set.hpp"

namespace oracle {

using topolayout::PointSet;

inline PointSet gaussian_points(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> coords(n * d);
  for (double& x : coords) x = normal(rng);
  return PointSet(n, d, std::move(coords));
}

// Well-separated isotropic blobs: centers on a line `gap` apart.
inline PointSet blobs(std::size_t blobs, std::size_t per_blob, std::size_t d, double gap,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> coords;
  for (std::size_t b = 0; b < blobs; ++b) {
    for (std::size_t i = 0; i < per_blob; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        coords.push_back(normal(rng) + (k == 0 ? gap * static_cast<double>(b) : 0.0));
      }
    }
  }
  return PointSet(blobs * per_blob, d, std::move(coords));
}

inline double distance(const double* a, const double* b, std::size_t d) {
  long double s = 0.0L;
  for (std::size_t k = 0; k < d; ++k) {
    const long double t = static_cast<long double>(a[k]) - b[k];
    s += t * t;
  }
  return static_cast<double>(std::sqrt(s));
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

struct Edge {
  std::size_t u, v;
  double w;
};

// Kruskal on an explicit edge list; returns the chosen edges in order.
inline std::vector<Edge> kruskal(std::size_t n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  Dsu dsu(n);
  std::vector<Edge> out;
  for (const auto& e : edges) {
    if (dsu.unite(e.u, e.v)) out.push_back(e);
  }
  return out;
}

// Kruskal over all pairs with the plain scalar distance.
inline std::vector<Edge> complete_graph_mst(const PointSet& points) {
  std::vector<Edge> edges;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({i, j, distance(points.row_ptr(i), points.row_ptr(j), points.dim())});
    }
  }
  return kruskal(n, std::move(edges));
}

inline double total_weight(const std::vector<Edge>& edges) {
  double s = 0.0;
  for (const auto& e : edges) s += e.w;
  return s;
}

// Ascending MST edge lengths of planar points.
inline std::vector<double> planar_mst_weights(const std::vector<topolayout::Point2>& pts) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      edges.push_back({i, j, std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y)});
    }
  }
  std::vector<double> w;
  for (const auto& e : kruskal(pts.size(), std::move(edges))) w.push_back(e.w);
  std::sort(w.begin(), w.end());
  return w;
}

inline double min_cross_distance(std::span<const topolayout::Point2> a,
                                 std::span<const topolayout::Point2> b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a) {
    for (const auto& q : b) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
  }
  return best;
}

// Jarvis march; counter-clockwise from the lowest then leftmost point,
// collinear boundary points dropped.
inline std::vector<topolayout::Point2> gift_wrap(std::vector<topolayout::Point2> pts) {
  using topolayout::Point2;
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() <= 1) return pts;
  auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  auto dist2 = [](const Point2& a, const Point2& b) {
    return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
  };
  std::vector<Point2> hull;
  std::size_t current = 0;
  do {
    hull.push_back(pts[current]);
    std::size_t next = current == 0 ? 1 : 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == current) continue;
      const double c = cross(pts[current], pts[next], pts[i]);
      // Most clockwise candidate; among collinear ones the farthest.
      if (c < 0 || (c == 0 && dist2(pts[current], pts[i]) > dist2(pts[current], pts[next]))) {
        next = i;
      }
    }
    current = next;
  } while (current != 0 && hull.size() <= pts.size());
  return hull;
}

struct DiagramDistances {
  double bottleneck;
  double wasserstein;
};

inline double ground(const topolayout::PersistencePair& a, const topolayout::PersistencePair& b,
                     topolayout::GroundMetric m) {
  const double db = std::abs(a.birth - b.birth);
  const double dd = std::abs(a.death - b.death);
  switch (m) {
    case topolayout::GroundMetric::kL1:
      return db + dd;
    case topolayout::GroundMetric::kL2:
      return std::hypot(db, dd);
    default:
      return std::max(db, dd);
  }
}

inline double to_diagonal(const topolayout::PersistencePair& a, topolayout::GroundMetric m) {
  const double span = a.death - a.birth;
  switch (m) {
    case topolayout::GroundMetric::kL1:
      return span;
    case topolayout::GroundMetric::kL2:
      return span / std::sqrt(2.0);
    default:
      return span / 2.0;
  }
}

// Signed coordinates whose exact sum is the L-inf or L1 cost; see
// ExactSumTest for an independent check of the summation itself.
inline void signed_difference(double p, double q, std::vector<double>& terms) {
  terms.push_back(std::max(p, q));
  terms.push_back(-std::min(p, q));
}

inline void ground_terms(const topolayout::PersistencePair& a,
                         const topolayout::PersistencePair& b, topolayout::GroundMetric m,
                         std::vector<double>& terms) {
  std::vector<double> db, dd;
  signed_difference(a.birth, b.birth, db);
  signed_difference(a.death, b.death, dd);
  if (m == topolayout::GroundMetric::kL1) {
    terms.insert(terms.end(), db.begin(), db.end());
    terms.insert(terms.end(), dd.begin(), dd.end());
    return;
  }
  std::vector<double> diff{db[0], db[1], -dd[0], -dd[1]};
  const auto& pick = topolayout::exact_sum(diff) >= 0.0 ? db : dd;
  terms.insert(terms.end(), pick.begin(), pick.end());
}

inline void diagonal_terms(const topolayout::PersistencePair& a, topolayout::GroundMetric m,
                           std::vector<double>& terms) {
  const double half = m == topolayout::GroundMetric::kL1 ? 1.0 : 0.5;
  terms.push_back(a.death * half);
  terms.push_back(-a.birth * half);
}

inline double sum_ascending(std::vector<double> costs, double order) {
  for (double& c : costs) c = order == 1.0 ? c : std::pow(c, order);
  std::sort(costs.begin(), costs.end());
  double s = 0.0;
  for (double c : costs) s += c;
  return order == 1.0 ? s : std::pow(s, 1.0 / order);
}

// Enumerates every partial injection of the finite points of `a` into those
// of `b`; unmatched points go to the diagonal.
inline DiagramDistances enumerate(const topolayout::PersistenceDiagram& a,
                                  const topolayout::PersistenceDiagram& b, double order,
                                  topolayout::GroundMetric metric) {
  std::vector<topolayout::PersistencePair> x, y;
  for (const auto& p : a.pairs) if (p.is_finite()) x.push_back(p);
  for (const auto& p : b.pairs) if (p.is_finite()) y.push_back(p);
  DiagramDistances best{std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity()};
  std::vector<int> match(x.size(), -1);
  std::vector<char> used(y.size(), 0);
  const bool linear = order == 1.0 && metric != topolayout::GroundMetric::kL2;
  auto evaluate = [&] {
    std::vector<double> costs, terms;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (match[i] < 0) {
        costs.push_back(to_diagonal(x[i], metric));
        diagonal_terms(x[i], metric, terms);
      } else {
        costs.push_back(ground(x[i], y[match[i]], metric));
        ground_terms(x[i], y[match[i]], metric, terms);
      }
    }
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      costs.push_back(to_diagonal(y[j], metric));
      diagonal_terms(y[j], metric, terms);
    }
    double worst = 0.0;
    for (double c : costs) worst = std::max(worst, c);
    best.bottleneck = std::min(best.bottleneck, worst);
    const double total = linear ? topolayout::exact_sum(terms) : sum_ascending(costs, order);
    best.wasserstein = std::min(best.wasserstein, total);
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == x.size()) {
      evaluate();
      return;
    }
    match[i] = -1;
    self(self, i + 1);
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      match[i] = static_cast<int>(j);
      self(self, i + 1);
      used[j] = 0;
    }
    match[i] = -1;
  };
  recurse(recurse, 0);
  if (x.empty() && y.empty()) best = {0.0, 0.0};
  return best;
}

// Simplification by repeated sweeps until nothing changes: a node collapses
// when both children are current leaves and one is smaller than eta.
// Returns the components of interest, ascending.
inline std::vector<topolayout::NodeId> simplify_fixpoint(const topolayout::MergeTree& tree,
                                                         std::size_t eta) {
  const std::size_t total = tree.size();
  std::vector<char> leaf(total), alive(total, 1);
  for (std::size_t i = 0; i < total; ++i) leaf[i] = tree.nodes[i].is_leaf();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < total; ++i) {
      const auto& node = tree.nodes[i];
      if (!alive[i] || leaf[i]) continue;
      const auto a = node.children[0], b = node.children[1];
      if (leaf[a] && leaf[b] &&
          (tree.nodes[a].size < eta || tree.nodes[b].size < eta)) {
        leaf[i] = 1;
        alive[a] = alive[b] = 0;
        changed = true;
      }
    }
  }
  // Kill every descendant of a dead node.
  for (std::size_t i = total; i-- > 0;) {
    if (alive[i]) continue;
    const auto& node = tree.nodes[i];
    if (!node.is_leaf()) alive[node.children[0]] = alive[node.children[1]] = 0;
  }
  std::vector<topolayout::NodeId> out;
  for (std::size_t i = 0; i < total; ++i) {
    if (alive[i] && leaf[i] && tree.nodes[i].size >= eta) {
      out.push_back(static_cast<topolayout::NodeId>(i));
    }
  }
  return out;
}

}  // namespace oracle
