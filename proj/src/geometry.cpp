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

#include "topolayout/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "topolayout/error.hpp"

namespace topolayout {

double distance(const Point2& a, const Point2& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double Similarity2::scale() const noexcept { return std::hypot(a, b); }

Similarity2 Similarity2::after(const Similarity2& first) const noexcept {
  const Point2 t = (*this)(Point2{first.tx, first.ty});
  return {a * first.a - b * first.b, b * first.a + a * first.b, t.x, t.y};
}

Similarity2 Similarity2::inverse() const {
  const double det = a * a + b * b;
  if (!(det > 0.0)) {
    throw Error(ErrorKind::kDegenerate, "similarity with zero scale has no inverse");
  }
  const double ia = a / det;
  const double ib = -b / det;
  return {ia, ib, -(ia * tx - ib * ty), -(ib * tx + ia * ty)};
}

std::vector<std::size_t> convex_hull_indices(std::span<const Point2> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [&](std::size_t i, std::size_t j) {
    const Point2& p = points[i];
    const Point2& q = points[j];
    return p.x < q.x || (p.x == q.x && (p.y < q.y || (p.y == q.y && i < j)));
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
              order.end());
  if (order.size() <= 2) return order;

  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0.0) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t r = order.size() - 1; r-- > 0;) {
    const std::size_t i = order[r];
    while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0.0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point2> convex_hull(std::span<const Point2> points) {
  std::vector<Point2> out;
  for (std::size_t i : convex_hull_indices(points)) out.push_back(points[i]);
  return out;
}

Point2 centroid(std::span<const Point2> points) noexcept {
  Point2 c;
  if (points.empty()) return c;
  for (const auto& p : points) {
    c.x += p.x;
    c.y += p.y;
  }
  const auto n = static_cast<double>(points.size());
  return {c.x / n, c.y / n};
}

}  // namespace topolayout
