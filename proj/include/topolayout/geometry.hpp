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
#include <vector>

namespace topolayout {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double cross(const Point2& o, const Point2& a, const Point2& b) noexcept {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double distance(const Point2& a, const Point2& b) noexcept;

// p -> [a -b; b a] p + t: rotation by atan2(b, a) and uniform scale |(a, b)|.
struct Similarity2 {
  double a = 1.0;
  double b = 0.0;
  double tx = 0.0;
  double ty = 0.0;

  Point2 operator()(const Point2& p) const noexcept {
    return {a * p.x - b * p.y + tx, b * p.x + a * p.y + ty};
  }
  double scale() const noexcept;
  // First apply `first`, then *this.
  Similarity2 after(const Similarity2& first) const noexcept;
  Similarity2 inverse() const;

  static Similarity2 rotation(double cos_t, double sin_t) noexcept {
    return {cos_t, sin_t, 0.0, 0.0};
  }
  static Similarity2 translation(double dx, double dy) noexcept {
    return {1.0, 0.0, dx, dy};
  }
  static Similarity2 scaling_about(const Point2& center, double factor) noexcept {
    return {factor, 0.0, center.x - factor * center.x, center.y - factor * center.y};
  }
};

// Counter-clockwise hull by monotone chain, starting at the lowest (x, y).
// Returns indices into `points`; duplicates and collinear points are
// dropped, so one distinct point gives one vertex and a collinear set two.
std::vector<std::size_t> convex_hull_indices(std::span<const Point2> points);
std::vector<Point2> convex_hull(std::span<const Point2> points);

Point2 centroid(std::span<const Point2> points) noexcept;

}  // namespace topolayout
