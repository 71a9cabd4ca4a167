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

#include "topolayout/layout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topolayout/error.hpp"
#include "topolayout/filtration.hpp"
#include "topolayout/union_find.hpp"

namespace topolayout {

void ScalingParams::validate() const {
  if (!(c >= 1.0) || !std::isfinite(c)) {
    throw Error(ErrorKind::kInvalidArgument, "c must be a finite value >= 1");
  }
  if (!(alpha_max >= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "alpha_max must be >= 1");
  }
}

PlacedComponent PlacedComponent::from(std::vector<PointId> ids,
                                      std::vector<Point2> coords) {
  if (ids.empty() || ids.size() != coords.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "component needs one coordinate per point and at least one point");
  }
  PlacedComponent c;
  c.hull = convex_hull_indices(coords);
  c.ids = std::move(ids);
  c.coords = std::move(coords);
  return c;
}

std::size_t PlacedComponent::index_of(PointId id) const {
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "point " + std::to_string(id) + " is not in the component");
  }
  return static_cast<std::size_t>(it - ids.begin());
}

void PlacedComponent::apply(const Similarity2& motion) {
  for (auto& p : coords) p = motion(p);
}

namespace {

Point2 unit(double x, double y) {
  const double len = std::hypot(x, y);
  return {x / len, y / len};
}

// Unit vector u at hull vertex k such that every hull point q satisfies
// u . (q - hull[k]) <= 0. `fallback` serves single-vertex hulls.
Point2 outward_direction(std::span<const Point2> hull, std::size_t k,
                         Point2 fallback) {
  const std::size_t h = hull.size();
  if (h == 1) return fallback;
  if (h == 2) {
    // Normal of the segment, so the segment lies on the supporting line and
    // merged components do not collapse onto one axis.
    const Point2& other = hull[1 - k];
    return unit(other.y - hull[k].y, hull[k].x - other.x);
  }
  const Point2& prev = hull[(k + h - 1) % h];
  const Point2& cur = hull[k];
  const Point2& next = hull[(k + 1) % h];
  const Point2 n1 = unit(cur.y - prev.y, prev.x - cur.x);
  const Point2 n2 = unit(next.y - cur.y, cur.x - next.x);
  return unit(n1.x + n2.x, n1.y + n2.y);
}

std::size_t nearest_vertex(std::span<const Point2> hull, const Point2& p) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const double dx = hull[k].x - p.x;
    const double dy = hull[k].y - p.y;
    const double d = dx * dx + dy * dy;
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

struct HullPlacement {
  Similarity2 motion_a;
  Similarity2 motion_b;
  std::size_t ka = 0;
  std::size_t kb = 0;
};

HullPlacement place_hulls(std::span<const Point2> hull_a, const Point2& pa,
                          std::span<const Point2> hull_b, const Point2& pb,
                          double l) {
  if (!(l >= 0.0) || !std::isfinite(l)) {
    throw Error(ErrorKind::kInvalidArgument, "merge length must be finite and >= 0");
  }
  HullPlacement out;
  out.ka = nearest_vertex(hull_a, pa);
  out.kb = nearest_vertex(hull_b, pb);
  const Point2 ua = outward_direction(hull_a, out.ka, {0.0, 1.0});
  const Point2 ub = outward_direction(hull_b, out.kb, {0.0, -1.0});

  // Rotation [c -s; s c] with c = uy, s = ux sends u to +y.
  const auto ra = Similarity2::rotation(ua.y, ua.x);
  const Point2 qa = ra(hull_a[out.ka]);
  out.motion_a = Similarity2::translation(-qa.x, -qa.y).after(ra);

  const auto rb = Similarity2::rotation(-ub.y, -ub.x);
  const Point2 qb = rb(hull_b[out.kb]);
  out.motion_b = Similarity2::translation(-qb.x, l - qb.y).after(rb);
  return out;
}

std::vector<Point2> hull_points(const PlacedComponent& c) {
  std::vector<Point2> out;
  out.reserve(c.hull.size());
  for (std::size_t i : c.hull) out.push_back(c.coords.at(i));
  return out;
}

}  // namespace

Placement place_components(const PlacedComponent& a, const PlacedComponent& b,
                           PointId pa, PointId pb, double l) {
  if (a.hull.empty() || b.hull.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "component without a hull");
  }
  const auto hull_a = hull_points(a);
  const auto hull_b = hull_points(b);
  const auto hp = place_hulls(hull_a, a.coords[a.index_of(pa)], hull_b,
                              b.coords[b.index_of(pb)], l);
  return Placement{hp.motion_a, hp.motion_b, a.ids[a.hull[hp.ka]],
                   b.ids[b.hull[hp.kb]]};
}

double scale_component(PlacedComponent& component, double l_avg, double l_max,
                       const ScalingParams& params) {
  params.validate();
  if (!(l_avg > 0.0)) {
    warn("component has zero average edge length; scale set to alpha_max");
    return params.alpha_max;
  }
  const double alpha = std::min(params.c * l_max / l_avg, params.alpha_max);
  component.apply(Similarity2::scaling_about(centroid(component.coords), alpha));
  return alpha;
}

namespace {

constexpr std::uint32_t kMixed = kUnassigned - 1;

struct WorkingComponent {
  Similarity2 frame;  // local -> world
  std::vector<PointId> members;
  std::vector<PointId> hull;
  std::uint32_t label = kUnassigned;
};

std::vector<Point2> world_coords(const WorkingComponent& c,
                                 std::span<const PointId> ids,
                                 const std::vector<Point2>& local) {
  std::vector<Point2> out;
  out.reserve(ids.size());
  for (PointId id : ids) out.push_back(c.frame(local[id]));
  return out;
}

}  // namespace

Layout2D topomap_project(std::size_t n, const SpanningTree& tree,
                         std::span<const std::uint32_t> component_of,
                         const ScalingParams& params, const MergeObserver& observer) {
  params.validate();
  if (n == 0) throw Error(ErrorKind::kEmptyInput, "point set is empty");
  if (tree.n != n) {
    throw Error(ErrorKind::kInvalidArgument, "tree does not span the point set");
  }
  validate_spanning_tree(tree);
  if (!component_of.empty() && component_of.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "component map size differs from n");
  }

  std::vector<std::size_t> coi_size;
  for (std::uint32_t c : component_of) {
    if (c == kUnassigned) continue;
    if (c >= n) throw Error(ErrorKind::kInvalidArgument, "component id out of range");
    if (c >= coi_size.size()) coi_size.resize(c + 1, 0);
    ++coi_size[c];
  }

  Layout2D out;
  out.applied_scale.assign(coi_size.size(), 1.0);
  out.component_sizes = coi_size;
  for (const auto& e : tree.edges) out.l_max = std::max(out.l_max, e.w);

  std::vector<Point2> local(n);
  std::vector<WorkingComponent> comps(n);
  for (PointId i = 0; i < n; ++i) {
    comps[i].members = {i};
    comps[i].hull = {i};
    if (!component_of.empty()) comps[i].label = component_of[i];
  }
  // L_i uses the component's internal edges summed in ascending edge order.
  std::vector<double> internal_sum(coi_size.size(), 0.0);
  if (!component_of.empty()) {
    for (const auto& e : tree.edges) {
      const auto label = component_of[e.u];
      if (label != kUnassigned && label == component_of[e.v]) internal_sum[label] += e.w;
    }
  }
  std::vector<char> scaled(coi_size.size(), 0);
  UnionFind uf(n);

  for (const auto& e : tree.edges) {
    const auto ra = uf.find(e.u);
    const auto rb = uf.find(e.v);
    WorkingComponent& a = comps[ra];
    WorkingComponent& b = comps[rb];
    const auto hull_a = world_coords(a, a.hull, local);
    const auto hull_b = world_coords(b, b.hull, local);
    const auto hp = place_hulls(hull_a, a.frame(local[e.u]), hull_b,
                                b.frame(local[e.v]), e.w);
    a.frame = hp.motion_a.after(a.frame);
    b.frame = hp.motion_b.after(b.frame);
    if (observer) {
      const auto side_a = world_coords(a, a.members, local);
      const auto side_b = world_coords(b, b.members, local);
      observer(MergeEvent{e, side_a, side_b});
    }

    const auto root = uf.unite(ra, rb);
    WorkingComponent& big = comps[root];
    WorkingComponent& small = comps[root == ra ? rb : ra];
    const Similarity2 to_big = big.frame.inverse().after(small.frame);
    for (PointId id : small.members) local[id] = to_big(local[id]);
    big.members.insert(big.members.end(), small.members.begin(), small.members.end());

    std::vector<PointId> candidates = big.hull;
    candidates.insert(candidates.end(), small.hull.begin(), small.hull.end());
    std::vector<Point2> pts;
    pts.reserve(candidates.size());
    for (PointId id : candidates) pts.push_back(local[id]);
    std::vector<PointId> hull;
    for (std::size_t i : convex_hull_indices(pts)) hull.push_back(candidates[i]);
    big.hull = std::move(hull);

    big.label = big.label == small.label ? big.label : kMixed;
    small = WorkingComponent{};

    const auto label = big.label;
    if (label >= coi_size.size() || big.members.size() != coi_size[label]) continue;
    if (scaled[label]) {
      throw Error(ErrorKind::kInvalidArgument, "component of interest scaled twice");
    }
    scaled[label] = 1;
    const double l_avg = internal_sum[label] / static_cast<double>(big.members.size() - 1);
    if (!(l_avg > 0.0)) {
      warn("component " + std::to_string(label) +
           " has zero average edge length; scale set to alpha_max");
      out.applied_scale[label] = params.alpha_max;
      continue;
    }
    const double alpha = std::min(params.c * out.l_max / l_avg, params.alpha_max);
    const Point2 center = centroid(world_coords(big, big.members, local));
    big.frame = Similarity2::scaling_about(center, alpha).after(big.frame);
    out.applied_scale[label] = alpha;
  }

  out.coords.resize(n);
  for (PointId i = 0; i < n; ++i) out.coords[i] = comps[uf.find(i)].frame(local[i]);
  out.component_of.assign(n, kUnassigned);
  if (!component_of.empty()) {
    std::copy(component_of.begin(), component_of.end(), out.component_of.begin());
  }
  std::vector<std::vector<Point2>> members(coi_size.size());
  for (PointId i = 0; i < n; ++i) {
    if (out.component_of[i] != kUnassigned) {
      members[out.component_of[i]].push_back(out.coords[i]);
    }
  }
  for (const auto& m : members) out.hulls.push_back(convex_hull(m));
  return out;
}

}  // namespace topolayout
