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

#include "topolayout/treemap.hpp"

#include <algorithm>
#include <cmath>

#include "topolayout/error.hpp"

namespace topolayout {

namespace {

struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
};

// Squarified layout (Bruls, Huizing, van Wijk): items are added to the
// current strip along the shorter side while the worst aspect ratio in the
// strip does not get worse. Areas are absolute and must not exceed r.
std::vector<Rect> squarify(const std::vector<double>& areas, Rect r) {
  std::vector<Rect> out(areas.size(), Rect{r.x, r.y, 0.0, 0.0});
  std::size_t i = 0;
  while (i < areas.size()) {
    const double side = std::min(r.w, r.h);
    if (!(side > 0.0)) break;
    auto worst = [&](std::size_t from, std::size_t to, double sum) {
      double ratio = 0.0;
      for (std::size_t k = from; k < to; ++k) {
        if (!(areas[k] > 0.0)) continue;
        const double a = areas[k];
        ratio = std::max(ratio, std::max(side * side * a / (sum * sum),
                                         sum * sum / (side * side * a)));
      }
      return ratio;
    };
    std::size_t j = i + 1;
    double sum = areas[i];
    double current = worst(i, j, sum);
    while (j < areas.size()) {
      const double next_sum = sum + areas[j];
      const double next = worst(i, j + 1, next_sum);
      if (next > current) break;
      sum = next_sum;
      current = next;
      ++j;
    }
    const double thick = sum / side;
    if (r.w >= r.h) {
      double y = r.y;
      for (std::size_t k = i; k < j; ++k) {
        const double h = thick > 0.0 ? areas[k] / thick : 0.0;
        out[k] = Rect{r.x, y, thick, h};
        y += h;
      }
      r.x += thick;
      r.w = std::max(0.0, r.w - thick);
    } else {
      double x = r.x;
      for (std::size_t k = i; k < j; ++k) {
        const double w = thick > 0.0 ? areas[k] / thick : 0.0;
        out[k] = Rect{x, r.y, w, thick};
        x += w;
      }
      r.y += thick;
      r.h = std::max(0.0, r.h - thick);
    }
    i = j;
  }
  return out;
}

}  // namespace

std::vector<TreemapRect> treemap_layout(const SimplifiedTree& simplified,
                                        const MergeTree& tree,
                                        const TreemapOptions& options) {
  if (!(options.padding >= 0.0 && options.padding < 0.2)) {
    throw Error(ErrorKind::kInvalidArgument, "padding must lie in [0, 0.2)");
  }
  if (simplified.retained.size() != tree.size()) {
    throw Error(ErrorKind::kInvalidArgument, "simplified tree does not match the merge tree");
  }
  auto boxed = [&](NodeId id) {
    return simplified.is_retained(id) && (id == tree.root || tree[id].size >= simplified.eta);
  };

  struct Item {
    NodeId node;
    Rect rect;
    std::size_t depth;
  };
  std::vector<TreemapRect> out;
  std::vector<Item> stack{Item{tree.root, Rect{0.0, 0.0, 1.0, 1.0}, 0}};
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    const MergeNode& node = tree[item.node];
    TreemapRect rect;
    rect.node = item.node;
    rect.x = item.rect.x;
    rect.y = item.rect.y;
    rect.w = item.rect.w;
    rect.h = item.rect.h;
    rect.depth = item.depth;
    rect.size = node.size;
    rect.persistence = node.persistence();
    rect.is_component_of_interest = simplified.is_component_of_interest(item.node);
    out.push_back(rect);
    if (simplified.is_leaf(tree, item.node)) continue;

    std::vector<NodeId> kids;
    for (NodeId child : node.children) {
      if (boxed(child)) kids.push_back(child);
    }
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      return tree[a].size > tree[b].size || (tree[a].size == tree[b].size && a < b);
    });
    const double inset = options.padding * std::min(item.rect.w, item.rect.h);
    const Rect inner{item.rect.x + inset, item.rect.y + inset,
                     std::max(0.0, item.rect.w - 2 * inset),
                     std::max(0.0, item.rect.h - 2 * inset)};
    const double inner_area = inner.w * inner.h;
    std::vector<double> areas;
    std::size_t covered = 0;
    for (NodeId k : kids) {
      areas.push_back(inner_area * tree[k].size / node.size);
      covered += tree[k].size;
    }
    const std::size_t residue = node.size - covered;
    if (residue > 0) areas.push_back(inner_area * residue / node.size);
    const auto rects = squarify(areas, inner);

    if (residue > 0 && options.outlier_box) {
      const Rect& r = rects.back();
      TreemapRect box;
      box.node = item.node;
      box.x = r.x;
      box.y = r.y;
      box.w = r.w;
      box.h = r.h;
      box.depth = item.depth + 1;
      box.size = residue;
      box.persistence = node.persistence();
      box.is_outlier = true;
      out.push_back(box);
    }
    for (std::size_t k = kids.size(); k-- > 0;) {
      stack.push_back(Item{kids[k], rects[k], item.depth + 1});
    }
  }
  return out;
}

}  // namespace topolayout
