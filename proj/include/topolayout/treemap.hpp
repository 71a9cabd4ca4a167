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
#include <vector>

#include "topolayout/filtration.hpp"

namespace topolayout {

struct TreemapOptions {
  double padding = 0.0;       // inset per side, fraction of the shorter side
  bool outlier_box = false;   // emit a marked rectangle for residue area
};

struct TreemapRect {
  NodeId node = 0;
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
  std::size_t depth = 0;
  std::size_t size = 0;
  double persistence = 0.0;
  bool is_component_of_interest = false;
  bool is_outlier = false;  // residue box of `node`

  double area() const noexcept { return w * h; }
};

// Boxes the root and every retained node of size >= eta, nested under its
// parent. Points of smaller retained children are residue: their share of
// the parent stays empty unless outlier_box is set. Parents come before
// their children in the output.
std::vector<TreemapRect> treemap_layout(const SimplifiedTree& simplified,
                                        const MergeTree& tree,
                                        const TreemapOptions& options = {});

}  // namespace topolayout
