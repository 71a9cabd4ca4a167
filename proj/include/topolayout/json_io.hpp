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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "topolayout/filtration.hpp"
#include "topolayout/layout.hpp"
#include "topolayout/spanning_tree.hpp"
#include "topolayout/treemap.hpp"

namespace topolayout {

// Object keys keep insertion order so documents are stable byte for byte.
using Json = nlohmann::ordered_json;

// Non-finite reals are written as null (+inf is the only case that occurs).
Json real_to_json(double x);
double real_from_json(const Json& j);

// One "u v w" line per edge; weights use the shortest round-trip form.
std::string tree_to_text(const SpanningTree& tree);
SpanningTree tree_from_text(std::string_view text);

Json tree_to_json(const SpanningTree& tree);
SpanningTree tree_from_json(const Json& j);

// Reads either format; JSON is detected by a leading '{'.
SpanningTree parse_tree(std::string_view text);

Json merge_tree_to_json(const MergeTree& tree, const SimplifiedTree& simplified);
Json rects_to_json(const std::vector<TreemapRect>& rects);

// `component_nodes[i]` is the merge-tree node behind layout component i;
// ids in the document are node ids.
Json layout_to_json(const Layout2D& layout, const std::vector<NodeId>& component_nodes);

Json diagram_to_json(const PersistenceDiagram& diagram);

// Compact serialization with a trailing newline.
std::string dump(const Json& j);

}  // namespace topolayout
