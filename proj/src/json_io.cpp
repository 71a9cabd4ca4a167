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

#include "topolayout/json_io.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "topolayout/error.hpp"
#include "topolayout/io.hpp"

namespace topolayout {

Json real_to_json(double x) {
  if (!std::isfinite(x)) return Json(nullptr);
  return Json(x);
}

double real_from_json(const Json& j) {
  if (j.is_null()) return kInfinity;
  return j.get<double>();
}

std::string tree_to_text(const SpanningTree& tree) {
  std::string out;
  for (const auto& e : tree.edges) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += format_double(e.w);
    out += '\n';
  }
  return out;
}

namespace {

template <typename T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::kParse,
                "tree line " + std::to_string(line) + ": cannot parse '" +
                    std::string(field) + "'",
                line);
  }
  return value;
}

}  // namespace

SpanningTree tree_from_text(std::string_view text) {
  std::vector<WeightedEdge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      std::size_t stop = pos;
      while (stop < line.size() && line[stop] != ' ' && line[stop] != '\t') ++stop;
      if (stop > pos) fields.push_back(line.substr(pos, stop - pos));
      pos = stop;
    }
    if (fields.size() != 3) {
      throw Error(ErrorKind::kParse,
                  "tree line " + std::to_string(line_no) + ": expected 'u v w'", line_no);
    }
    edges.push_back(WeightedEdge{parse_field<PointId>(fields[0], line_no),
                                 parse_field<PointId>(fields[1], line_no),
                                 parse_field<double>(fields[2], line_no)});
  }
  const std::size_t n = edges.size() + 1;
  return make_spanning_tree(n, std::move(edges));
}

Json tree_to_json(const SpanningTree& tree) {
  Json edges = Json::array();
  for (const auto& e : tree.edges) edges.push_back(Json::array({e.u, e.v, e.w}));
  Json j;
  j["n"] = tree.n;
  j["total_weight"] = tree.total_weight;
  j["edges"] = std::move(edges);
  j["bridge_edges"] = tree.bridge_edges;
  return j;
}

SpanningTree tree_from_json(const Json& j) {
  try {
    std::vector<WeightedEdge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back(WeightedEdge{e.at(0).get<PointId>(), e.at(1).get<PointId>(),
                                   e.at(2).get<double>()});
    }
    SpanningTree tree = make_spanning_tree(j.at("n").get<std::size_t>(), std::move(edges));
    if (j.contains("bridge_edges")) {
      tree.bridge_edges = j["bridge_edges"].get<std::vector<std::size_t>>();
    }
    return tree;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("tree JSON: ") + e.what());
  }
}

SpanningTree parse_tree(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kParse, std::string("tree JSON: ") + e.what());
    }
    return tree_from_json(j);
  }
  return tree_from_text(text);
}

Json merge_tree_to_json(const MergeTree& tree, const SimplifiedTree& simplified) {
  Json nodes = Json::array();
  for (const auto& node : tree.nodes) {
    Json j;
    j["id"] = node.id;
    j["size"] = node.size;
    j["birth"] = node.birth;
    j["death"] = real_to_json(node.death);
    j["children"] = node.is_leaf() ? Json::array()
                                   : Json::array({node.children[0], node.children[1]});
    j["retained"] = simplified.is_retained(node.id);
    j["component_of_interest"] = simplified.is_component_of_interest(node.id);
    nodes.push_back(std::move(j));
  }
  Json out;
  out["n"] = tree.n_points;
  out["root"] = tree.root;
  out["eta"] = simplified.eta;
  out["components_of_interest"] = simplified.components_of_interest;
  out["nodes"] = std::move(nodes);
  return out;
}

Json rects_to_json(const std::vector<TreemapRect>& rects) {
  Json out = Json::array();
  for (const auto& r : rects) {
    Json j;
    j["node"] = r.node;
    j["x"] = r.x;
    j["y"] = r.y;
    j["w"] = r.w;
    j["h"] = r.h;
    j["depth"] = r.depth;
    j["persistence"] = real_to_json(r.persistence);
    j["size"] = r.size;
    j["component_of_interest"] = r.is_component_of_interest;
    if (r.is_outlier) j["outlier"] = true;
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

Json points_to_json(const std::vector<Point2>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(Json::array({p.x, p.y}));
  return out;
}

}  // namespace

Json layout_to_json(const Layout2D& layout, const std::vector<NodeId>& component_nodes) {
  if (component_nodes.size() != layout.applied_scale.size()) {
    throw Error(ErrorKind::kInvalidArgument, "one node id per layout component expected");
  }
  Json component_of = Json::array();
  for (std::uint32_t c : layout.component_of) {
    component_of.push_back(c == kUnassigned ? Json(nullptr) : Json(component_nodes.at(c)));
  }
  Json components = Json::array();
  for (std::size_t c = 0; c < component_nodes.size(); ++c) {
    Json j;
    j["id"] = component_nodes[c];
    j["alpha"] = real_to_json(layout.applied_scale[c]);
    j["hull"] = points_to_json(layout.hulls[c]);
    j["size"] = layout.component_sizes[c];
    components.push_back(std::move(j));
  }
  Json out;
  out["n"] = layout.coords.size();
  out["coords"] = points_to_json(layout.coords);
  out["component_of"] = std::move(component_of);
  out["components"] = std::move(components);
  out["l_max"] = layout.l_max;
  return out;
}

Json diagram_to_json(const PersistenceDiagram& diagram) {
  Json out = Json::array();
  for (const auto& p : diagram.pairs) {
    out.push_back(Json::array({real_to_json(p.birth), real_to_json(p.death)}));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace topolayout
