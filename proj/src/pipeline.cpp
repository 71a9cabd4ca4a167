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

#include "topolayout/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <string>

#include "topolayout/error.hpp"
#include "topolayout/io.hpp"

namespace topolayout {

namespace {

bool is_real(std::string_view cell) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) {
    cell.remove_suffix(1);
  }
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  return ec == std::errc{} && ptr == cell.data() + cell.size();
}

std::vector<std::string_view> cells_of(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view nth_nonempty_line(std::string_view text, std::size_t index) {
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (index-- == 0) return line;
  }
  return {};
}

std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const char* to_string(MstMethod method) {
  return method == MstMethod::kExact ? "exact" : "approx";
}

MstMethod parse_mst_method(std::string_view name) {
  if (name == "exact") return MstMethod::kExact;
  if (name == "approx") return MstMethod::kApprox;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown MST method '" + std::string(name) + "' (exact|approx)");
}

const char* to_string(SourceFormat format) {
  return format == SourceFormat::kCsv ? "csv" : "fvecs";
}

SourceFormat parse_source_format(std::string_view name) {
  if (name == "csv") return SourceFormat::kCsv;
  if (name == "fvecs") return SourceFormat::kFvecs;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown format '" + std::string(name) + "' (csv|fvecs)");
}

CsvOptions sniff_csv_options(std::string_view text) {
  CsvOptions options;
  const auto first = nth_nonempty_line(text, 0);
  const auto header = cells_of(first);
  options.has_header =
      std::any_of(header.begin(), header.end(), [](std::string_view c) { return !is_real(c); });
  if (!options.has_header) return options;
  const auto data = cells_of(nth_nonempty_line(text, 1));
  for (std::size_t c = 0; c < data.size() && c < header.size(); ++c) {
    if (!is_real(data[c])) {
      options.label_column = trimmed(header[c]);
      break;
    }
  }
  return options;
}

Dataset load_dataset(std::string_view bytes, SourceFormat format, std::string name) {
  Dataset dataset;
  if (format == SourceFormat::kCsv) {
    dataset.points = parse_csv(bytes, sniff_csv_options(bytes));
  } else {
    dataset.points = parse_fvecs(std::as_bytes(std::span(bytes.data(), bytes.size())));
  }
  dataset.meta = describe(dataset.points, std::move(name), format, bytes);
  return dataset;
}

std::size_t resolve_eta(std::string_view text, std::size_t n) {
  const bool percent = !text.empty() && text.back() == '%';
  const std::string_view number = percent ? text.substr(0, text.size() - 1) : text;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
  if (number.empty() || ec != std::errc{} || ptr != number.data() + number.size() ||
      !std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidArgument, "invalid eta '" + std::string(text) + "'");
  }
  if (percent) {
    if (!(value > 0.0 && value <= 100.0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "eta percentage must lie in (0%, 100%], got '" + std::string(text) + "'");
    }
    const auto resolved = static_cast<std::size_t>(std::llround(value / 100.0 * n));
    return std::max<std::size_t>(1, resolved);
  }
  if (!(value >= 1.0) || value != std::floor(value)) {
    throw Error(ErrorKind::kInvalidArgument,
                "eta must be a positive integer or a percentage, got '" + std::string(text) + "'");
  }
  return static_cast<std::size_t>(value);
}

SpanningTree compute_mst(const PointSet& points, const MstRequest& request) {
  if (request.method == MstMethod::kExact) {
    ExactEmstOptions options;
    options.threads = std::max(1u, request.vamana.threads);
    return exact_emst(points, options);
  }
  return amst(points, request.vamana);
}

Hierarchy build_hierarchy(const SpanningTree& mst, std::size_t eta,
                          const TreemapOptions& options) {
  Hierarchy h;
  h.tree = build_merge_tree(mst);
  h.simplified = simplify(h.tree, eta);
  h.rects = treemap_layout(h.simplified, h.tree, options);
  return h;
}

Json hierarchy_to_json(const Hierarchy& hierarchy) {
  Json out;
  out["tree"] = merge_tree_to_json(hierarchy.tree, hierarchy.simplified);
  out["rects"] = rects_to_json(hierarchy.rects);
  return out;
}

std::optional<NodeId> invalid_selection(const SimplifiedTree& simplified,
                                        std::span<const NodeId> selected) {
  for (NodeId id : selected) {
    if (id >= simplified.retained.size() || !simplified.is_component_of_interest(id)) return id;
  }
  return std::nullopt;
}

Projection project(const SpanningTree& mst, const Hierarchy& hierarchy,
                   std::span<const NodeId> selected, const ScalingParams& params) {
  if (const auto bad = invalid_selection(hierarchy.simplified, selected)) {
    throw Error(ErrorKind::kInvalidArgument,
                "node " + std::to_string(*bad) + " is not a component of interest");
  }
  Projection p;
  p.component_nodes.assign(selected.begin(), selected.end());
  std::sort(p.component_nodes.begin(), p.component_nodes.end());
  p.component_nodes.erase(std::unique(p.component_nodes.begin(), p.component_nodes.end()),
                          p.component_nodes.end());
  std::vector<std::uint32_t> component_of;
  if (!p.component_nodes.empty()) {
    component_of.assign(mst.n, kUnassigned);
    for (std::size_t c = 0; c < p.component_nodes.size(); ++c) {
      for (PointId id : hierarchy.tree.members(p.component_nodes[c])) {
        component_of[id] = static_cast<std::uint32_t>(c);
      }
    }
  }
  p.layout = topomap_project(mst.n, mst, component_of, params);
  return p;
}

Projection project_all(const SpanningTree& mst, const Hierarchy& hierarchy,
                       const ScalingParams& params) {
  return project(mst, hierarchy, hierarchy.simplified.components_of_interest, params);
}

Json projection_to_json(const Projection& projection) {
  return layout_to_json(projection.layout, projection.component_nodes);
}

namespace {

Json distances_json(const PersistenceDiagram& a, const PersistenceDiagram& b,
                    const MetricsOptions& options) {
  Json j;
  j["bottleneck"] = real_to_json(bottleneck_distance(a, b, options.ground));
  j["wasserstein"] = real_to_json(wasserstein_distance(a, b, options.order, options.ground));
  j["normalized_wasserstein"] =
      real_to_json(normalized_wasserstein(a, b, options.order, options.ground));
  return j;
}

}  // namespace

Json metrics_report(const SpanningTree& approx, const SpanningTree& exact,
                    const MetricsOptions& options) {
  if (approx.n != exact.n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "trees span " + std::to_string(approx.n) + " and " +
                    std::to_string(exact.n) + " points");
  }
  Json rwe_value;
  try {
    rwe_value = real_to_json(rwe(approx, exact));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerate) throw;
    warn(e.what());
    rwe_value = nullptr;
  }
  const auto da = persistence_diagram(approx);
  const auto db = persistence_diagram(exact);
  Json raw = distances_json(da, db, options);
  Json normalized = distances_json(normalize_diagram(da), normalize_diagram(db), options);
  const Json& headline = options.normalized ? normalized : raw;

  Json out;
  out["rwe"] = rwe_value;
  out["bottleneck"] = headline["bottleneck"];
  out["wasserstein"] = headline["wasserstein"];
  out["normalized_wasserstein"] = headline["normalized_wasserstein"];
  out["order"] = options.order;
  out["normalized"] = options.normalized;
  out["ground_metric"] = to_string(options.ground);
  out["raw"] = std::move(raw);
  out["diagram_normalized"] = std::move(normalized);
  return out;
}

Json tree_summary(const SpanningTree& tree, MstMethod method, double seconds) {
  Json out;
  out["method"] = to_string(method);
  out["n"] = tree.n;
  out["total_weight"] = tree.total_weight;
  out["l_max"] = tree.max_edge_weight();
  out["bridge_edges"] = tree.bridge_edges.size();
  out["seconds"] = seconds;
  return out;
}

const char* to_string(SweepParam param) {
  switch (param) {
    case SweepParam::kAlpha:
      return "alpha";
    case SweepParam::kL:
      return "L";
    case SweepParam::kR:
      return "R";
  }
  return "?";
}

SweepParam parse_sweep_param(std::string_view name) {
  if (name == "alpha") return SweepParam::kAlpha;
  if (name == "L") return SweepParam::kL;
  if (name == "R") return SweepParam::kR;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown sweep parameter '" + std::string(name) + "' (alpha|L|R)");
}

std::vector<SweepRow> run_sweep(const PointSet& points, const SpanningTree& exact,
                                const SweepRequest& request) {
  if (request.values.empty()) throw Error(ErrorKind::kInvalidArgument, "sweep grid is empty");
  if (request.seeds.empty()) throw Error(ErrorKind::kInvalidArgument, "sweep has no seeds");
  double lo = 1.0, hi = 1.5;
  if (request.param == SweepParam::kL) lo = 75, hi = 200;
  if (request.param == SweepParam::kR) lo = 60, hi = 150;
  for (double v : request.values) {
    if (v < lo || v > hi) {
      warn(std::string(to_string(request.param)) + " = " + format_double(v) +
           " lies outside the studied range [" + format_double(lo) + ", " +
           format_double(hi) + "]");
    }
    if (request.param != SweepParam::kAlpha && (v < 1 || v != std::floor(v))) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(to_string(request.param)) + " values must be positive integers");
    }
  }

  const auto exact_diagram = persistence_diagram(exact);
  const auto exact_ref =
      request.metrics.normalized ? normalize_diagram(exact_diagram) : exact_diagram;
  std::vector<SweepRow> rows;
  for (double v : request.values) {
    for (std::uint64_t seed : request.seeds) {
      VamanaParams params = request.base;
      params.seed = seed;
      switch (request.param) {
        case SweepParam::kAlpha:
          params.alpha = v;
          break;
        case SweepParam::kL:
          params.L = static_cast<std::size_t>(v);
          break;
        case SweepParam::kR:
          params.R = static_cast<std::size_t>(v);
          params.L = std::max(params.L, params.R);
          break;
      }
      params.validate();
      const auto start = std::chrono::steady_clock::now();
      const SpanningTree approx = amst(points, params);
      SweepRow row;
      row.build_seconds = seconds_since(start);
      row.param = request.param;
      row.value = v;
      row.seed = seed;
      row.rwe = rwe(approx, exact);
      auto diagram = persistence_diagram(approx);
      if (request.metrics.normalized) diagram = normalize_diagram(diagram);
      row.bottleneck = bottleneck_distance(diagram, exact_ref, request.metrics.ground);
      row.wasserstein = wasserstein_distance(diagram, exact_ref, request.metrics.order,
                                             request.metrics.ground);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "param,value,seed,build_seconds,rwe,bottleneck,wasserstein\n";
  for (const auto& r : rows) {
    out += to_string(r.param);
    out += ',' + format_double(r.value);
    out += ',' + std::to_string(r.seed);
    out += ',' + format_double(r.build_seconds);
    out += ',' + format_double(r.rwe);
    out += ',' + format_double(r.bottleneck);
    out += ',' + format_double(r.wasserstein);
    out += '\n';
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorKind::kEmptyInput, "median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace topolayout
