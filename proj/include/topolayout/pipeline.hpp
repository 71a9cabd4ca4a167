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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topolayout/filtration.hpp"
#include "topolayout/io.hpp"
#include "topolayout/json_io.hpp"
#include "topolayout/layout.hpp"
#include "topolayout/metrics.hpp"
#include "topolayout/point_set.hpp"
#include "topolayout/spanning_tree.hpp"
#include "topolayout/treemap.hpp"
#include "topolayout/vamana.hpp"

namespace topolayout {

enum class MstMethod { kExact, kApprox };

const char* to_string(MstMethod method);
MstMethod parse_mst_method(std::string_view name);

const char* to_string(SourceFormat format);
SourceFormat parse_source_format(std::string_view name);

struct Dataset {
  PointSet points;
  DatasetMeta meta;
};

// CSV header and label column are sniffed: the first row is a header when
// any cell is not a real, and a column whose first data cell is not a real
// holds labels.
CsvOptions sniff_csv_options(std::string_view text);
Dataset load_dataset(std::string_view bytes, SourceFormat format, std::string name);

// "N" is an absolute count; "P%" resolves to round(P / 100 * n), at least 1.
// Percentages above 100 are rejected.
std::size_t resolve_eta(std::string_view text, std::size_t n);

struct MstRequest {
  MstMethod method = MstMethod::kExact;
  VamanaParams vamana;
};

SpanningTree compute_mst(const PointSet& points, const MstRequest& request);

struct Hierarchy {
  MergeTree tree;
  SimplifiedTree simplified;
  std::vector<TreemapRect> rects;
};

Hierarchy build_hierarchy(const SpanningTree& mst, std::size_t eta,
                          const TreemapOptions& options = {});

// {tree: merge-tree document, rects: rect list}
Json hierarchy_to_json(const Hierarchy& hierarchy);

struct Projection {
  Layout2D layout;
  std::vector<NodeId> component_nodes;  // ascending, one per layout component
};

// Returns the first selected id that is not a component of interest.
std::optional<NodeId> invalid_selection(const SimplifiedTree& simplified,
                                        std::span<const NodeId> selected);

// Highlights exactly the selected components (duplicates are ignored).
Projection project(const SpanningTree& mst, const Hierarchy& hierarchy,
                   std::span<const NodeId> selected, const ScalingParams& params);

// All components of interest highlighted.
Projection project_all(const SpanningTree& mst, const Hierarchy& hierarchy,
                       const ScalingParams& params);

Json projection_to_json(const Projection& projection);

struct MetricsOptions {
  double order = 1.0;
  bool normalized = false;  // headline values use max-death normalized diagrams
  GroundMetric ground = GroundMetric::kLInf;
};

// `approx` is compared against `exact`; the headline fields follow
// `normalized` and both variants are reported under "raw" and "diagram_normalized".
Json metrics_report(const SpanningTree& approx, const SpanningTree& exact,
                    const MetricsOptions& options);

Json tree_summary(const SpanningTree& tree, MstMethod method, double seconds);

enum class SweepParam { kAlpha, kL, kR };

const char* to_string(SweepParam param);
SweepParam parse_sweep_param(std::string_view name);

struct SweepRow {
  SweepParam param = SweepParam::kAlpha;
  double value = 0.0;
  std::uint64_t seed = 0;
  double build_seconds = 0.0;
  double rwe = 0.0;
  double bottleneck = 0.0;
  double wasserstein = 0.0;
};

struct SweepRequest {
  SweepParam param = SweepParam::kAlpha;
  std::vector<double> values;
  std::vector<std::uint64_t> seeds;
  VamanaParams base;
  MetricsOptions metrics;
};

// One row per (value, seed), values outermost. Grids outside the ranges
// explored in the original study warn but run. When R is swept, L is raised
// to R where needed.
std::vector<SweepRow> run_sweep(const PointSet& points, const SpanningTree& exact,
                                const SweepRequest& request);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

double median(std::vector<double> values);

}  // namespace topolayout
