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

#include "topolayout/json_io.hpp"
#include "topolayout/layout.hpp"
#include "topolayout/pipeline.hpp"

namespace topolayout {

struct InputSpec {
  std::string path;
  std::string format = "auto";  // csv | fvecs | auto (by extension)
};

struct ProjectOptions {
  InputSpec input;
  std::string eta = "1%";
  ScalingParams scaling;
  MstRequest mst;
  std::string out_dir;  // layout.json, hierarchy.json, mst.txt, manifest.json
};

struct MstOptions {
  InputSpec input;
  MstRequest mst;
  std::string out;  // tree file; ".json" selects the JSON form
};

struct MetricsCommandOptions {
  std::string tree_a;  // approximate tree
  std::string tree_b;  // reference tree
  MetricsOptions metrics;
  std::string out;  // report file; empty prints to stdout without a manifest
};

struct SweepOptions {
  InputSpec input;
  SweepRequest sweep;
  std::string out;  // CSV file
};

// Each command writes its outputs plus a manifest next to them and returns
// the manifest. Manifests carry every parameter, the seed, the input
// checksum, wall-clock timings and output checksums.
Json run_project(const ProjectOptions& options);
Json run_mst(const MstOptions& options);
Json run_metrics(const MetricsCommandOptions& options, std::string* report = nullptr);
Json run_sweep_command(const SweepOptions& options);

// Reruns the command recorded in a manifest, writing to `out` (a directory
// for project, a file otherwise). The input checksum must still match.
Json replay_manifest(const Json& manifest, const std::string& out);

std::string manifest_path_for(const std::string& output_file);

}  // namespace topolayout
