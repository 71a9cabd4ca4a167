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

#include "topolayout/commands.hpp"

#include <chrono>
#include <filesystem>
#include <string>

#include "topolayout/error.hpp"
#include "topolayout/io.hpp"

#ifndef TOPOLAYOUT_VERSION
#define TOPOLAYOUT_VERSION "unknown"
#endif

namespace topolayout {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SourceFormat resolve_format(const InputSpec& input) {
  if (input.format != "auto") return parse_source_format(input.format);
  return fs::path(input.path).extension() == ".fvecs" ? SourceFormat::kFvecs
                                                      : SourceFormat::kCsv;
}

Dataset load_input(const InputSpec& input) {
  if (input.path.empty()) throw Error(ErrorKind::kInvalidArgument, "no input file given");
  const std::string bytes = read_file(input.path);
  return load_dataset(bytes, resolve_format(input), fs::path(input.path).filename().string());
}

Json input_json(const InputSpec& input, const Dataset& dataset) {
  Json j;
  j["path"] = fs::absolute(input.path).lexically_normal().string();
  j["format"] = to_string(dataset.meta.source_format);
  j["n"] = dataset.meta.n;
  j["d"] = dataset.meta.d;
  j["checksum"] = dataset.meta.checksum;
  return j;
}

InputSpec input_from_json(const Json& j) {
  InputSpec input;
  input.path = j.at("path").get<std::string>();
  input.format = j.at("format").get<std::string>();
  return input;
}

Json vamana_json(const VamanaParams& p) {
  Json j;
  j["alpha"] = p.alpha;
  j["R"] = p.R;
  j["L"] = p.L;
  j["passes"] = p.passes;
  j["seed"] = p.seed;
  j["threads"] = p.threads;
  return j;
}

VamanaParams vamana_from_json(const Json& j) {
  VamanaParams p;
  p.alpha = j.at("alpha").get<double>();
  p.R = j.at("R").get<std::size_t>();
  p.L = j.at("L").get<std::size_t>();
  p.passes = j.at("passes").get<std::size_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.threads = j.at("threads").get<unsigned>();
  return p;
}

Json mst_json(const MstRequest& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["vamana"] = vamana_json(r.vamana);
  return j;
}

MstRequest mst_from_json(const Json& j) {
  MstRequest r;
  r.method = parse_mst_method(j.at("method").get<std::string>());
  r.vamana = vamana_from_json(j.at("vamana"));
  return r;
}

Json scaling_json(const ScalingParams& s) {
  Json j;
  j["c"] = s.c;
  j["alpha_max"] = real_to_json(s.alpha_max);
  return j;
}

ScalingParams scaling_from_json(const Json& j) {
  ScalingParams s;
  s.c = j.at("c").get<double>();
  s.alpha_max = real_from_json(j.at("alpha_max"));
  return s;
}

Json metrics_json(const MetricsOptions& m) {
  Json j;
  j["order"] = m.order;
  j["normalized"] = m.normalized;
  j["ground_metric"] = to_string(m.ground);
  return j;
}

MetricsOptions metrics_from_json(const Json& j) {
  MetricsOptions m;
  m.order = j.at("order").get<double>();
  m.normalized = j.at("normalized").get<bool>();
  m.ground = parse_ground_metric(j.at("ground_metric").get<std::string>());
  return m;
}

Json file_json(const fs::path& path, const std::string& contents) {
  Json j;
  j["path"] = path.filename().string();
  j["sha256"] = sha256_hex(contents);
  return j;
}

Json manifest_skeleton(const char* command) {
  Json j;
  j["command"] = command;
  j["version"] = TOPOLAYOUT_VERSION;
  return j;
}

void write_output(const fs::path& path, const std::string& contents, Json& outputs) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_file(path, contents);
  outputs.push_back(file_json(path, contents));
}

void check_outputs_differ(const std::string& out, const std::string& manifest) {
  if (out.empty()) throw Error(ErrorKind::kInvalidArgument, "no output path given (--out)");
  if (fs::path(out) == fs::path(manifest)) {
    throw Error(ErrorKind::kInvalidArgument, "output and manifest paths collide");
  }
}

}  // namespace

std::string manifest_path_for(const std::string& output_file) {
  return output_file + ".manifest.json";
}

Json run_project(const ProjectOptions& options) {
  if (options.out_dir.empty()) throw Error(ErrorKind::kInvalidArgument, "no output directory given (--out)");
  options.scaling.validate();
  options.mst.vamana.validate();
  const auto start = Clock::now();
  const Dataset dataset = load_input(options.input);
  const std::size_t eta = resolve_eta(options.eta, dataset.points.size());

  auto t = Clock::now();
  const SpanningTree tree = compute_mst(dataset.points, options.mst);
  const double mst_seconds = seconds_since(t);
  t = Clock::now();
  const Hierarchy hierarchy = build_hierarchy(tree, eta);
  const double hierarchy_seconds = seconds_since(t);
  t = Clock::now();
  const Projection projection = project_all(tree, hierarchy, options.scaling);
  const double layout_seconds = seconds_since(t);

  const fs::path dir(options.out_dir);
  Json outputs = Json::array();
  write_output(dir / "layout.json", dump(projection_to_json(projection)), outputs);
  write_output(dir / "hierarchy.json", dump(hierarchy_to_json(hierarchy)), outputs);
  write_output(dir / "mst.txt", tree_to_text(tree), outputs);

  Json manifest = manifest_skeleton("project");
  Json params;
  params["eta"] = options.eta;
  params["eta_resolved"] = eta;
  params["scaling"] = scaling_json(options.scaling);
  params["mst"] = mst_json(options.mst);
  manifest["params"] = std::move(params);
  manifest["seed"] = options.mst.vamana.seed;
  manifest["input"] = input_json(options.input, dataset);
  Json timings;
  timings["mst_seconds"] = mst_seconds;
  timings["hierarchy_seconds"] = hierarchy_seconds;
  timings["layout_seconds"] = layout_seconds;
  timings["total_seconds"] = seconds_since(start);
  manifest["timings"] = std::move(timings);
  manifest["outputs"] = std::move(outputs);
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

Json run_mst(const MstOptions& options) {
  const std::string manifest_path = manifest_path_for(options.out);
  check_outputs_differ(options.out, manifest_path);
  options.mst.vamana.validate();
  const Dataset dataset = load_input(options.input);
  const auto t = Clock::now();
  const SpanningTree tree = compute_mst(dataset.points, options.mst);
  const double seconds = seconds_since(t);

  const fs::path out(options.out);
  Json outputs = Json::array();
  write_output(out,
               out.extension() == ".json" ? dump(tree_to_json(tree)) : tree_to_text(tree),
               outputs);

  Json manifest = manifest_skeleton("mst");
  Json params;
  params["mst"] = mst_json(options.mst);
  manifest["params"] = std::move(params);
  manifest["seed"] = options.mst.vamana.seed;
  manifest["input"] = input_json(options.input, dataset);
  manifest["summary"] = tree_summary(tree, options.mst.method, seconds);
  Json timings;
  timings["mst_seconds"] = seconds;
  manifest["timings"] = std::move(timings);
  manifest["outputs"] = std::move(outputs);
  write_file(manifest_path, manifest.dump(2) + "\n");
  return manifest;
}

Json run_metrics(const MetricsCommandOptions& options, std::string* report) {
  if (options.tree_a.empty() || options.tree_b.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "two tree files are required");
  }
  const auto start = Clock::now();
  const std::string text_a = read_file(options.tree_a);
  const std::string text_b = read_file(options.tree_b);
  const std::string body =
      dump(metrics_report(parse_tree(text_a), parse_tree(text_b), options.metrics));
  if (report) *report = body;
  if (options.out.empty()) return Json::object();

  const std::string manifest_path = manifest_path_for(options.out);
  check_outputs_differ(options.out, manifest_path);
  Json outputs = Json::array();
  write_output(options.out, body, outputs);
  Json manifest = manifest_skeleton("metrics");
  Json params;
  params["metrics"] = metrics_json(options.metrics);
  manifest["params"] = std::move(params);
  manifest["seed"] = nullptr;
  Json inputs;
  for (const auto& [key, path, text] : {std::tuple{"tree_a", &options.tree_a, &text_a},
                                        std::tuple{"tree_b", &options.tree_b, &text_b}}) {
    Json j;
    j["path"] = fs::absolute(*path).lexically_normal().string();
    j["checksum"] = sha256_hex(*text);
    inputs[key] = std::move(j);
  }
  manifest["input"] = std::move(inputs);
  Json timings;
  timings["total_seconds"] = seconds_since(start);
  manifest["timings"] = std::move(timings);
  manifest["outputs"] = std::move(outputs);
  write_file(manifest_path, manifest.dump(2) + "\n");
  return manifest;
}

Json run_sweep_command(const SweepOptions& options) {
  const std::string manifest_path = manifest_path_for(options.out);
  check_outputs_differ(options.out, manifest_path);
  const auto start = Clock::now();
  const Dataset dataset = load_input(options.input);
  auto t = Clock::now();
  const SpanningTree exact = exact_emst(dataset.points);
  const double exact_seconds = seconds_since(t);
  const auto rows = run_sweep(dataset.points, exact, options.sweep);

  Json outputs = Json::array();
  write_output(options.out, sweep_to_csv(rows), outputs);
  Json manifest = manifest_skeleton("sweep");
  Json params;
  params["param"] = to_string(options.sweep.param);
  params["values"] = options.sweep.values;
  params["seeds"] = options.sweep.seeds;
  params["base"] = vamana_json(options.sweep.base);
  params["metrics"] = metrics_json(options.sweep.metrics);
  manifest["params"] = std::move(params);
  manifest["seed"] = options.sweep.seeds;
  manifest["input"] = input_json(options.input, dataset);
  Json timings;
  timings["exact_seconds"] = exact_seconds;
  timings["total_seconds"] = seconds_since(start);
  manifest["timings"] = std::move(timings);
  manifest["outputs"] = std::move(outputs);
  write_file(manifest_path, manifest.dump(2) + "\n");
  return manifest;
}

Json replay_manifest(const Json& manifest, const std::string& out) {
  try {
    const std::string command = manifest.at("command").get<std::string>();
    auto checked_input = [&] {
      InputSpec input = input_from_json(manifest.at("input"));
      const std::string expected = manifest["input"].at("checksum").get<std::string>();
      if (sha256_hex(read_file(input.path)) != expected) {
        throw Error(ErrorKind::kInvalidArgument,
                    "input " + input.path + " no longer matches the recorded checksum");
      }
      return input;
    };
    const Json& params = manifest.at("params");
    if (command == "project") {
      ProjectOptions o;
      o.input = checked_input();
      o.eta = params.at("eta").get<std::string>();
      o.scaling = scaling_from_json(params.at("scaling"));
      o.mst = mst_from_json(params.at("mst"));
      o.out_dir = out;
      return run_project(o);
    }
    if (command == "mst") {
      MstOptions o;
      o.input = checked_input();
      o.mst = mst_from_json(params.at("mst"));
      o.out = out;
      return run_mst(o);
    }
    if (command == "metrics") {
      MetricsCommandOptions o;
      o.tree_a = manifest.at("input").at("tree_a").at("path").get<std::string>();
      o.tree_b = manifest.at("input").at("tree_b").at("path").get<std::string>();
      o.metrics = metrics_from_json(params.at("metrics"));
      o.out = out;
      return run_metrics(o);
    }
    if (command == "sweep") {
      SweepOptions o;
      o.input = checked_input();
      o.sweep.param = parse_sweep_param(params.at("param").get<std::string>());
      o.sweep.values = params.at("values").get<std::vector<double>>();
      o.sweep.seeds = params.at("seeds").get<std::vector<std::uint64_t>>();
      o.sweep.base = vamana_from_json(params.at("base"));
      o.sweep.metrics = metrics_from_json(params.at("metrics"));
      o.out = out;
      return run_sweep_command(o);
    }
    throw Error(ErrorKind::kInvalidArgument, "manifest names unknown command '" + command + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("manifest: ") + e.what());
  }
}

}  // namespace topolayout
