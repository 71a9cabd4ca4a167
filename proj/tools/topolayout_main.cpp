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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topolayout/commands.hpp"
#include "topolayout/error.hpp"
#include "topolayout/io.hpp"
#include "topolayout/service.hpp"

namespace {

using namespace topolayout;

void print_error(std::string_view kind, const std::string& message,
                 std::optional<std::size_t> row = std::nullopt) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  if (row) e["row"] = *row;
  Json out;
  out["error"] = std::move(e);
  std::cerr << dump(out);
}

struct MstFlags {
  std::string method = "exact";
  VamanaParams vamana;
};

void add_input(CLI::App* cmd, InputSpec& input) {
  cmd->add_option("--input", input.path, "Point file")->required();
  cmd->add_option("--format", input.format, "csv | fvecs | auto")
      ->check(CLI::IsMember({"csv", "fvecs", "auto"}));
}

void add_vamana(CLI::App* cmd, VamanaParams& p) {
  cmd->add_option("--alpha", p.alpha, "Pruning factor (>= 1)");
  cmd->add_option("--R", p.R, "Maximum out-degree");
  cmd->add_option("--L", p.L, "Search list size (>= R)");
  cmd->add_option("--passes", p.passes, "Build passes");
  cmd->add_option("--seed", p.seed, "Random seed");
  cmd->add_option("--threads", p.threads, "Build threads (1 keeps runs reproducible)");
}

void add_mst(CLI::App* cmd, MstFlags& flags) {
  cmd->add_option("--mst", flags.method, "exact | approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  add_vamana(cmd, flags.vamana);
}

void add_metrics(CLI::App* cmd, MetricsOptions& m, std::string& ground) {
  cmd->add_option("--order", m.order, "Wasserstein order");
  cmd->add_flag("--normalized", m.normalized, "Normalize diagrams by their max death");
  cmd->add_option("--ground-metric", ground, "linf | l1 | l2")
      ->check(CLI::IsMember({"linf", "l1", "l2"}));
}

MstRequest to_request(const MstFlags& flags) {
  MstRequest r;
  r.method = parse_mst_method(flags.method);
  r.vamana = flags.vamana;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology-preserving projection of point clouds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TOPOLAYOUT_VERSION);

  ProjectOptions project;
  MstFlags project_mst;
  auto* cmd_project = app.add_subcommand("project", "Project points to 2D");
  add_input(cmd_project, project.input);
  cmd_project->add_option("--eta", project.eta, "Component size threshold, count or percent");
  cmd_project->add_option("--c", project.scaling.c, "Component scaling constant");
  cmd_project->add_option("--alpha-max", project.scaling.alpha_max, "Upper bound on scaling");
  add_mst(cmd_project, project_mst);
  cmd_project->add_option("--out", project.out_dir, "Output directory")->required();

  MstOptions mst;
  MstFlags mst_flags;
  auto* cmd_mst = app.add_subcommand("mst", "Compute an exact or approximate EMST");
  add_input(cmd_mst, mst.input);
  add_mst(cmd_mst, mst_flags);
  cmd_mst->add_option("--out", mst.out, "Tree file (.json for JSON)")->required();

  MetricsCommandOptions metrics;
  std::string metrics_ground = "linf";
  auto* cmd_metrics = app.add_subcommand("metrics", "Compare an approximate tree to a reference");
  cmd_metrics->add_option("tree_a", metrics.tree_a, "Approximate tree")->required();
  cmd_metrics->add_option("tree_b", metrics.tree_b, "Reference tree")->required();
  add_metrics(cmd_metrics, metrics.metrics, metrics_ground);
  cmd_metrics->add_option("--out", metrics.out, "Report file (stdout when omitted)");

  SweepOptions sweep;
  std::string sweep_param = "alpha";
  std::string sweep_ground = "linf";
  std::vector<std::uint64_t> sweep_seeds{0, 1, 2};
  auto* cmd_sweep = app.add_subcommand("sweep", "Parameter sweep of the approximate tree");
  add_input(cmd_sweep, sweep.input);
  cmd_sweep->add_option("--param", sweep_param, "alpha | L | R")
      ->check(CLI::IsMember({"alpha", "L", "R"}));
  cmd_sweep->add_option("--values", sweep.sweep.values, "Grid values")
      ->delimiter(',')
      ->required();
  cmd_sweep->add_option("--seeds", sweep_seeds, "Seeds")->delimiter(',');
  add_vamana(cmd_sweep, sweep.sweep.base);
  add_metrics(cmd_sweep, sweep.sweep.metrics, sweep_ground);
  cmd_sweep->add_option("--out", sweep.out, "CSV file")->required();

  std::string replay_manifest_path;
  std::string replay_out;
  auto* cmd_replay = app.add_subcommand("replay", "Rerun the command recorded in a manifest");
  cmd_replay->add_option("manifest", replay_manifest_path, "Manifest file")->required();
  cmd_replay->add_option("--out", replay_out, "Output file or directory")->required();

  ServiceOptions service;
  std::string host = "127.0.0.1";
  int port = 8080;
  auto* cmd_serve = app.add_subcommand("serve", "Start the JSON service");
  cmd_serve->add_option("--serve-port", port, "Port");
  cmd_serve->add_option("--host", host, "Bind address");
  cmd_serve->add_option("--max-upload-bytes", service.max_upload_bytes, "Upload size cap");
  cmd_serve->add_option("--threads", service.compute_threads, "Compute threads per request");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }

  try {
    if (cmd_project->parsed()) {
      project.mst = to_request(project_mst);
      run_project(project);
    } else if (cmd_mst->parsed()) {
      mst.mst = to_request(mst_flags);
      run_mst(mst);
    } else if (cmd_metrics->parsed()) {
      metrics.metrics.ground = parse_ground_metric(metrics_ground);
      std::string report;
      run_metrics(metrics, &report);
      if (metrics.out.empty()) std::cout << report;
    } else if (cmd_sweep->parsed()) {
      sweep.sweep.param = parse_sweep_param(sweep_param);
      sweep.sweep.seeds = sweep_seeds;
      sweep.sweep.metrics.ground = parse_ground_metric(sweep_ground);
      run_sweep_command(sweep);
    } else if (cmd_replay->parsed()) {
      replay_manifest(Json::parse(read_file(replay_manifest_path)), replay_out);
    } else if (cmd_serve->parsed()) {
      Service server(service);
      std::cerr << "listening on " << host << ":" << port << "\n";
      server.run(host, port);
    }
  } catch (const Error& e) {
    print_error(to_string(e.kind()), e.what(), e.row());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 0;
}
