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

#include "topolayout/service.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "httplib.h"
#include "topolayout/error.hpp"
#include "topolayout/pipeline.hpp"

namespace topolayout {

namespace {

constexpr const char* kJson = "application/json";

struct HttpError {
  int status;
  Json body;
};

Json error_body(std::string_view kind, const std::string& message,
                std::optional<std::size_t> row = std::nullopt) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  if (row) e["row"] = *row;
  Json out;
  out["error"] = std::move(e);
  return out;
}

[[noreturn]] void fail(int status, std::string_view kind, const std::string& message) {
  throw HttpError{status, error_body(kind, message)};
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotFound:
      return 404;
    case ErrorKind::kDegenerate:
      return 422;
    case ErrorKind::kIo:
      return 500;
    default:
      return 400;
  }
}

struct CachedHierarchy {
  Hierarchy hierarchy;
  std::string body;
};

struct DatasetState {
  Dataset dataset;
  std::mutex compute;

  std::mutex artifacts;  // guards the members below
  std::shared_ptr<const SpanningTree> mst;
  std::map<std::size_t, std::shared_ptr<const CachedHierarchy>> hierarchies;
  std::optional<std::size_t> last_eta;
};

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    Json j = Json::parse(req.body);
    if (!j.is_object()) fail(400, "parse", "request body must be a JSON object");
    return j;
  } catch (const nlohmann::json::exception& e) {
    fail(400, "parse", std::string("request body: ") + e.what());
  }
}

template <typename T>
T field_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(400, "invalid_argument", std::string("field '") + key + "' has the wrong type");
  }
}

std::string eta_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_unsigned()) return std::to_string(value.get<std::size_t>());
  fail(400, "invalid_argument", "eta must be a count or a percentage string");
}

ScalingParams scaling_from(const Json& body) {
  ScalingParams params;
  params.c = field_or(body, "c", params.c);
  params.alpha_max = field_or(body, "alpha_max", params.alpha_max);
  params.validate();
  return params;
}

}  // namespace

struct Service::Impl {
  ServiceOptions options;
  httplib::Server server;
  std::thread worker;

  std::mutex registry_mutex;
  std::map<std::string, std::shared_ptr<DatasetState>> datasets;
  std::size_t next_id = 1;

  explicit Impl(ServiceOptions o) : options(std::move(o)) { install(); }

  std::shared_ptr<DatasetState> find(const std::string& id) {
    std::lock_guard lock(registry_mutex);
    const auto it = datasets.find(id);
    if (it == datasets.end()) fail(404, "not_found", "unknown dataset '" + id + "'");
    return it->second;
  }

  // The tree and its hierarchy are read under one lock so they belong to
  // the same MST revision.
  struct Snapshot {
    std::shared_ptr<const SpanningTree> mst;
    std::shared_ptr<const CachedHierarchy> hierarchy;
  };

  static Snapshot hierarchy_for(DatasetState& state, std::size_t eta) {
    std::lock_guard lock(state.artifacts);
    if (!state.mst) fail(412, "precondition_failed", "no MST has been computed for this dataset");
    state.last_eta = eta;
    auto& slot = state.hierarchies[eta];
    if (!slot) {
      auto cached = std::make_shared<CachedHierarchy>();
      cached->hierarchy = build_hierarchy(*state.mst, eta);
      cached->body = dump(hierarchy_to_json(cached->hierarchy));
      slot = std::move(cached);
    }
    return Snapshot{state.mst, slot};
  }

  void upload(const httplib::Request& req, httplib::Response& res) {
    std::string name = "upload";
    std::string format = req.has_param("format") ? req.get_param_value("format") : "";
    std::string_view bytes = req.body;
    std::string file_content;
    if (req.is_multipart_form_data()) {
      if (!req.has_file("file")) fail(400, "parse", "multipart upload needs a 'file' field");
      const auto file = req.get_file_value("file");
      file_content = file.content;
      bytes = file_content;
      if (!file.filename.empty()) name = file.filename;
      if (req.has_file("format")) format = req.get_file_value("format").content;
      if (format.empty() && name.size() > 6 && name.ends_with(".fvecs")) format = "fvecs";
    }
    if (bytes.size() > options.max_upload_bytes) {
      fail(413, "too_large", "upload exceeds " + std::to_string(options.max_upload_bytes) + " bytes");
    }
    if (format.empty()) format = "csv";
    Dataset dataset = load_dataset(bytes, parse_source_format(format), name);

    auto state = std::make_shared<DatasetState>();
    state->dataset = std::move(dataset);
    std::string id;
    {
      std::lock_guard lock(registry_mutex);
      id = "d" + std::to_string(next_id++);
      datasets.emplace(id, state);
    }
    const auto& meta = state->dataset.meta;
    Json out;
    out["dataset_id"] = id;
    out["n"] = meta.n;
    out["d"] = meta.d;
    out["format"] = to_string(meta.source_format);
    out["checksum"] = meta.checksum;
    res.status = 201;
    res.set_content(dump(out), kJson);
  }

  void mst(const httplib::Request& req, httplib::Response& res) {
    auto state = find(req.matches[1]);
    const Json body = parse_body(req);
    MstRequest request;
    request.method = parse_mst_method(field_or<std::string>(body, "method", "exact"));
    const Json params = body.contains("params") ? body["params"] : Json::object();
    request.vamana.alpha = field_or(params, "alpha", request.vamana.alpha);
    request.vamana.R = field_or(params, "R", request.vamana.R);
    request.vamana.L = field_or(params, "L", request.vamana.L);
    request.vamana.passes = field_or(params, "passes", request.vamana.passes);
    request.vamana.seed = field_or(body, "seed", request.vamana.seed);
    request.vamana.threads = options.compute_threads;
    request.vamana.validate();

    std::unique_lock compute(state->compute, std::try_to_lock);
    if (!compute.owns_lock()) {
      fail(409, "conflict", "a computation for this dataset is already in flight");
    }
    if (options.on_compute_locked) options.on_compute_locked();
    const auto start = std::chrono::steady_clock::now();
    auto tree = std::make_shared<const SpanningTree>(compute_mst(state->dataset.points, request));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    {
      std::lock_guard lock(state->artifacts);
      state->mst = tree;
      state->hierarchies.clear();
    }
    res.set_content(dump(tree_summary(*tree, request.method, seconds)), kJson);
  }

  void hierarchy(const httplib::Request& req, httplib::Response& res) {
    auto state = find(req.matches[1]);
    const std::size_t n = state->dataset.points.size();
    const std::size_t eta = req.has_param("eta") ? resolve_eta(req.get_param_value("eta"), n)
                                                 : default_eta(n);
    res.set_content(hierarchy_for(*state, eta).hierarchy->body, kJson);
  }

  void layout(const httplib::Request& req, httplib::Response& res) {
    auto state = find(req.matches[1]);
    const Json body = parse_body(req);
    const std::size_t n = state->dataset.points.size();
    std::size_t eta = default_eta(n);
    if (body.contains("eta") && !body["eta"].is_null()) {
      eta = resolve_eta(eta_text(body["eta"]), n);
    } else {
      std::lock_guard lock(state->artifacts);
      if (state->last_eta) eta = *state->last_eta;
    }
    const auto selected = field_or(body, "selected", std::vector<NodeId>{});
    const ScalingParams params = scaling_from(body);
    const Snapshot snapshot = hierarchy_for(*state, eta);
    const Hierarchy& hierarchy = snapshot.hierarchy->hierarchy;
    if (const auto bad = invalid_selection(hierarchy.simplified, selected)) {
      Json out = error_body("unprocessable", "node " + std::to_string(*bad) +
                                                 " is not a component of interest");
      out["error"]["node"] = *bad;
      throw HttpError{422, std::move(out)};
    }
    const Projection projection = project(*snapshot.mst, hierarchy, selected, params);
    res.set_content(dump(projection_to_json(projection)), kJson);
  }

  using Handler = void (Impl::*)(const httplib::Request&, httplib::Response&);

  httplib::Server::Handler wrap(Handler handler) {
    return [this, handler](const httplib::Request& req, httplib::Response& res) {
      try {
        (this->*handler)(req, res);
      } catch (const HttpError& e) {
        res.status = e.status;
        res.set_content(dump(e.body), kJson);
      } catch (const Error& e) {
        res.status = status_for(e.kind());
        res.set_content(dump(error_body(to_string(e.kind()), e.what(), e.row())), kJson);
      } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(dump(error_body("internal", e.what())), kJson);
      }
    };
  }

  void install() {
    server.set_payload_max_length(options.max_upload_bytes + (1u << 16));
    server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("{\"status\":\"ok\"}\n", kJson);
    });
    server.Post("/datasets", wrap(&Impl::upload));
    server.Post(R"(/datasets/([^/]+)/mst)", wrap(&Impl::mst));
    server.Get(R"(/datasets/([^/]+)/hierarchy)", wrap(&Impl::hierarchy));
    server.Post(R"(/datasets/([^/]+)/layout)", wrap(&Impl::layout));
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
      const char* kind = res.status == 404 ? "not_found"
                         : res.status == 413 ? "too_large"
                                             : "http";
      res.set_content(dump(error_body(kind, httplib::status_message(res.status))), kJson);
      return httplib::Server::HandlerResponse::Handled;
    });
  }
};

Service::Service(ServiceOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}

Service::~Service() { stop(); }

int Service::start(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (!impl_->server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) throw Error(ErrorKind::kIo, "cannot bind " + host + ":" + std::to_string(port));
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void Service::run(const std::string& host, int port) {
  if (!impl_->server.listen(host, port)) {
    throw Error(ErrorKind::kIo, "cannot listen on " + host + ":" + std::to_string(port));
  }
}

void Service::stop() {
  impl_->server.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace topolayout
