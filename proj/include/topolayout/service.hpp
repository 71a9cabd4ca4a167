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
#include <functional>
#include <memory>
#include <string>

namespace topolayout {

struct ServiceOptions {
  std::size_t max_upload_bytes = 64u << 20;
  unsigned compute_threads = 1;  // > 1 gives up byte-identical replay
  // Runs while a dataset's compute lock is held; lets tests hold a request
  // in flight.
  std::function<void()> on_compute_locked;
};

// Dataset registry plus hierarchy and layout endpoints:
//   POST /datasets                       upload (multipart field "file" or raw body)
//   POST /datasets/{id}/mst              {method, params, seed}
//   GET  /datasets/{id}/hierarchy?eta=   merge tree and treemap rects
//   POST /datasets/{id}/layout           {selected, c, alpha_max, eta}
//   GET  /health
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds and serves on a background thread; port 0 picks a free port.
  // Returns the bound port.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  // Serves on the calling thread until stop().
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace topolayout
