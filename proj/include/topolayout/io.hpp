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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "topolayout/point_set.hpp"

namespace topolayout {

struct CsvOptions {
  bool has_header = false;
  std::optional<std::string> label_column;
};

PointSet parse_csv(std::string_view text, const CsvOptions& options = {});
PointSet load_csv(const std::filesystem::path& path,
                  const CsvOptions& options = {});

// fvecs: repeated records of a little-endian int32 dimension followed by
// that many little-endian float32 values.
PointSet parse_fvecs(std::span<const std::byte> bytes);
PointSet load_fvecs(const std::filesystem::path& path);

/// Canonical CSV: shortest round-trip decimal for every coordinate. A header
/// row is written only when labels are present (`x0..x{d-1},label`).
std::string to_csv(const PointSet& points);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

std::string sha256_hex(std::string_view bytes);

DatasetMeta describe(const PointSet& points, std::string name,
                     SourceFormat format, std::string_view source_bytes);

std::string format_double(double value);

}  // namespace topolayout
