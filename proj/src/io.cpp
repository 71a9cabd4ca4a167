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

#include "topolayout/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "topolayout/error.hpp"

namespace topolayout {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

bool parse_real(std::string_view cell, double& out) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

template <typename T>
T read_le(const std::byte* p) {
  static_assert(std::endian::native == std::endian::little,
                "fvecs reader assumes a little-endian host");
  T value;
  std::memcpy(&value, p, sizeof(T));
  return value;
}

}  // namespace

PointSet parse_csv(std::string_view text, const CsvOptions& options) {
  const auto lines = split_lines(text);
  std::size_t first_data = 0;
  std::optional<std::size_t> label_index;
  std::size_t arity = 0;

  if (options.has_header) {
    if (lines.empty()) throw Error(ErrorKind::kEmptyInput, "CSV input is empty");
    const auto header = split_cells(lines.front());
    arity = header.size();
    first_data = 1;
    if (options.label_column) {
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == *options.label_column) label_index = c;
      }
    }
  }
  if (options.label_column && !label_index) {
    throw Error(ErrorKind::kInvalidArgument,
                "label column '" + *options.label_column + "' not found");
  }
  if (lines.size() <= first_data) {
    throw Error(ErrorKind::kEmptyInput, "CSV input has no data rows");
  }

  std::vector<double> coords;
  std::vector<std::string> labels;
  std::size_t dim = 0;
  for (std::size_t li = first_data; li < lines.size(); ++li) {
    const std::size_t row = li - first_data + 1;
    const auto cells = split_cells(lines[li]);
    if (arity == 0) arity = cells.size();
    if (cells.size() != arity) {
      throw Error(ErrorKind::kParse,
                  "row " + std::to_string(row) + ": expected " +
                      std::to_string(arity) + " columns, found " +
                      std::to_string(cells.size()),
                  row);
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (label_index && c == *label_index) {
        labels.emplace_back(cells[c]);
        continue;
      }
      double value = 0.0;
      if (!parse_real(cells[c], value)) {
        throw Error(ErrorKind::kParse,
                    "row " + std::to_string(row) + ", column " +
                        std::to_string(c + 1) + ": '" + std::string(cells[c]) +
                        "' is not a finite real",
                    row);
      }
      coords.push_back(value);
    }
  }
  dim = arity - (label_index ? 1 : 0);
  if (dim == 0) {
    throw Error(ErrorKind::kParse, "CSV input has no numeric columns");
  }
  const std::size_t n = coords.size() / dim;
  return PointSet(n, dim, std::move(coords), std::move(labels));
}

PointSet load_csv(const std::filesystem::path& path,
                  const CsvOptions& options) {
  return parse_csv(read_file(path), options);
}

PointSet parse_fvecs(std::span<const std::byte> bytes) {
  if (bytes.empty()) throw Error(ErrorKind::kEmptyInput, "fvecs input is empty");
  std::vector<double> coords;
  std::size_t offset = 0;
  std::size_t dim = 0;
  std::size_t record = 0;
  while (offset < bytes.size()) {
    if (bytes.size() - offset < 4) {
      throw Error(ErrorKind::kParse,
                  "record " + std::to_string(record) + ": truncated header",
                  record);
    }
    const auto d = read_le<std::int32_t>(bytes.data() + offset);
    offset += 4;
    if (d <= 0) {
      throw Error(ErrorKind::kParse,
                  "record " + std::to_string(record) + ": non-positive dimension " +
                      std::to_string(d),
                  record);
    }
    if (record == 0) {
      dim = static_cast<std::size_t>(d);
    } else if (static_cast<std::size_t>(d) != dim) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "record " + std::to_string(record) + ": dimension " +
                      std::to_string(d) + " differs from " + std::to_string(dim),
                  record);
    }
    const std::size_t payload = dim * sizeof(float);
    if (bytes.size() - offset < payload) {
      throw Error(ErrorKind::kParse,
                  "record " + std::to_string(record) + ": truncated payload",
                  record);
    }
    for (std::size_t i = 0; i < dim; ++i) {
      coords.push_back(static_cast<double>(
          read_le<float>(bytes.data() + offset + i * sizeof(float))));
    }
    offset += payload;
    ++record;
  }
  return PointSet(record, dim, std::move(coords));
}

PointSet load_fvecs(const std::filesystem::path& path) {
  const std::string raw = read_file(path);
  return parse_fvecs(std::as_bytes(std::span(raw.data(), raw.size())));
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string to_csv(const PointSet& points) {
  std::string out;
  if (points.has_labels()) {
    for (std::size_t c = 0; c < points.dim(); ++c) {
      out += 'x';
      out += std::to_string(c);
      out += ',';
    }
    out += "label\n";
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto row = points[i];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    if (points.has_labels()) {
      out += ',';
      out += points.labels()[i];
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::kIo, "write failed for '" + path.string() + "'");
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorKind::kIo, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

DatasetMeta describe(const PointSet& points, std::string name,
                     SourceFormat format, std::string_view source_bytes) {
  return DatasetMeta{std::move(name), points.size(), points.dim(), format,
                     sha256_hex(source_bytes)};
}

}  // namespace topolayout
