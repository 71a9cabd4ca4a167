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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

namespace topolayout {

using PointId = std::uint32_t;

/// Immutable n x d matrix of finite 64-bit coordinates, row-major, with
/// optional per-point labels. Labels are display metadata only.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t n, std::size_t dim, std::vector<double> coords,
           std::vector<std::string> labels = {});

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return n_ == 0; }

  std::span<const double> operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  const double* row_ptr(std::size_t i) const noexcept {
    return coords_.data() + i * dim_;
  }
  const std::vector<double>& coords() const noexcept { return coords_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::vector<std::string> labels_;
};

enum class SourceFormat { kCsv, kFvecs };

struct DatasetMeta {
  std::string name;
  std::size_t n = 0;
  std::size_t d = 0;
  SourceFormat source_format = SourceFormat::kCsv;
  std::string checksum;  // hex SHA-256 of the source bytes
};

/// Euclidean distance; throws on dimension mismatch.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

namespace detail {

using f64x4 = double __attribute__((vector_size(32)));
using f32x8 = float __attribute__((vector_size(32)));

template <typename V, typename T>
inline V load_unaligned(const T* p) noexcept {
  V v;
  std::memcpy(&v, p, sizeof v);
  return v;
}

// Fixed summation order so that d(a, b) and d(b, a) are bitwise equal and
// every module sees the same weight for the same pair.
inline double squared_distance(const double* a, const double* b,
                               std::size_t dim) noexcept {
  f64x4 acc0{}, acc1{}, acc2{}, acc3{};
  std::size_t i = 0;
  for (; i + 16 <= dim; i += 16) {
    const f64x4 d0 = load_unaligned<f64x4>(a + i) - load_unaligned<f64x4>(b + i);
    const f64x4 d1 =
        load_unaligned<f64x4>(a + i + 4) - load_unaligned<f64x4>(b + i + 4);
    const f64x4 d2 =
        load_unaligned<f64x4>(a + i + 8) - load_unaligned<f64x4>(b + i + 8);
    const f64x4 d3 =
        load_unaligned<f64x4>(a + i + 12) - load_unaligned<f64x4>(b + i + 12);
    acc0 += d0 * d0;
    acc1 += d1 * d1;
    acc2 += d2 * d2;
    acc3 += d3 * d3;
  }
  const f64x4 acc = (acc0 + acc1) + (acc2 + acc3);
  double tail = 0.0;
  for (; i < dim; ++i) {
    const double d = a[i] - b[i];
    tail += d * d;
  }
  return ((acc[0] + acc[1]) + (acc[2] + acc[3])) + tail;
}

// Single-precision kernel for rows padded with zeros to a multiple of 8.
inline float squared_distance_padded(const float* a, const float* b,
                                     std::size_t padded_dim) noexcept {
  f32x8 acc0{}, acc1{};
  std::size_t i = 0;
  for (; i + 16 <= padded_dim; i += 16) {
    const f32x8 d0 = load_unaligned<f32x8>(a + i) - load_unaligned<f32x8>(b + i);
    const f32x8 d1 =
        load_unaligned<f32x8>(a + i + 8) - load_unaligned<f32x8>(b + i + 8);
    acc0 += d0 * d0;
    acc1 += d1 * d1;
  }
  if (i < padded_dim) {
    const f32x8 d = load_unaligned<f32x8>(a + i) - load_unaligned<f32x8>(b + i);
    acc0 += d * d;
  }
  const f32x8 acc = acc0 + acc1;
  return ((acc[0] + acc[1]) + (acc[2] + acc[3])) +
         ((acc[4] + acc[5]) + (acc[6] + acc[7]));
}

}  // namespace detail

inline double point_distance(const PointSet& points, std::size_t i,
                             std::size_t j) noexcept {
  return std::sqrt(detail::squared_distance(points.row_ptr(i),
                                            points.row_ptr(j), points.dim()));
}

}  // namespace topolayout
