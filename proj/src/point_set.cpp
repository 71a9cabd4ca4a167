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

#include "topolayout/point_set.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "topolayout/error.hpp"

namespace topolayout {

PointSet::PointSet(std::size_t n, std::size_t dim, std::vector<double> coords,
                   std::vector<std::string> labels)
    : n_(n), dim_(dim), coords_(std::move(coords)), labels_(std::move(labels)) {
  if (n_ == 0) throw Error(ErrorKind::kEmptyInput, "point set has no points");
  if (dim_ == 0) {
    throw Error(ErrorKind::kInvalidArgument, "point set has zero dimensions");
  }
  if (coords_.size() != n_ * dim_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "coordinate buffer size does not match n x d");
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw Error(ErrorKind::kInvalidArgument,
                "label count " + std::to_string(labels_.size()) +
                    " does not match point count " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "non-finite coordinate in point " + std::to_string(i / dim_),
                  i / dim_ + 1);
    }
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw Error(ErrorKind::kEmptyInput, "no rows");
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " values, expected " +
                      std::to_string(dim),
                  i + 1);
    }
    coords.insert(coords.end(), rows[i].begin(), rows[i].end());
  }
  return PointSet(rows.size(), dim, std::move(coords));
}

double euclidean_distance(std::span<const double> a,
                          std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "distance between points of dimension " +
                    std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  return std::sqrt(detail::squared_distance(a.data(), b.data(), a.size()));
}

}  // namespace topolayout
