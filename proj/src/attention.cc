// Copyright 2026 The XQA Authors.
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

#include "xqa/attention.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include <json.hpp>

#include "xqa/errors.h"

namespace xqa {

namespace {

using nlohmann::json;

// Compensated summation; keeps box masses stable enough that containment
// monotonicity holds in practice.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Samples the grid at fractional coordinate g in [−0.5, n−0.5] with edge
// extension beyond the outermost cell centers.
double axis_blend(double g, int n, int& lo, int& hi, double& t) {
  const double floor_g = std::floor(g);
  lo = static_cast<int>(floor_g);
  t = g - floor_g;
  hi = lo + 1;
  lo = std::clamp(lo, 0, n - 1);
  hi = std::clamp(hi, 0, n - 1);
  return t;
}

DenseMap upsample_raw(int rows, int cols, const std::vector<double>& grid,
                      int width, int height) {
  DenseMap dense;
  dense.width = width;
  dense.height = height;
  dense.values.resize(static_cast<std::size_t>(width) * height);

  const double sx = static_cast<double>(cols) / width;
  const double sy = static_cast<double>(rows) / height;
  for (int y = 0; y < height; ++y) {
    const double gy = (y + 0.5) * sy - 0.5;
    int r0, r1;
    double ty;
    axis_blend(gy, rows, r0, r1, ty);
    for (int x = 0; x < width; ++x) {
      const double gx = (x + 0.5) * sx - 0.5;
      int c0, c1;
      double tx;
      axis_blend(gx, cols, c0, c1, tx);
      const double top = (1.0 - tx) * grid[static_cast<std::size_t>(r0) * cols + c0] +
                         tx * grid[static_cast<std::size_t>(r0) * cols + c1];
      const double bottom =
          (1.0 - tx) * grid[static_cast<std::size_t>(r1) * cols + c0] +
          tx * grid[static_cast<std::size_t>(r1) * cols + c1];
      dense.values[static_cast<std::size_t>(y) * width + x] =
          (1.0 - ty) * top + ty * bottom;
    }
  }

  KahanSum total;
  for (double v : dense.values) total.add(v);
  const double sum = total.value();
  // The constructor rejects all-zero grids, so the mass is positive.
  for (double& v : dense.values) v /= sum;
  return dense;
}

}  // namespace

AttentionMap::AttentionMap(int grid_rows, int grid_cols,
                           std::vector<double> values, int image_width,
                           int image_height)
    : grid_rows_(grid_rows),
      grid_cols_(grid_cols),
      grid_values_(std::move(values)),
      image_width_(image_width),
      image_height_(image_height) {
  if (grid_rows_ < 1 || grid_cols_ < 1) {
    throw ArgumentError("attention: grid must be at least 1x1");
  }
  if (image_width_ < 1 || image_height_ < 1) {
    throw ArgumentError("attention: image dimensions must be positive");
  }
  if (grid_values_.size() !=
      static_cast<std::size_t>(grid_rows_) * grid_cols_) {
    throw ArgumentError("attention: grid value count does not match shape");
  }
  bool any_positive = false;
  for (double v : grid_values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("attention: grid values must be finite and >= 0");
    }
    if (v > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw ValidationError("attention: degenerate attention (all-zero grid)");
  }
  dense_ = upsample_raw(grid_rows_, grid_cols_, grid_values_, image_width_,
                        image_height_);
}

AttentionMap parse_attention(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("attention: malformed JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("grid") || !doc.contains("image")) {
    throw SchemaError("attention: expected fields \"grid\" and \"image\"");
  }
  const json& grid = doc["grid"];
  if (!grid.is_array() || grid.empty()) {
    throw SchemaError("attention: \"grid\" must be a nonempty array of rows");
  }
  const json& image = doc["image"];
  if (!image.is_object() || !image.contains("width") ||
      !image.contains("height")) {
    throw SchemaError("attention: \"image\" must carry width and height");
  }

  std::vector<double> values;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const json& row = grid[r];
    if (!row.is_array() || row.empty()) {
      throw SchemaError("attention: grid row " + std::to_string(r) +
                        " is not a nonempty array");
    }
    if (r == 0) {
      cols = row.size();
    } else if (row.size() != cols) {
      throw SchemaError("attention: ragged grid (row " + std::to_string(r) +
                        " has " + std::to_string(row.size()) +
                        " values, expected " + std::to_string(cols) + ")");
    }
    for (const json& v : row) {
      if (!v.is_number()) {
        throw SchemaError("attention: grid values must be numbers");
      }
      values.push_back(v.get<double>());
    }
  }

  return AttentionMap(static_cast<int>(grid.size()), static_cast<int>(cols),
                      std::move(values), image["width"].get<int>(),
                      image["height"].get<int>());
}

DenseMap upsample(const AttentionMap& map) { return map.dense(); }

double attention_mass(const AttentionMap& map, const BoundingBox& bbox,
                      std::vector<std::string>* warnings) {
  std::optional<BoundingBox> clipped =
      clip_bbox(bbox, map.image_width(), map.image_height());
  if (!clipped) {
    if (warnings != nullptr) {
      warnings->push_back("attention: bounding box lies outside the image");
    }
    return 0.0;
  }
  const DenseMap& dense = map.dense();
  KahanSum mass;
  // Pixel (x, y) has its center at (x + 0.5, y + 0.5): the pixels inside an
  // integer box [x0, x0+w) x [y0, y0+h) are exactly those index ranges.
  for (int y = clipped->y; y < clipped->y + clipped->h; ++y) {
    for (int x = clipped->x; x < clipped->x + clipped->w; ++x) {
      mass.add(dense.at(x, y));
    }
  }
  return mass.value();
}

}  // namespace xqa
