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

#ifndef XQA_ATTENTION_H_
#define XQA_ATTENTION_H_

#include <string>
#include <vector>

#include "xqa/geometry.h"

namespace xqa {

// Per-pixel attention surface, row-major, normalized to total mass 1.
struct DenseMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

// Low-resolution heatmap emitted by a question-answering model, e.g. a 7x7
// grid over a 224x224 image. Values are nonnegative and not all zero.
// Immutable once constructed; the normalized per-pixel upsample is computed
// eagerly so queries are pure reads and safe to run concurrently.
class AttentionMap {
 public:
  // Validates and upsamples. Throws ValidationError on negative, non-finite
  // or all-zero values, ArgumentError on shape mismatches.
  AttentionMap(int grid_rows, int grid_cols, std::vector<double> values,
               int image_width, int image_height);

  int grid_rows() const { return grid_rows_; }
  int grid_cols() const { return grid_cols_; }
  const std::vector<double>& grid_values() const { return grid_values_; }
  int image_width() const { return image_width_; }
  int image_height() const { return image_height_; }

  const DenseMap& dense() const { return dense_; }

 private:
  int grid_rows_ = 0;
  int grid_cols_ = 0;
  std::vector<double> grid_values_;
  int image_width_ = 0;
  int image_height_ = 0;
  DenseMap dense_;
};

// Parses { "grid": [[float,...],...], "image": {"width": int, "height": int} }.
AttentionMap parse_attention(const std::string& json_text);

// Bilinear interpolation of the grid to pixel resolution with grid cell
// centers placed at pixel-space cell centers, renormalized to sum 1.
DenseMap upsample(const AttentionMap& map);

// Total normalized attention over pixels whose centers fall inside `bbox`
// (half-open pixel-center containment), in [0, 1]. A box fully outside the
// image yields 0 and a warning.
double attention_mass(const AttentionMap& map, const BoundingBox& bbox,
                      std::vector<std::string>* warnings = nullptr);

}  // namespace xqa

#endif  // XQA_ATTENTION_H_
