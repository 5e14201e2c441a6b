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

#ifndef XQA_GEOMETRY_H_
#define XQA_GEOMETRY_H_

#include <optional>

namespace xqa {

// Axis-aligned pixel rectangle: (x, y) is the top-left corner.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  double area() const { return static_cast<double>(w) * h; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Smallest box containing both inputs.
BoundingBox union_bbox(const BoundingBox& b1, const BoundingBox& b2);

// Intersects a box with [0, width] x [0, height]; nullopt when the clipped
// box has no area left.
std::optional<BoundingBox> clip_bbox(const BoundingBox& b, int width,
                                     int height);

// True when `inner` lies fully inside `outer`.
bool contains(const BoundingBox& outer, const BoundingBox& inner);

}  // namespace xqa

#endif  // XQA_GEOMETRY_H_
