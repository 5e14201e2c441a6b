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

#include "xqa/geometry.h"

#include <algorithm>

namespace xqa {

BoundingBox union_bbox(const BoundingBox& b1, const BoundingBox& b2) {
  const int x = std::min(b1.x, b2.x);
  const int y = std::min(b1.y, b2.y);
  const int right = std::max(b1.x + b1.w, b2.x + b2.w);
  const int bottom = std::max(b1.y + b1.h, b2.y + b2.h);
  return BoundingBox{x, y, right - x, bottom - y};
}

std::optional<BoundingBox> clip_bbox(const BoundingBox& b, int width,
                                     int height) {
  const int x0 = std::clamp(b.x, 0, width);
  const int y0 = std::clamp(b.y, 0, height);
  const int x1 = std::clamp(b.x + b.w, 0, width);
  const int y1 = std::clamp(b.y + b.h, 0, height);
  if (x1 <= x0 || y1 <= y0) return std::nullopt;
  return BoundingBox{x0, y0, x1 - x0, y1 - y0};
}

bool contains(const BoundingBox& outer, const BoundingBox& inner) {
  return inner.x >= outer.x && inner.y >= outer.y &&
         inner.x + inner.w <= outer.x + outer.w &&
         inner.y + inner.h <= outer.y + outer.h;
}

}  // namespace xqa
