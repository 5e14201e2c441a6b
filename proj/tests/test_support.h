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

#ifndef XQA_TESTS_TEST_SUPPORT_H_
#define XQA_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xqa/lm.h"
#include "xqa/scene_graph.h"

namespace xqa::testing {

// Scorer with hand-assigned values per candidate text; unknown texts get a
// small default so fixtures stay total functions.
class FakeScorer : public Scorer {
 public:
  explicit FakeScorer(std::map<std::string, double> scores,
                      double fallback = 0.01)
      : scores_(std::move(scores)), fallback_(fallback) {}

  double score(const std::string& candidate,
               const std::string& /*context*/) const override {
    auto it = scores_.find(candidate);
    return it == scores_.end() ? fallback_ : it->second;
  }

 private:
  std::map<std::string, double> scores_;
  double fallback_;
};

// Scorer that returns the same value for every candidate.
class ConstantScorer : public Scorer {
 public:
  explicit ConstantScorer(double value) : value_(value) {}
  double score(const std::string&, const std::string&) const override {
    return value_;
  }

 private:
  double value_;
};

// Deterministic pseudo-random scorer for property tests: pure integer
// hashing, so every platform and run sees identical scores.
class HashScorer : public Scorer {
 public:
  double score(const std::string& candidate,
               const std::string& /*context*/) const override {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : candidate) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return static_cast<double>(h % 9973 + 1) / 9974.0;
  }
};

// Street-crossing scene reconstructed so the walk produces:
//   crosswalk on road and in front of man, car parked on road,
//   tree next to road, sign next to road, bike next to car,
//   building with window, walk sign
// Returns the graph and the per-phrase scores to drive the ordering.
inline std::pair<SceneGraph, std::map<std::string, double>> crosswalk_scene() {
  std::vector<ObjectNode> objects = {
      {"o_crosswalk", "crosswalk", {}, {40, 140, 140, 60}},
      {"o_road", "road", {}, {0, 120, 224, 104}},
      {"o_man", "man", {}, {150, 90, 30, 70}},
      {"o_car", "car", {}, {10, 100, 60, 40}},
      {"o_tree", "tree", {}, {190, 40, 30, 90}},
      {"o_sign", "sign", {}, {175, 60, 20, 30}},
      {"o_bike", "bike", {}, {70, 110, 35, 25}},
      {"o_building", "building", {}, {0, 0, 120, 90}},
      {"o_window", "window", {}, {20, 20, 25, 25}},
      {"o_walksign", "sign", {"walk"}, {200, 95, 15, 25}},
  };
  std::vector<Relation> relations = {
      {"r1", "o_crosswalk", "on", "o_road", std::nullopt},
      {"r2", "o_crosswalk", "in front of", "o_man", std::nullopt},
      {"r3", "o_car", "parked on", "o_road", std::nullopt},
      {"r4", "o_tree", "next to", "o_road", std::nullopt},
      {"r5", "o_sign", "next to", "o_road", std::nullopt},
      {"r6", "o_bike", "next to", "o_car", std::nullopt},
      {"r7", "o_building", "with", "o_window", std::nullopt},
  };
  std::map<std::string, double> scores = {
      // Relation phrases, in the target emission order.
      {"crosswalk on road", 0.95},
      {"crosswalk in front of man", 0.90},
      {"car parked on road", 0.85},
      {"tree next to road", 0.80},
      {"sign next to road", 0.75},
      {"bike next to car", 0.70},
      {"building with window", 0.65},
      // Lone-object phrases; only "walk sign" survives to phase 2.
      {"walk sign", 0.60},
      {"crosswalk", 0.50},
      {"road", 0.45},
      {"man", 0.40},
      {"car", 0.35},
      {"tree", 0.30},
      {"sign", 0.25},
      {"bike", 0.20},
      {"building", 0.15},
      {"window", 0.10},
  };
  return {SceneGraph(224, 224, std::move(objects), std::move(relations), {}),
          std::move(scores)};
}

inline const char* crosswalk_expected_surface() {
  return "The picture shows crosswalk on road and in front of man, car "
         "parked on road, tree next to road, sign next to road, bike next to "
         "car, building with window, walk sign.";
}

// Office scene whose walk yields exactly ten phrases at the default cap.
inline std::pair<SceneGraph, std::map<std::string, double>> office_scene() {
  std::vector<ObjectNode> objects = {
      {"o_keyboard", "keyboard", {}, {30, 120, 60, 20}},
      {"o_keys", "keys", {}, {34, 124, 50, 12}},
      {"o_cab1", "filing cabinet", {}, {150, 100, 60, 90}},
      {"o_drawer", "drawer", {}, {155, 120, 50, 25}},
      {"o_bag", "bag", {}, {100, 80, 30, 30}},
      {"o_desk", "desk", {}, {20, 110, 180, 80}},
      {"o_picture", "picture", {}, {60, 10, 30, 25}},
      {"o_wall", "wall", {}, {0, 0, 224, 100}},
      {"o_outlet", "outlet", {}, {120, 70, 10, 10}},
      {"o_pen", "pen", {}, {70, 130, 15, 5}},
      {"o_mouse", "mouse", {}, {95, 125, 12, 8}},
      {"o_cab2", "filing cabinet", {}, {0, 100, 40, 90}},
      {"o_handle", "handle", {}, {10, 130, 15, 6}},
      {"o_cable", "cable", {}, {40, 200, 80, 10}},
      {"o_cables", "cables", {}, {130, 200, 70, 12}},
      {"o_floor", "floor", {}, {0, 190, 224, 34}},
  };
  std::vector<Relation> relations = {
      {"r1", "o_keyboard", "with", "o_keys", std::nullopt},
      {"r2", "o_cab1", "with", "o_drawer", std::nullopt},
      {"r3", "o_bag", "on", "o_desk", std::nullopt},
      {"r4", "o_picture", "on", "o_wall", std::nullopt},
      {"r5", "o_outlet", "on", "o_wall", std::nullopt},
      {"r6", "o_pen", "on", "o_desk", std::nullopt},
      {"r7", "o_mouse", "next to", "o_keyboard", std::nullopt},
      {"r8", "o_cab2", "with", "o_handle", std::nullopt},
      {"r9", "o_cable", "on", "o_floor", std::nullopt},
      {"r10", "o_cables", "on", "o_floor", std::nullopt},
  };
  std::map<std::string, double> scores = {
      {"keyboard with keys", 0.95},
      {"filing cabinet with drawer", 0.90},
      {"bag on desk", 0.85},
      {"picture on wall", 0.80},
      {"outlet on wall", 0.75},
      {"pen on desk", 0.70},
      {"mouse next to keyboard", 0.65},
      {"filing cabinet with handle", 0.60},
      {"cable on floor", 0.55},
      {"cables on floor", 0.50},
  };
  return {SceneGraph(224, 224, std::move(objects), std::move(relations), {}),
          std::move(scores)};
}

inline const char* office_expected_surface() {
  return "The picture shows keyboard with keys, filing cabinet with drawer, "
         "bag on desk, picture on wall, outlet on wall, pen on desk, mouse "
         "next to keyboard, filing cabinet with handle, cable on floor, "
         "cables on floor.";
}

}  // namespace xqa::testing

#endif  // XQA_TESTS_TEST_SUPPORT_H_
