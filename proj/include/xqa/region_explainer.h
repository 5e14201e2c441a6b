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

#ifndef XQA_REGION_EXPLAINER_H_
#define XQA_REGION_EXPLAINER_H_

#include <string>
#include <vector>

#include "xqa/attention.h"
#include "xqa/scene_graph.h"
#include "xqa/scoring.h"

namespace xqa {

// A ranked, slot-filled explanation ready for display.
struct Explanation {
  int rank = 0;
  std::string surface;
  ScoreBreakdown score;
  SourceRef source;
  // Graph mode only: the ordered phrases composing the surface string.
  std::vector<std::string> phrases;
  bool warning = false;
};

// Prepends the fixed template prefix: "The picture shows: <phrase>".
// Throws ArgumentError on an empty phrase.
std::string slot_fill_region(const std::string& phrase);

// Scores every region description against the question/answer, ranks them,
// and surfaces the top_k as slot-filled explanations. Duplicate phrases keep
// only their highest-ranked instance. A graph without regions produces an
// empty list plus an advisory in `warnings`.
std::vector<Explanation> generate_region_explanations(
    const SceneGraph& graph, const QaPair& qa, const AttentionMap& map,
    const Scorer& scorer, const ScoringConfig& cfg,
    std::vector<std::string>* warnings = nullptr);

}  // namespace xqa

#endif  // XQA_REGION_EXPLAINER_H_
