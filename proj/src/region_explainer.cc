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

#include "xqa/region_explainer.h"

#include <unordered_set>

#include "xqa/errors.h"

namespace xqa {

std::string slot_fill_region(const std::string& phrase) {
  if (phrase.empty()) {
    throw ArgumentError("region explainer: cannot slot-fill an empty phrase");
  }
  return "The picture shows: " + phrase;
}

std::vector<Explanation> generate_region_explanations(
    const SceneGraph& graph, const QaPair& qa, const AttentionMap& map,
    const Scorer& scorer, const ScoringConfig& cfg,
    std::vector<std::string>* warnings) {
  std::vector<Explanation> out;
  if (graph.regions().empty()) {
    if (warnings != nullptr) {
      warnings->push_back(
          "no region descriptions in scene graph; graph mode can explain "
          "from objects and relations instead");
    }
    return out;
  }

  std::vector<Candidate> candidates;
  candidates.reserve(graph.regions().size());
  for (const RegionDescription& region : graph.regions()) {
    candidates.push_back(Candidate{
        region.phrase, region.bbox, {SourceKind::kRegion, region.id}});
  }

  const std::vector<ScoredCandidate> ranked =
      rank_candidates(candidates, qa, map, scorer, cfg);

  // Identical phrases keep only their best instance.
  std::unordered_set<std::string> seen;
  for (const ScoredCandidate& sc : ranked) {
    if (static_cast<int>(out.size()) >= cfg.top_k) break;
    if (!seen.insert(sc.candidate.text).second) continue;
    Explanation e;
    e.rank = static_cast<int>(out.size()) + 1;
    e.surface = slot_fill_region(sc.candidate.text);
    e.score = sc.score;
    e.source = sc.candidate.source;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace xqa
