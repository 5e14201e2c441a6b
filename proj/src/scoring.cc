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

#include "xqa/scoring.h"

#include <algorithm>
#include <cmath>

#include "xqa/errors.h"
#include "xqa/text.h"

namespace xqa {

const char* source_kind_name(SourceKind kind) {
  switch (kind) {
    case SourceKind::kRegion:
      return "region";
    case SourceKind::kObject:
      return "object";
    case SourceKind::kRelation:
      return "relation";
  }
  return "unknown";
}

double ScoringConfig::resolved_area_floor() const {
  return area_floor > 0.0 ? area_floor : std::exp(2.0);
}

void ScoringConfig::validate() const {
  if (resolved_area_floor() < std::exp(1.0)) {
    throw ValidationError("scoring: area floor must be >= e");
  }
  if (max_attrs < 0) throw ValidationError("scoring: max_attrs must be >= 0");
  if (top_k < 0) throw ValidationError("scoring: top_k must be >= 0");
}

ScoreBreakdown composite_score(const Candidate& cand, const QaPair& qa,
                               const AttentionMap& map, const Scorer& scorer,
                               const ScoringConfig& cfg) {
  cfg.validate();
  const std::size_t tokens = token_count(cand.text);
  if (tokens == 0) {
    throw ArgumentError("scoring: candidate \"" + cand.source.id +
                        "\" has empty text");
  }
  if (cand.bbox.w <= 0 || cand.bbox.h <= 0) {
    throw ArgumentError("scoring: candidate \"" + cand.source.id +
                        "\" has a zero-area bounding box");
  }

  ScoreBreakdown s;
  s.attention_factor =
      cfg.baseline_mode ? 1.0 : attention_mass(map, cand.bbox);
  s.lm_factor = scorer.score(cand.text, qa.context_text());
  s.length_factor = std::sqrt(static_cast<double>(tokens));
  s.area_factor =
      1.0 / std::log(std::max(cand.bbox.area(), cfg.resolved_area_floor()));
  s.total = s.attention_factor * s.lm_factor * s.length_factor * s.area_factor;
  return s;
}

std::vector<ScoredCandidate> rank_candidates(
    const std::vector<Candidate>& cands, const QaPair& qa,
    const AttentionMap& map, const Scorer& scorer, const ScoringConfig& cfg) {
  std::vector<ScoredCandidate> scored;
  scored.reserve(cands.size());
  for (const Candidate& cand : cands) {
    scored.push_back({cand, composite_score(cand, qa, map, scorer, cfg)});
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredCandidate& a, const ScoredCandidate& b) {
                     if (a.score.total != b.score.total) {
                       return a.score.total > b.score.total;
                     }
                     if (a.score.attention_factor != b.score.attention_factor) {
                       return a.score.attention_factor > b.score.attention_factor;
                     }
                     if (a.candidate.text != b.candidate.text) {
                       return a.candidate.text < b.candidate.text;
                     }
                     return a.candidate.source.id < b.candidate.source.id;
                   });
  return scored;
}

}  // namespace xqa
