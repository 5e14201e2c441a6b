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

#ifndef XQA_SCORING_H_
#define XQA_SCORING_H_

#include <string>
#include <vector>

#include "xqa/attention.h"
#include "xqa/geometry.h"
#include "xqa/lm.h"

namespace xqa {

// The question/answer pair conditioning every score.
struct QaPair {
  std::string question;
  std::string answer;

  // The context string handed to the language model scorer.
  std::string context_text() const { return question + " " + answer; }
};

enum class SourceKind { kRegion, kObject, kRelation };

const char* source_kind_name(SourceKind kind);

struct SourceRef {
  SourceKind kind = SourceKind::kRegion;
  std::string id;
};

// A scoreable entity: its natural-language text and its bounding box.
struct Candidate {
  std::string text;
  BoundingBox bbox;
  SourceRef source;
};

// The four factors of the composite relevance score and their product:
//   attention x language-model x sqrt(length) x 1/log(area).
struct ScoreBreakdown {
  double attention_factor = 0.0;
  double lm_factor = 0.0;
  double length_factor = 0.0;
  double area_factor = 0.0;
  double total = 0.0;
};

struct ScoringConfig {
  // Baseline (NL-only) mode drops the visual signal by pinning the
  // attention factor to 1 instead of deleting the term, so breakdowns stay
  // comparable across modes.
  bool baseline_mode = false;
  // Areas are clamped below at e^2 pixels^2: 1/ln(area) is singular or
  // negative for tiny boxes, and the clamp bounds the factor to (0, 0.5].
  double area_floor = 0.0;  // 0 selects the default e^2
  int max_attrs = 1;
  int top_k = 5;

  double resolved_area_floor() const;
  void validate() const;  // throws ValidationError
};

struct ScoredCandidate {
  Candidate candidate;
  ScoreBreakdown score;
};

// Composite relevance of one candidate for one question/answer pair.
// Throws ArgumentError on empty candidate text or zero-area boxes.
ScoreBreakdown composite_score(const Candidate& cand, const QaPair& qa,
                               const AttentionMap& map, const Scorer& scorer,
                               const ScoringConfig& cfg);

// Scores every candidate and sorts by total descending. Ties break by
// attention factor descending, then candidate text ascending, then entity id
// ascending, so equal inputs always produce the identical order.
std::vector<ScoredCandidate> rank_candidates(
    const std::vector<Candidate>& cands, const QaPair& qa,
    const AttentionMap& map, const Scorer& scorer, const ScoringConfig& cfg);

}  // namespace xqa

#endif  // XQA_SCORING_H_
