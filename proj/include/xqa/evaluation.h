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

#ifndef XQA_EVALUATION_H_
#define XQA_EVALUATION_H_

#include <optional>
#include <string>
#include <vector>

namespace xqa {

// One human rating of one generated explanation: relevance runs from -5
// (irrelevant) through 0 (redundant) to +5 (relevant and non-redundant).
struct RatingRecord {
  std::string qa_id;
  std::string system_id;
  int position = 0;  // 1-based rank of the explanation in its list
  int relevance = 0;
};

// How explainable a question/answer pair is, from 1 (hard) to 5 (easy).
struct QaMeta {
  std::string qa_id;
  int explainability = 0;
};

enum class Metric { kExplanationScore, kPosition, kNumber };

const char* metric_name(Metric metric);

// Win/loss/tie percentages for one metric, from system A's viewpoint.
struct ComparisonResult {
  Metric metric = Metric::kExplanationScore;
  double win_pct = 0.0;
  double loss_pct = 0.0;
  double tie_pct = 0.0;
};

// CSV loaders. Ratings rows are "qa_id,system_id,position,relevance"; meta
// rows are "qa_id,explainability". A leading header row is skipped. Schema
// violations raise ParseError/ValidationError naming the row number.
std::vector<RatingRecord> parse_ratings_csv(const std::string& text);
std::vector<QaMeta> parse_meta_csv(const std::string& text);

// Explainability times the position-weighted relevance sum, with harmonic
// position weights (1/position). `ratings` must all belong to a single
// (qa_id, system_id) pair with consecutive positions from 1.
double weighted_explanation_score(const std::vector<RatingRecord>& ratings,
                                  const QaMeta& meta);

// Smallest position whose relevance is strictly positive; absent when none.
std::optional<int> first_relevant_position(
    const std::vector<RatingRecord>& ratings);

// How many of the top-5 positions are strictly relevant.
int num_relevant_top5(const std::vector<RatingRecord>& ratings);

// Per-metric win/loss/tie percentages of sys_a against sys_b over the
// question ids both systems rated. A win requires a strictly better value
// (higher score, lower first-relevant position with absent ranking worst,
// higher relevant count). Swapping the systems swaps wins and losses.
std::vector<ComparisonResult> compare_systems(
    const std::vector<RatingRecord>& ratings, const std::vector<QaMeta>& meta,
    const std::string& sys_a, const std::string& sys_b);

// Fixed-width text table with Type / Win / Loss / Tie columns.
std::string render_comparison_table(const std::vector<ComparisonResult>& rows);

// Same content as a JSON document string.
std::string comparison_to_json(const std::vector<ComparisonResult>& rows);

}  // namespace xqa

#endif  // XQA_EVALUATION_H_
