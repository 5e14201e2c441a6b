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

#include "xqa/evaluation.h"

#include <algorithm>
#include <random>

#include <doctest.h>

#include "xqa/errors.h"

using namespace xqa;

namespace {

std::vector<RatingRecord> make_group(const std::string& qa,
                                     const std::string& sys,
                                     std::vector<int> relevances) {
  std::vector<RatingRecord> out;
  for (std::size_t i = 0; i < relevances.size(); ++i) {
    out.push_back({qa, sys, static_cast<int>(i) + 1, relevances[i]});
  }
  return out;
}

}  // namespace

TEST_CASE("weighted_explanation_score") {
  // Single relevant explanation in first position.
  CHECK(weighted_explanation_score(make_group("q", "s", {5, 0, 0, 0, 0}),
                                   {"q", 5}) == doctest::Approx(25.0));
  // All-zero relevances annihilate the score.
  CHECK(weighted_explanation_score(make_group("q", "s", {0, 0, 0}),
                                   {"q", 4}) == doctest::Approx(0.0));
  // 3 * (4/1 - 2/2 + 1/3) = 10.
  CHECK(weighted_explanation_score(make_group("q", "s", {4, -2, 1}),
                                   {"q", 3}) ==
        doctest::Approx(10.0).epsilon(1e-12));

  // Monotone in each relevance and linear in explainability.
  const double base =
      weighted_explanation_score(make_group("q", "s", {2, 1, -1}), {"q", 2});
  CHECK(weighted_explanation_score(make_group("q", "s", {3, 1, -1}),
                                   {"q", 2}) > base);
  CHECK(weighted_explanation_score(make_group("q", "s", {2, 1, -1}),
                                   {"q", 4}) == doctest::Approx(2 * base));

  CHECK_THROWS_AS(weighted_explanation_score(make_group("q", "s", {1}),
                                             {"other", 3}),
                  DataError);
}

TEST_CASE("first_relevant_position") {
  CHECK(first_relevant_position(make_group("q", "s", {-1, 2, 5})) == 2);
  CHECK_FALSE(first_relevant_position(make_group("q", "s", {-1, -1})));
  CHECK(first_relevant_position(make_group("q", "s", {1, 0})) == 1);
  CHECK_FALSE(first_relevant_position(make_group("q", "s", {0, 0, 0})));
}

TEST_CASE("num_relevant_top5") {
  CHECK(num_relevant_top5(make_group("q", "s", {1, 1, 1, 1, 1})) == 5);
  CHECK(num_relevant_top5(make_group("q", "s", {0, 0, 0, 0, 0})) == 0);
  CHECK(num_relevant_top5(make_group("q", "s", {3, -2, 1})) == 2);
}

TEST_CASE("metrics ignore record order") {
  std::vector<RatingRecord> shuffled = make_group("q", "s", {4, -2, 1});
  std::reverse(shuffled.begin(), shuffled.end());
  CHECK(weighted_explanation_score(shuffled, {"q", 3}) ==
        doctest::Approx(10.0).epsilon(1e-12));
  CHECK(first_relevant_position(shuffled) == 1);
  CHECK(num_relevant_top5(shuffled) == 2);
}

TEST_CASE("csv parsing") {
  const std::string csv =
      "qa_id,system_id,position,relevance\n"
      "q1,mm,1,5\n"
      "q1,mm,2,-3\n";
  const auto records = parse_ratings_csv(csv);
  REQUIRE(records.size() == 2);
  CHECK(records[0].qa_id == "q1");
  CHECK(records[1].relevance == -3);

  // Schema violations name the row.
  try {
    parse_ratings_csv("q1,mm,1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ratings_csv("q1,mm,1,9\n"), ValidationError);
  CHECK_THROWS_AS(parse_ratings_csv("q1,mm,0,1\n"), ValidationError);
  CHECK_THROWS_AS(parse_ratings_csv("q1,mm,x,1\n"), ParseError);

  const auto meta = parse_meta_csv("qa_id,explainability\nq1,5\nq2,1\n");
  REQUIRE(meta.size() == 2);
  CHECK(meta[0].explainability == 5);
  CHECK_THROWS_AS(parse_meta_csv("q1,9\n"), ValidationError);
  CHECK_THROWS_AS(parse_meta_csv("q1,3\nq1,2\n"), ValidationError);
}

TEST_CASE("identical systems tie on every metric") {
  std::vector<RatingRecord> ratings;
  for (const std::string qa : {"q1", "q2"}) {
    for (const std::string sys : {"mm", "nl"}) {
      auto group = make_group(qa, sys, {3, 0, -1});
      ratings.insert(ratings.end(), group.begin(), group.end());
    }
  }
  const std::vector<QaMeta> meta = {{"q1", 4}, {"q2", 2}};
  const auto rows = compare_systems(ratings, meta, "mm", "nl");
  REQUIRE(rows.size() == 3);
  for (const ComparisonResult& r : rows) {
    CHECK(r.win_pct == doctest::Approx(0.0));
    CHECK(r.loss_pct == doctest::Approx(0.0));
    CHECK(r.tie_pct == doctest::Approx(100.0));
  }
}

TEST_CASE("three-question fixture matches the hand tally") {
  // q1: mm wins on score (25.75 vs 17.5); ties on first position (1 vs 1)
  //     and count (2 vs 2).
  // q2: mm has no relevant explanation; nl wins all three metrics.
  // q3: mm wins score (2 vs -6.67) and position (1 vs 3); count ties (1 = 1).
  std::vector<RatingRecord> ratings;
  auto add = [&](std::vector<RatingRecord> group) {
    ratings.insert(ratings.end(), group.begin(), group.end());
  };
  add(make_group("q1", "mm", {5, 0, 0, -1, 2}));
  add(make_group("q1", "nl", {3, 1, 0, 0, 0}));
  add(make_group("q2", "mm", {-2, -1, 0}));
  add(make_group("q2", "nl", {0, 4}));
  add(make_group("q3", "mm", {1}));
  add(make_group("q3", "nl", {-3, -4, 5}));
  const std::vector<QaMeta> meta = {{"q1", 5}, {"q2", 3}, {"q3", 2}};

  const auto rows = compare_systems(ratings, meta, "mm", "nl");
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].metric == Metric::kExplanationScore);
  CHECK(rows[0].win_pct == doctest::Approx(200.0 / 3).epsilon(1e-9));
  CHECK(rows[0].loss_pct == doctest::Approx(100.0 / 3).epsilon(1e-9));
  CHECK(rows[0].tie_pct == doctest::Approx(0.0));

  CHECK(rows[1].metric == Metric::kPosition);
  CHECK(rows[1].win_pct == doctest::Approx(100.0 / 3).epsilon(1e-9));
  CHECK(rows[1].loss_pct == doctest::Approx(100.0 / 3).epsilon(1e-9));
  CHECK(rows[1].tie_pct == doctest::Approx(100.0 / 3).epsilon(1e-9));

  CHECK(rows[2].metric == Metric::kNumber);
  CHECK(rows[2].win_pct == doctest::Approx(0.0));
  CHECK(rows[2].loss_pct == doctest::Approx(100.0 / 3).epsilon(1e-9));
  CHECK(rows[2].tie_pct == doctest::Approx(200.0 / 3).epsilon(1e-9));

  // Swapping the systems swaps wins and losses exactly.
  const auto swapped = compare_systems(ratings, meta, "nl", "mm");
  for (int i = 0; i < 3; ++i) {
    CHECK(rows[i].win_pct == swapped[i].loss_pct);
    CHECK(rows[i].loss_pct == swapped[i].win_pct);
    CHECK(rows[i].tie_pct == swapped[i].tie_pct);
  }

  // Percentages always account for every shared question.
  for (const ComparisonResult& r : rows) {
    CHECK(r.win_pct + r.loss_pct + r.tie_pct ==
          doctest::Approx(100.0).epsilon(1e-9));
  }
}

TEST_CASE("compare_systems data errors") {
  const auto a = make_group("q1", "mm", {1});
  const auto b = make_group("q2", "nl", {1});
  std::vector<RatingRecord> ratings;
  ratings.insert(ratings.end(), a.begin(), a.end());
  ratings.insert(ratings.end(), b.begin(), b.end());
  CHECK_THROWS_AS(compare_systems(ratings, {{"q1", 3}, {"q2", 3}}, "mm", "nl"),
                  DataError);

  // Shared questions but missing meta.
  std::vector<RatingRecord> shared;
  auto g1 = make_group("q1", "mm", {1});
  auto g2 = make_group("q1", "nl", {1});
  shared.insert(shared.end(), g1.begin(), g1.end());
  shared.insert(shared.end(), g2.begin(), g2.end());
  CHECK_THROWS_AS(compare_systems(shared, {}, "mm", "nl"), DataError);
}

TEST_CASE("comparison table renders the reference layout") {
  const std::vector<ComparisonResult> rows = {
      {Metric::kExplanationScore, 52.0, 28.0, 20.0},
      {Metric::kPosition, 55.0, 30.0, 15.0},
      {Metric::kNumber, 54.0, 24.0, 22.0},
  };
  const std::string table = render_comparison_table(rows);
  CHECK(table.find("Type") != std::string::npos);
  CHECK(table.find("Win") != std::string::npos);
  CHECK(table.find("Loss") != std::string::npos);
  CHECK(table.find("Tie") != std::string::npos);
  CHECK(table.find("Explanation score  52%    28%    20%") !=
        std::string::npos);
  CHECK(table.find("Position score     55%    30%    15%") !=
        std::string::npos);
  CHECK(table.find("Number score       54%    24%    22%") !=
        std::string::npos);

  const std::string json = comparison_to_json(rows);
  CHECK(json.find("\"explanation_score\"") != std::string::npos);
  CHECK(json.find("52.0") != std::string::npos);
}

TEST_CASE("antisymmetry on randomized rating sets") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RatingRecord> ratings;
    std::vector<QaMeta> meta;
    const int n_q = 2 + static_cast<int>(rng() % 6);
    for (int q = 0; q < n_q; ++q) {
      const std::string qa = "q" + std::to_string(q);
      meta.push_back({qa, 1 + static_cast<int>(rng() % 5)});
      for (const std::string sys : {"A", "B"}) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<int> rel;
        for (int i = 0; i < n; ++i) {
          rel.push_back(static_cast<int>(rng() % 11) - 5);
        }
        auto group = make_group(qa, sys, rel);
        ratings.insert(ratings.end(), group.begin(), group.end());
      }
    }
    const auto ab = compare_systems(ratings, meta, "A", "B");
    const auto ba = compare_systems(ratings, meta, "B", "A");
    for (int i = 0; i < 3; ++i) {
      CHECK(ab[i].win_pct == doctest::Approx(ba[i].loss_pct).epsilon(1e-12));
      CHECK(ab[i].loss_pct == doctest::Approx(ba[i].win_pct).epsilon(1e-12));
      CHECK(ab[i].win_pct + ab[i].loss_pct + ab[i].tie_pct ==
            doctest::Approx(100.0).epsilon(1e-9));
    }
  }
}
