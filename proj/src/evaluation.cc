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
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "xqa/errors.h"

namespace xqa {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

int parse_int_field(const std::string& value, const char* what, int row) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("ratings: row " + std::to_string(row) + ": field \"" +
                     what + "\" is not an integer: \"" + value + "\"");
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Ratings of one (qa_id, system_id) pair, ordered and checked: positions
// must be consecutive from 1 and at most 5.
std::vector<RatingRecord> ordered_group(std::vector<RatingRecord> group) {
  std::sort(group.begin(), group.end(),
            [](const RatingRecord& a, const RatingRecord& b) {
              return a.position < b.position;
            });
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group[i].position != static_cast<int>(i) + 1) {
      throw DataError("ratings: positions for qa \"" + group[i].qa_id +
                      "\" system \"" + group[i].system_id +
                      "\" are not consecutive from 1");
    }
  }
  if (group.size() > 5) {
    throw DataError("ratings: more than 5 positions for qa \"" +
                    group.front().qa_id + "\" system \"" +
                    group.front().system_id + "\"");
  }
  return group;
}

std::string format_pct(double pct) {
  char buf[32];
  const double rounded = std::round(pct);
  if (std::fabs(pct - rounded) < 0.005) {
    std::snprintf(buf, sizeof(buf), "%.0f%%", rounded);
  } else {
    std::snprintf(buf, sizeof(buf), "%.1f%%", pct);
  }
  return buf;
}

}  // namespace

const char* metric_name(Metric metric) {
  switch (metric) {
    case Metric::kExplanationScore:
      return "explanation_score";
    case Metric::kPosition:
      return "position";
    case Metric::kNumber:
      return "number";
  }
  return "unknown";
}

std::vector<RatingRecord> parse_ratings_csv(const std::string& text) {
  std::vector<RatingRecord> out;
  std::istringstream in(text);
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    if (row == 1 && line.rfind("qa_id", 0) == 0) continue;  // header
    std::vector<std::string> fields = split_csv_row(line);
    if (fields.size() != 4) {
      throw ParseError("ratings: row " + std::to_string(row) +
                       ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    }
    RatingRecord rec;
    rec.qa_id = trim(fields[0]);
    rec.system_id = trim(fields[1]);
    rec.position = parse_int_field(trim(fields[2]), "position", row);
    rec.relevance = parse_int_field(trim(fields[3]), "relevance", row);
    if (rec.qa_id.empty() || rec.system_id.empty()) {
      throw ValidationError("ratings: row " + std::to_string(row) +
                            ": empty qa_id or system_id");
    }
    if (rec.position < 1 || rec.position > 5) {
      throw ValidationError("ratings: row " + std::to_string(row) +
                            ": position must lie in [1, 5]");
    }
    if (rec.relevance < -5 || rec.relevance > 5) {
      throw ValidationError("ratings: row " + std::to_string(row) +
                            ": relevance must lie in [-5, 5]");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<QaMeta> parse_meta_csv(const std::string& text) {
  std::vector<QaMeta> out;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    if (row == 1 && line.rfind("qa_id", 0) == 0) continue;  // header
    std::vector<std::string> fields = split_csv_row(line);
    if (fields.size() != 2) {
      throw ParseError("qa meta: row " + std::to_string(row) +
                       ": expected 2 fields, got " +
                       std::to_string(fields.size()));
    }
    QaMeta meta;
    meta.qa_id = trim(fields[0]);
    meta.explainability = parse_int_field(trim(fields[1]), "explainability", row);
    if (meta.qa_id.empty()) {
      throw ValidationError("qa meta: row " + std::to_string(row) +
                            ": empty qa_id");
    }
    if (meta.explainability < 1 || meta.explainability > 5) {
      throw ValidationError("qa meta: row " + std::to_string(row) +
                            ": explainability must lie in [1, 5]");
    }
    if (!seen.insert(meta.qa_id).second) {
      throw ValidationError("qa meta: row " + std::to_string(row) +
                            ": duplicate qa_id \"" + meta.qa_id + "\"");
    }
    out.push_back(std::move(meta));
  }
  return out;
}

double weighted_explanation_score(const std::vector<RatingRecord>& ratings,
                                  const QaMeta& meta) {
  if (ratings.empty()) {
    throw DataError("ratings: empty rating group");
  }
  for (const RatingRecord& rec : ratings) {
    if (rec.qa_id != ratings.front().qa_id ||
        rec.system_id != ratings.front().system_id) {
      throw DataError("ratings: group mixes qa or system ids");
    }
    if (rec.qa_id != meta.qa_id) {
      throw DataError("ratings: meta qa_id \"" + meta.qa_id +
                      "\" does not match ratings qa_id \"" + rec.qa_id + "\"");
    }
  }
  const std::vector<RatingRecord> ordered = ordered_group(ratings);
  double weighted = 0.0;
  for (const RatingRecord& rec : ordered) {
    weighted += static_cast<double>(rec.relevance) / rec.position;
  }
  return meta.explainability * weighted;
}

std::optional<int> first_relevant_position(
    const std::vector<RatingRecord>& ratings) {
  std::optional<int> best;
  for (const RatingRecord& rec : ratings) {
    if (rec.relevance > 0 && (!best || rec.position < *best)) {
      best = rec.position;
    }
  }
  return best;
}

int num_relevant_top5(const std::vector<RatingRecord>& ratings) {
  int count = 0;
  for (const RatingRecord& rec : ratings) {
    if (rec.position <= 5 && rec.relevance > 0) ++count;
  }
  return count;
}

std::vector<ComparisonResult> compare_systems(
    const std::vector<RatingRecord>& ratings, const std::vector<QaMeta>& meta,
    const std::string& sys_a, const std::string& sys_b) {
  std::map<std::string, QaMeta> meta_by_qa;
  for (const QaMeta& m : meta) meta_by_qa[m.qa_id] = m;

  std::map<std::string, std::vector<RatingRecord>> a_groups;
  std::map<std::string, std::vector<RatingRecord>> b_groups;
  for (const RatingRecord& rec : ratings) {
    if (rec.system_id == sys_a) a_groups[rec.qa_id].push_back(rec);
    if (rec.system_id == sys_b) b_groups[rec.qa_id].push_back(rec);
  }

  std::vector<std::string> shared;
  for (const auto& [qa_id, group] : a_groups) {
    if (b_groups.count(qa_id)) shared.push_back(qa_id);
  }
  if (shared.empty()) {
    throw DataError("ratings: systems \"" + sys_a + "\" and \"" + sys_b +
                    "\" share no rated questions");
  }

  int score_w = 0, score_l = 0, score_t = 0;
  int pos_w = 0, pos_l = 0, pos_t = 0;
  int num_w = 0, num_l = 0, num_t = 0;
  for (const std::string& qa_id : shared) {
    auto meta_it = meta_by_qa.find(qa_id);
    if (meta_it == meta_by_qa.end()) {
      throw DataError("ratings: no explainability meta for qa \"" + qa_id +
                      "\"");
    }
    const std::vector<RatingRecord> a = ordered_group(a_groups[qa_id]);
    const std::vector<RatingRecord> b = ordered_group(b_groups[qa_id]);

    const double score_a = weighted_explanation_score(a, meta_it->second);
    const double score_b = weighted_explanation_score(b, meta_it->second);
    if (score_a > score_b) {
      ++score_w;
    } else if (score_a < score_b) {
      ++score_l;
    } else {
      ++score_t;
    }

    // Lower first-relevant position is better; absent is worst.
    const std::optional<int> pos_a = first_relevant_position(a);
    const std::optional<int> pos_b = first_relevant_position(b);
    if (pos_a.has_value() && (!pos_b.has_value() || *pos_a < *pos_b)) {
      ++pos_w;
    } else if (pos_b.has_value() && (!pos_a.has_value() || *pos_b < *pos_a)) {
      ++pos_l;
    } else {
      ++pos_t;
    }

    const int num_a = num_relevant_top5(a);
    const int num_b = num_relevant_top5(b);
    if (num_a > num_b) {
      ++num_w;
    } else if (num_a < num_b) {
      ++num_l;
    } else {
      ++num_t;
    }
  }

  const double n = static_cast<double>(shared.size());
  auto pct = [n](int count) { return 100.0 * count / n; };
  return {
      {Metric::kExplanationScore, pct(score_w), pct(score_l), pct(score_t)},
      {Metric::kPosition, pct(pos_w), pct(pos_l), pct(pos_t)},
      {Metric::kNumber, pct(num_w), pct(num_l), pct(num_t)},
  };
}

std::string render_comparison_table(
    const std::vector<ComparisonResult>& rows) {
  auto row_label = [](Metric m) -> std::string {
    switch (m) {
      case Metric::kExplanationScore:
        return "Explanation score";
      case Metric::kPosition:
        return "Position score";
      case Metric::kNumber:
        return "Number score";
    }
    return "?";
  };

  std::string out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-18s %-6s %-6s %-6s\n", "Type", "Win",
                "Loss", "Tie");
  out += line;
  for (const ComparisonResult& r : rows) {
    std::snprintf(line, sizeof(line), "%-18s %-6s %-6s %-6s\n",
                  row_label(r.metric).c_str(), format_pct(r.win_pct).c_str(),
                  format_pct(r.loss_pct).c_str(),
                  format_pct(r.tie_pct).c_str());
    out += line;
  }
  return out;
}

std::string comparison_to_json(const std::vector<ComparisonResult>& rows) {
  nlohmann::json doc;
  doc["metrics"] = nlohmann::json::array();
  for (const ComparisonResult& r : rows) {
    doc["metrics"].push_back({{"metric", metric_name(r.metric)},
                              {"win_pct", r.win_pct},
                              {"loss_pct", r.loss_pct},
                              {"tie_pct", r.tie_pct}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace xqa
