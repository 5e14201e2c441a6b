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

#include "xqa/pipeline.h"

#include <fstream>
#include <memory>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "xqa/attention.h"
#include "xqa/errors.h"
#include "xqa/evaluation.h"
#include "xqa/graph_explainer.h"
#include "xqa/lm.h"
#include "xqa/region_explainer.h"
#include "xqa/scoring.h"
#include "xqa/text.h"
#include "xqa/version.h"

namespace xqa {

namespace {

using nlohmann::json;

QaPair parse_qa(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("qa: malformed JSON at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("question") ||
      !doc.contains("answer")) {
    throw SchemaError("qa: expected fields \"question\" and \"answer\"");
  }
  QaPair qa{doc["question"].get<std::string>(),
            doc["answer"].get<std::string>()};
  if (tokenize(qa.question).empty() || tokenize(qa.answer).empty()) {
    throw ValidationError("qa: question and answer must be nonempty");
  }
  return qa;
}

json breakdown_to_json(const ScoreBreakdown& s) {
  return json{{"attention_factor", s.attention_factor},
              {"lm_factor", s.lm_factor},
              {"length_factor", s.length_factor},
              {"area_factor", s.area_factor},
              {"total", s.total}};
}

json config_to_json(const RunConfig& c) {
  ScoringConfig scoring;
  scoring.area_floor = c.area_floor;
  return json{{"mode", c.mode},
              {"baseline", c.baseline},
              {"scene_graph", c.scene_graph_path},
              {"attention", c.attention_path},
              {"qa", c.qa_path},
              {"lm_model", c.lm_model_path},
              {"lm_corpus", c.lm_corpus_path},
              {"top_k", c.top_k},
              {"k_num_terms", c.k_num_terms},
              {"area_floor", scoring.resolved_area_floor()},
              {"max_attrs", c.max_attrs},
              {"lm_order", c.lm_order},
              {"backoff_factor", c.backoff_factor},
              {"lm_min_count", c.lm_min_count}};
}

}  // namespace

void RunConfig::validate() const {
  if (mode != "region" && mode != "graph") {
    throw ValidationError("config: mode must be \"region\" or \"graph\"");
  }
  if (scene_graph_path.empty()) {
    throw ValidationError("config: a scene graph path is required");
  }
  if (qa_path.empty()) {
    throw ValidationError("config: a qa path is required");
  }
  if (attention_path.empty() && !baseline) {
    throw ValidationError(
        "config: an attention map is required unless --baseline is set");
  }
  if (!lm_model_path.empty() && !lm_corpus_path.empty()) {
    throw ValidationError(
        "config: give either a trained lm model or a corpus, not both");
  }
  ScoringConfig scoring{baseline, area_floor, max_attrs, top_k};
  scoring.validate();
  TraversalConfig traversal{k_num_terms, 0};
  traversal.validate();
  if (lm_order < 1) throw ValidationError("config: lm_order must be >= 1");
  if (!(backoff_factor > 0.0 && backoff_factor < 1.0)) {
    throw ValidationError("config: backoff_factor must lie in (0, 1)");
  }
  if (lm_min_count < 1) {
    throw ValidationError("config: lm_min_count must be >= 1");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

std::vector<std::string> self_corpus_lines(const SceneGraph& graph) {
  std::vector<std::string> lines;
  for (const RegionDescription& region : graph.regions()) {
    lines.push_back(region.phrase);
  }
  for (const Relation& rel : graph.relations()) {
    lines.push_back(relation_phrase(rel, graph));
  }
  return lines;
}

std::string cmd_explain(const RunConfig& config) {
  config.validate();

  std::vector<std::string> warnings;
  const SceneGraph graph =
      parse_scene_graph(read_file(config.scene_graph_path), &warnings);
  const QaPair qa = parse_qa(read_file(config.qa_path));

  // Baseline mode never consults the attention surface, so a missing or
  // degenerate map only warns there; in full mode it is fatal.
  std::unique_ptr<AttentionMap> attention;
  if (!config.attention_path.empty()) {
    try {
      attention = std::make_unique<AttentionMap>(
          parse_attention(read_file(config.attention_path)));
    } catch (const ValidationError& e) {
      if (!config.baseline) {
        throw ValidationError(std::string(e.what()) +
                              " (rerun with --baseline to ignore attention)");
      }
      warnings.push_back(std::string("ignoring unusable attention map in "
                                     "baseline mode: ") +
                         e.what());
    }
  }
  if (!attention) {
    attention = std::make_unique<AttentionMap>(
        1, 1, std::vector<double>{1.0}, graph.image_width(),
        graph.image_height());
  }

  std::unique_ptr<Scorer> scorer;
  if (!config.lm_model_path.empty()) {
    scorer = std::make_unique<NgramScorer>(
        NgramModel::deserialize(read_file(config.lm_model_path)));
  } else {
    std::vector<std::string> corpus;
    if (!config.lm_corpus_path.empty()) {
      std::istringstream in(read_file(config.lm_corpus_path));
      std::string line;
      while (std::getline(in, line)) corpus.push_back(line);
    } else {
      corpus = self_corpus_lines(graph);
      if (corpus.empty()) {
        throw TrainingError(
            "lm: the scene graph has no region or relation phrases to train "
            "on; supply --lm-corpus or --lm-model");
      }
    }
    scorer = std::make_unique<NgramScorer>(train_ngram(
        corpus, config.lm_order, config.backoff_factor, config.lm_min_count));
  }

  ScoringConfig scoring{config.baseline, config.area_floor, config.max_attrs,
                        config.top_k};
  std::vector<Explanation> explanations;
  if (config.mode == "region") {
    explanations = generate_region_explanations(graph, qa, *attention, *scorer,
                                                scoring, &warnings);
  } else {
    TraversalConfig traversal{config.k_num_terms, 0};
    explanations.push_back(generate_graph_explanation(
        graph, qa, *attention, *scorer, scoring, traversal, &warnings));
  }

  json doc;
  doc["version"] = kVersion;
  doc["config"] = config_to_json(config);
  doc["qa"] = json{{"question", qa.question}, {"answer", qa.answer}};
  doc["mode"] = config.mode;
  doc["baseline"] = config.baseline;
  doc["warnings"] = warnings;
  doc["explanations"] = json::array();
  for (const Explanation& e : explanations) {
    json record{{"rank", e.rank},
                {"surface", e.surface},
                {"score", breakdown_to_json(e.score)},
                {"source", json{{"kind", source_kind_name(e.source.kind)},
                                {"id", e.source.id}}}};
    if (config.mode == "graph") {
      record["phrases"] = e.phrases;
      record["warning"] = e.warning;
    }
    doc["explanations"].push_back(std::move(record));
  }

  const std::string out = doc.dump(2) + "\n";
  if (!config.output_path.empty()) write_file(config.output_path, out);
  return out;
}

void cmd_train_lm(const std::string& corpus_path, int order,
                  double backoff_factor, int min_count,
                  const std::string& model_out) {
  std::vector<std::string> corpus;
  std::istringstream in(read_file(corpus_path));
  std::string line;
  while (std::getline(in, line)) corpus.push_back(line);
  const NgramModel model = train_ngram(corpus, order, backoff_factor,
                                       min_count);
  write_file(model_out, model.serialize());
}

std::string cmd_evaluate(const std::string& ratings_path,
                         const std::string& meta_path, const std::string& sys_a,
                         const std::string& sys_b, const std::string& json_out) {
  const std::vector<RatingRecord> ratings =
      parse_ratings_csv(read_file(ratings_path));
  const std::vector<QaMeta> meta = parse_meta_csv(read_file(meta_path));
  const std::vector<ComparisonResult> rows =
      compare_systems(ratings, meta, sys_a, sys_b);
  if (!json_out.empty()) write_file(json_out, comparison_to_json(rows));
  return render_comparison_table(rows);
}

}  // namespace xqa
