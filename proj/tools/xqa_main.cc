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
//
// xqa: generates ranked natural-language explanations for visual
// question-answering answers from a scene graph and an attention map, and
// evaluates rated explanation lists.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xqa/errors.h"
#include "xqa/pipeline.h"
#include "xqa/version.h"

namespace {

// Values from --config override command-line flags.
void apply_config_file(const std::string& path, xqa::RunConfig& config) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(xqa::read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw xqa::ParseError("config: malformed JSON at byte " +
                          std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw xqa::SchemaError("config: top-level value must be an object");
  }
  auto set_string = [&](const char* key, std::string& field) {
    if (doc.contains(key)) field = doc[key].get<std::string>();
  };
  auto set_int = [&](const char* key, int& field) {
    if (doc.contains(key)) field = doc[key].get<int>();
  };
  set_string("mode", config.mode);
  if (doc.contains("baseline")) config.baseline = doc["baseline"].get<bool>();
  set_string("scene_graph", config.scene_graph_path);
  set_string("attention", config.attention_path);
  set_string("qa", config.qa_path);
  set_string("lm_model", config.lm_model_path);
  set_string("lm_corpus", config.lm_corpus_path);
  set_string("output", config.output_path);
  set_int("top_k", config.top_k);
  set_int("k_num_terms", config.k_num_terms);
  set_int("max_attrs", config.max_attrs);
  set_int("lm_order", config.lm_order);
  set_int("lm_min_count", config.lm_min_count);
  if (doc.contains("area_floor")) {
    config.area_floor = doc["area_floor"].get<double>();
  }
  if (doc.contains("backoff_factor")) {
    config.backoff_factor = doc["backoff_factor"].get<double>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"natural-language explanations for visual question answering"};
  app.set_version_flag("--version", std::string(xqa::kVersion));
  app.require_subcommand(1);

  // explain
  xqa::RunConfig run;
  std::string config_path;
  CLI::App* explain = app.add_subcommand(
      "explain", "generate ranked explanations for one question/answer");
  explain->add_option("--mode", run.mode,
                      "explanation mode: region or graph")
      ->check(CLI::IsMember({"region", "graph"}));
  explain->add_flag("--baseline", run.baseline,
                    "NL-only ablation: ignore the attention map");
  explain->add_option("--scene-graph", run.scene_graph_path,
                      "scene graph JSON file");
  explain->add_option("--attention", run.attention_path,
                      "attention map JSON file");
  explain->add_option("--qa", run.qa_path, "question/answer JSON file");
  explain->add_option("--lm-model", run.lm_model_path,
                      "pre-trained n-gram model file");
  explain->add_option("--lm-corpus", run.lm_corpus_path,
                      "corpus file to train the scorer on");
  explain->add_option("--top-k", run.top_k,
                      "how many region explanations to emit");
  explain->add_option("--num-terms", run.k_num_terms,
                      "maximum phrases in a graph explanation");
  explain->add_option("--area-floor", run.area_floor,
                      "lower clamp for bounding-box areas (default e^2)");
  explain->add_option("--max-attrs", run.max_attrs,
                      "attributes prepended to object names");
  explain->add_option("--lm-order", run.lm_order, "n-gram order");
  explain->add_option("--backoff-factor", run.backoff_factor,
                      "n-gram backoff factor");
  explain->add_option("--output", run.output_path, "output JSON file");
  explain->add_option("--config", config_path,
                      "JSON config file; its values override flags");

  // train-lm
  std::string corpus_path, model_out;
  int order = 3;
  double backoff = 0.4;
  int min_count = 1;
  CLI::App* train =
      app.add_subcommand("train-lm", "train and save an n-gram model");
  train->add_option("--corpus", corpus_path, "one sentence per line")
      ->required();
  train->add_option("--order", order, "n-gram order");
  train->add_option("--backoff-factor", backoff, "backoff factor");
  train->add_option("--min-count", min_count,
                    "tokens rarer than this become the unknown token");
  train->add_option("--output", model_out, "model file to write")->required();

  // evaluate
  std::string ratings_path, meta_path, sys_a, sys_b, eval_json;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "win on/loss/tie comparison of two rated systems");
  evaluate->add_option("--ratings", ratings_path, "ratings CSV file")
      ->required();
  evaluate->add_option("--meta", meta_path, "qa explainability CSV file")
      ->required();
  evaluate->add_option("--system-a", sys_a, "first system id")->required();
  evaluate->add_option("--system-b", sys_b, "second system id")->required();
  evaluate->add_option("--json", eval_json, "also write JSON results here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*explain) {
      if (!config_path.empty()) apply_config_file(config_path, run);
      std::cout << xqa::cmd_explain(run);
    } else if (*train) {
      xqa::cmd_train_lm(corpus_path, order, backoff, min_count, model_out);
      std::cout << "wrote " << model_out << "\n";
    } else if (*evaluate) {
      std::cout << xqa::cmd_evaluate(ratings_path, meta_path, sys_a, sys_b,
                                     eval_json);
    }
  } catch (const xqa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
