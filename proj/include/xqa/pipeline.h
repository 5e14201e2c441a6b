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

#ifndef XQA_PIPELINE_H_
#define XQA_PIPELINE_H_

#include <string>
#include <vector>

#include "xqa/scene_graph.h"

namespace xqa {

// One reproducible explanation run: which generator, which ablation, and
// where the inputs live. Identical configs on identical inputs produce
// byte-identical output documents.
struct RunConfig {
  std::string mode = "region";  // "region" or "graph"
  bool baseline = false;

  std::string scene_graph_path;
  std::string attention_path;  // optional in baseline mode
  std::string qa_path;
  std::string lm_model_path;   // pre-trained model, or
  std::string lm_corpus_path;  // corpus to train on; neither -> self-corpus

  int top_k = 5;
  int k_num_terms = 10;
  double area_floor = 0.0;  // 0 selects the default e^2
  int max_attrs = 1;
  int lm_order = 3;
  double backoff_factor = 0.4;
  int lm_min_count = 1;

  std::string output_path;  // empty -> stdout only

  void validate() const;  // throws ValidationError
};

// Reads a whole file; throws ParseError when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Training lines used when no model or corpus is supplied: every region
// description phrase and relation phrase of the input graph.
std::vector<std::string> self_corpus_lines(const SceneGraph& graph);

// Runs the explanation pipeline and returns the output JSON document (also
// written to config.output_path when set):
//   { "version", "config", "qa", "mode", "baseline", "warnings",
//     "explanations": [{ "rank", "surface", "score", "source", ... }] }
std::string cmd_explain(const RunConfig& config);

// Trains an n-gram model on a one-sentence-per-line corpus file and writes
// it to model_out. Deterministic: retraining writes identical bytes.
void cmd_train_lm(const std::string& corpus_path, int order,
                  double backoff_factor, int min_count,
                  const std::string& model_out);

// Compares two systems over shared rated questions; returns the rendered
// text table and optionally writes the JSON document.
std::string cmd_evaluate(const std::string& ratings_path,
                         const std::string& meta_path, const std::string& sys_a,
                         const std::string& sys_b,
                         const std::string& json_out = "");

}  // namespace xqa

#endif  // XQA_PIPELINE_H_
