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

#ifndef XQA_GRAPH_EXPLAINER_H_
#define XQA_GRAPH_EXPLAINER_H_

#include <set>
#include <string>
#include <vector>

#include "xqa/attention.h"
#include "xqa/region_explainer.h"
#include "xqa/scene_graph.h"
#include "xqa/scoring.h"

namespace xqa {

struct TraversalConfig {
  // Maximum number of phrases in one story-like explanation.
  int k_num_terms = 10;
  // How many of the highest-scoring objects the traversal may draw from;
  // 0 selects the default of twice k_num_terms.
  int top_m_objects = 0;

  int resolved_top_m() const;
  void validate() const;  // throws ValidationError
};

// Ordered phrases produced by one traversal, plus the objects that were
// visited as phrase subjects. Phrases before phase1_count come from the
// relation walk; the rest are lone-object phrases appended to fill up to
// k_num_terms.
struct PhraseList {
  std::vector<std::string> phrases;
  std::set<std::string> visited;
  std::size_t phase1_count = 0;
};

// Ranks every object by composite score and returns the top M, best first.
// A graph without objects yields an empty list plus an advisory.
std::vector<ObjectNode> select_relevant_objects(
    const SceneGraph& graph, const QaPair& qa, const AttentionMap& map,
    const Scorer& scorer, const ScoringConfig& cfg, const TraversalConfig& tcfg,
    std::vector<std::string>* warnings = nullptr);

// Subgraph containing exactly the named objects and the relations with both
// endpoints among them. Region descriptions are not carried over.
SceneGraph induced_subgraph(const SceneGraph& graph,
                            const std::set<std::string>& object_ids);

// Phrase for one node: when the node has outgoing relations, its name
// followed by "<predicate> <target name>" clauses joined by " and ", clauses
// ordered by descending relation score; otherwise its lone object phrase.
std::string emit_node_phrase(const ObjectNode& node, const SceneGraph& subgraph,
                             const Scorer& scorer, const QaPair& qa);

// Depth-first traversal over score-sorted relations that emits one phrase
// per visited subject node.
//
// Phase 1 walks relations in decreasing language-model score of their
// phrase; an unvisited subject is marked, its node phrase emitted, and its
// relation targets visited recursively (in the same score order) when they
// have outgoing relations of their own. Relation-less targets stay unmarked
// so they can recur as targets of later phrases. Phase 2 then appends lone
// object phrases, in decreasing object score, for objects that never
// appeared in any emitted phrase, until k_num_terms is reached. Duplicate
// phrase strings are dropped and the list is truncated to k_num_terms.
PhraseList dfs_sorted_with_emit(const SceneGraph& subgraph,
                                const Scorer& scorer, const QaPair& qa,
                                const TraversalConfig& tcfg);

// Algorithm pipeline: select the top-M objects by composite score, induce
// their subgraph, traverse, and compose
//   "The picture shows <phrase>, <phrase>, ... ."
// (no colon in this mode). The returned record carries the breakdown and id
// of the highest-ranked selected object. An empty traversal yields the
// fallback surface "The picture shows nothing recognizable." with the
// warning flag set.
Explanation generate_graph_explanation(const SceneGraph& graph,
                                       const QaPair& qa,
                                       const AttentionMap& map,
                                       const Scorer& scorer,
                                       const ScoringConfig& cfg,
                                       const TraversalConfig& tcfg,
                                       std::vector<std::string>* warnings =
                                           nullptr);

}  // namespace xqa

#endif  // XQA_GRAPH_EXPLAINER_H_
