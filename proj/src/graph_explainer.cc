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

#include "xqa/graph_explainer.h"

#include <algorithm>
#include <unordered_set>

#include "xqa/errors.h"
#include "xqa/text.h"

namespace xqa {

namespace {

// Lone-object phrases inside a traversal always use a single attribute,
// matching the short renderings the traversal composes relations from.
constexpr int kTraversalMaxAttrs = 1;

struct ScoredRelation {
  const Relation* rel;
  std::string phrase;
  double score;
};

struct ScoredObject {
  const ObjectNode* obj;
  std::string phrase;
  double score;
};

// Shared tie-break: score descending, phrase ascending, id ascending.
template <typename T>
void sort_by_score(std::vector<T>& items,
                   const std::string& (*id_of)(const T&)) {
  std::stable_sort(items.begin(), items.end(), [&](const T& a, const T& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.phrase != b.phrase) return a.phrase < b.phrase;
    return id_of(a) < id_of(b);
  });
}

const std::string& relation_id(const ScoredRelation& r) { return r.rel->id; }
const std::string& object_id(const ScoredObject& o) { return o.obj->id; }

class Traversal {
 public:
  Traversal(const SceneGraph& subgraph, const Scorer& scorer, const QaPair& qa,
            const TraversalConfig& tcfg)
      : subgraph_(subgraph), tcfg_(tcfg) {
    const std::string context = qa.context_text();
    for (const Relation& rel : subgraph.relations()) {
      const std::string phrase = relation_phrase(rel, subgraph);
      relations_.push_back({&rel, phrase, scorer.score(phrase, context)});
    }
    sort_by_score(relations_, relation_id);
    for (const ObjectNode& obj : subgraph.objects()) {
      const std::string phrase = object_phrase(obj, kTraversalMaxAttrs);
      objects_.push_back({&obj, phrase, scorer.score(phrase, context)});
    }
    sort_by_score(objects_, object_id);
  }

  PhraseList run() {
    for (const ScoredRelation& sr : relations_) {
      if (!visited_.count(sr.rel->subject_id)) {
        visit(subgraph_.object(sr.rel->subject_id));
      }
    }
    result_.phase1_count =
        std::min(result_.phrases.size(),
                 static_cast<std::size_t>(tcfg_.k_num_terms));

    for (const ScoredObject& so : objects_) {
      if (result_.phrases.size() >=
          static_cast<std::size_t>(tcfg_.k_num_terms)) {
        break;
      }
      if (visited_.count(so.obj->id) || mentioned_.count(so.obj->id)) continue;
      mentioned_.insert(so.obj->id);
      result_.visited.insert(so.obj->id);
      append_phrase(so.phrase);
    }

    if (result_.phrases.size() >
        static_cast<std::size_t>(tcfg_.k_num_terms)) {
      result_.phrases.resize(static_cast<std::size_t>(tcfg_.k_num_terms));
    }
    return std::move(result_);
  }

 private:
  // Outgoing relations of one subject, highest score first.
  std::vector<const ScoredRelation*> outgoing_sorted(
      const std::string& subject_id) const {
    std::vector<const ScoredRelation*> out;
    for (const ScoredRelation& sr : relations_) {
      if (sr.rel->subject_id == subject_id) out.push_back(&sr);
    }
    return out;
  }

  void append_phrase(const std::string& phrase) {
    if (emitted_.insert(phrase).second) result_.phrases.push_back(phrase);
  }

  // Marks the node, emits its phrase, then descends into relation-bearing
  // targets. Targets without outgoing relations stay unmarked so they can
  // recur as targets later; they are still recorded as mentioned.
  void visit(const ObjectNode& node) {
    visited_.insert(node.id);
    result_.visited.insert(node.id);
    mentioned_.insert(node.id);

    const std::vector<const ScoredRelation*> outgoing =
        outgoing_sorted(node.id);
    if (outgoing.empty()) {
      append_phrase(object_phrase(node, kTraversalMaxAttrs));
      return;
    }

    std::string phrase = node.name;
    for (std::size_t i = 0; i < outgoing.size(); ++i) {
      const Relation& rel = *outgoing[i]->rel;
      phrase += (i == 0 ? " " : " and ") + rel.predicate + " " +
                subgraph_.object(rel.object_id).name;
      mentioned_.insert(rel.object_id);
    }
    append_phrase(normalize_text(phrase));

    for (const ScoredRelation* sr : outgoing) {
      const std::string& target_id = sr->rel->object_id;
      if (visited_.count(target_id)) continue;
      if (!subgraph_.relations_from(target_id).empty()) {
        visit(subgraph_.object(target_id));
      }
    }
  }

  const SceneGraph& subgraph_;
  const TraversalConfig& tcfg_;
  std::vector<ScoredRelation> relations_;
  std::vector<ScoredObject> objects_;
  std::unordered_set<std::string> visited_;
  std::unordered_set<std::string> mentioned_;
  std::unordered_set<std::string> emitted_;
  PhraseList result_;
};

}  // namespace

int TraversalConfig::resolved_top_m() const {
  return top_m_objects > 0 ? top_m_objects : 2 * k_num_terms;
}

void TraversalConfig::validate() const {
  if (k_num_terms < 1) {
    throw ValidationError("traversal: k_num_terms must be >= 1");
  }
  if (resolved_top_m() < k_num_terms) {
    throw ValidationError(
        "traversal: top_m_objects must be >= k_num_terms");
  }
}

std::vector<ObjectNode> select_relevant_objects(
    const SceneGraph& graph, const QaPair& qa, const AttentionMap& map,
    const Scorer& scorer, const ScoringConfig& cfg, const TraversalConfig& tcfg,
    std::vector<std::string>* warnings) {
  tcfg.validate();
  if (graph.objects().empty()) {
    if (warnings != nullptr) {
      warnings->push_back(
          "no objects in scene graph; nothing to select for a graph-mode "
          "explanation");
    }
    return {};
  }

  std::vector<Candidate> candidates;
  candidates.reserve(graph.objects().size());
  for (const ObjectNode& obj : graph.objects()) {
    candidates.push_back(Candidate{object_phrase(obj, cfg.max_attrs), obj.bbox,
                                   {SourceKind::kObject, obj.id}});
  }
  const std::vector<ScoredCandidate> ranked =
      rank_candidates(candidates, qa, map, scorer, cfg);

  std::vector<ObjectNode> out;
  const std::size_t m = static_cast<std::size_t>(tcfg.resolved_top_m());
  for (const ScoredCandidate& sc : ranked) {
    if (out.size() >= m) break;
    out.push_back(graph.object(sc.candidate.source.id));
  }
  return out;
}

SceneGraph induced_subgraph(const SceneGraph& graph,
                            const std::set<std::string>& object_ids) {
  std::vector<ObjectNode> objects;
  for (const ObjectNode& obj : graph.objects()) {
    if (object_ids.count(obj.id)) objects.push_back(obj);
  }
  std::vector<Relation> relations;
  for (const Relation& rel : graph.relations()) {
    if (object_ids.count(rel.subject_id) && object_ids.count(rel.object_id)) {
      relations.push_back(rel);
    }
  }
  return SceneGraph(graph.image_width(), graph.image_height(),
                    std::move(objects), std::move(relations), {});
}

std::string emit_node_phrase(const ObjectNode& node, const SceneGraph& subgraph,
                             const Scorer& scorer, const QaPair& qa) {
  std::vector<const Relation*> outgoing = subgraph.relations_from(node.id);
  if (outgoing.empty()) return object_phrase(node, kTraversalMaxAttrs);

  const std::string context = qa.context_text();
  std::vector<ScoredRelation> scored;
  for (const Relation* rel : outgoing) {
    const std::string phrase = relation_phrase(*rel, subgraph);
    scored.push_back({rel, phrase, scorer.score(phrase, context)});
  }
  sort_by_score(scored, relation_id);

  std::string phrase = node.name;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    phrase += (i == 0 ? " " : " and ") + scored[i].rel->predicate + " " +
              subgraph.object(scored[i].rel->object_id).name;
  }
  return normalize_text(phrase);
}

Explanation generate_graph_explanation(const SceneGraph& graph,
                                       const QaPair& qa,
                                       const AttentionMap& map,
                                       const Scorer& scorer,
                                       const ScoringConfig& cfg,
                                       const TraversalConfig& tcfg,
                                       std::vector<std::string>* warnings) {
  tcfg.validate();
  const std::vector<ObjectNode> selected =
      select_relevant_objects(graph, qa, map, scorer, cfg, tcfg, warnings);

  Explanation e;
  e.rank = 1;
  if (selected.empty()) {
    e.surface = "The picture shows nothing recognizable.";
    e.warning = true;
    if (warnings != nullptr) {
      warnings->push_back("graph explanation is empty");
    }
    return e;
  }

  std::set<std::string> ids;
  for (const ObjectNode& obj : selected) ids.insert(obj.id);
  const SceneGraph subgraph = induced_subgraph(graph, ids);

  PhraseList phrases = dfs_sorted_with_emit(subgraph, scorer, qa, tcfg);
  if (phrases.phrases.empty()) {
    e.surface = "The picture shows nothing recognizable.";
    e.warning = true;
    if (warnings != nullptr) {
      warnings->push_back("graph explanation is empty");
    }
    return e;
  }

  e.surface = "The picture shows " + join(phrases.phrases, ", ") + ".";
  e.phrases = std::move(phrases.phrases);
  // The record is anchored at the strongest selected object.
  const ObjectNode& top = selected.front();
  e.source = {SourceKind::kObject, top.id};
  e.score = composite_score(
      Candidate{object_phrase(top, cfg.max_attrs), top.bbox, e.source}, qa,
      map, scorer, cfg);
  return e;
}

PhraseList dfs_sorted_with_emit(const SceneGraph& subgraph,
                                const Scorer& scorer, const QaPair& qa,
                                const TraversalConfig& tcfg) {
  tcfg.validate();
  return Traversal(subgraph, scorer, qa, tcfg).run();
}

}  // namespace xqa
