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

#ifndef XQA_SCENE_GRAPH_H_
#define XQA_SCENE_GRAPH_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xqa/geometry.h"

namespace xqa {

// A labeled object in the image, optionally with attributes ("red", "tall").
struct ObjectNode {
  std::string id;
  std::string name;
  std::vector<std::string> attributes;
  BoundingBox bbox;
};

// Directed predicate edge between two objects. When the relation carries no
// bounding box of its own, its effective box is the union of its endpoints.
struct Relation {
  std::string id;
  std::string subject_id;
  std::string predicate;
  std::string object_id;
  std::optional<BoundingBox> bbox;
};

// Free-text caption of an image sub-rectangle.
struct RegionDescription {
  std::string id;
  std::string phrase;
  BoundingBox bbox;
};

// Immutable scene graph over one image. The constructor validates every
// invariant: positive image dimensions, unique nonempty ids, nonempty names
// and phrases, in-bounds boxes with positive area, resolvable relation
// endpoints. Safe for concurrent read-only access.
class SceneGraph {
 public:
  SceneGraph(int image_width, int image_height, std::vector<ObjectNode> objects,
             std::vector<Relation> relations,
             std::vector<RegionDescription> regions);

  int image_width() const { return image_width_; }
  int image_height() const { return image_height_; }
  const std::vector<ObjectNode>& objects() const { return objects_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<RegionDescription>& regions() const { return regions_; }

  const ObjectNode* find_object(const std::string& id) const;
  // Throws LookupError when the id does not resolve.
  const ObjectNode& object(const std::string& id) const;

  // Outgoing relations of an object, in input order.
  std::vector<const Relation*> relations_from(const std::string& subject_id) const;

  // The relation's own box when present, else the union of its endpoints.
  BoundingBox relation_bbox(const Relation& rel) const;

 private:
  int image_width_ = 0;
  int image_height_ = 0;
  std::vector<ObjectNode> objects_;
  std::vector<Relation> relations_;
  std::vector<RegionDescription> regions_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> outgoing_;
};

// Parses the one-image-per-file scene graph JSON document:
//   { "image": {"width": int, "height": int},
//     "objects": [{"id","name","attributes","bbox"}...],
//     "relations": [{"id","subject_id","predicate","object_id","bbox"?}...],
//     "regions": [{"id","phrase","bbox"}...] }
//
// Boxes partially outside the image are clipped; entities whose clipped area
// is zero and relations with unresolvable endpoints are dropped, each with a
// message appended to `warnings`. Declared zero- or negative-extent boxes are
// rejected outright. All text fields are lowercased with collapsed
// whitespace.
SceneGraph parse_scene_graph(const std::string& json_text,
                             std::vector<std::string>* warnings = nullptr);

// Inverse of parse_scene_graph for valid graphs (parse/serialize round-trip).
std::string serialize_scene_graph(const SceneGraph& graph);

// Natural-language rendering of an object: up to `max_attrs` attributes
// followed by the name, space-joined (e.g. "walk sign").
std::string object_phrase(const ObjectNode& obj, int max_attrs = 1);

// "<subject name> <predicate> <object name>", e.g. "car parked on road".
std::string relation_phrase(const Relation& rel, const SceneGraph& graph);

}  // namespace xqa

#endif  // XQA_SCENE_GRAPH_H_
