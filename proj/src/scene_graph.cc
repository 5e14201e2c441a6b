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

#include "xqa/scene_graph.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "xqa/errors.h"
#include "xqa/text.h"

namespace xqa {

namespace {

using nlohmann::json;

void check_bbox_fields(const BoundingBox& b, const std::string& entity) {
  if (b.w <= 0 || b.h <= 0) {
    throw ValidationError("scene graph: entity \"" + entity +
                          "\": bounding box has zero area");
  }
  if (b.x < 0 || b.y < 0) {
    throw ValidationError("scene graph: entity \"" + entity +
                          "\": bounding box origin is negative");
  }
}

const json& require_field(const json& obj, const char* field,
                          const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw SchemaError("scene graph: " + where + ": missing field \"" + field +
                      "\"");
  }
  return *it;
}

std::string require_string(const json& obj, const char* field,
                           const std::string& where) {
  const json& v = require_field(obj, field, where);
  if (!v.is_string()) {
    throw SchemaError("scene graph: " + where + ": field \"" + field +
                      "\" must be a string");
  }
  return v.get<std::string>();
}

int require_int(const json& obj, const char* field, const std::string& where) {
  const json& v = require_field(obj, field, where);
  if (!v.is_number_integer()) {
    throw SchemaError("scene graph: " + where + ": field \"" + field +
                      "\" must be an integer");
  }
  return v.get<int>();
}

BoundingBox read_bbox(const json& obj, const std::string& where) {
  const json& b = require_field(obj, "bbox", where);
  if (!b.is_object()) {
    throw SchemaError("scene graph: " + where + ": field \"bbox\" must be an object");
  }
  return BoundingBox{require_int(b, "x", where), require_int(b, "y", where),
                     require_int(b, "w", where), require_int(b, "h", where)};
}

json bbox_to_json(const BoundingBox& b) {
  return json{{"x", b.x}, {"y", b.y}, {"w", b.w}, {"h", b.h}};
}

}  // namespace

SceneGraph::SceneGraph(int image_width, int image_height,
                       std::vector<ObjectNode> objects,
                       std::vector<Relation> relations,
                       std::vector<RegionDescription> regions)
    : image_width_(image_width),
      image_height_(image_height),
      objects_(std::move(objects)),
      relations_(std::move(relations)),
      regions_(std::move(regions)) {
  if (image_width_ <= 0 || image_height_ <= 0) {
    throw ValidationError("scene graph: image dimensions must be positive");
  }

  auto check_in_bounds = [&](const BoundingBox& b, const std::string& id) {
    check_bbox_fields(b, id);
    if (b.x + b.w > image_width_ || b.y + b.h > image_height_) {
      throw ValidationError("scene graph: entity \"" + id +
                            "\": bounding box exceeds image bounds");
    }
  };

  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const ObjectNode& obj = objects_[i];
    if (obj.id.empty()) {
      throw ValidationError("scene graph: object with empty id");
    }
    if (tokenize(obj.name).empty()) {
      throw ValidationError("scene graph: object \"" + obj.id +
                            "\": name is empty");
    }
    check_in_bounds(obj.bbox, obj.id);
    if (!object_index_.emplace(obj.id, i).second) {
      throw ValidationError("scene graph: duplicate object id \"" + obj.id +
                            "\"");
    }
  }

  std::unordered_set<std::string> relation_ids;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const Relation& rel = relations_[i];
    if (rel.id.empty() || !relation_ids.insert(rel.id).second) {
      throw ValidationError("scene graph: duplicate or empty relation id \"" +
                            rel.id + "\"");
    }
    if (tokenize(rel.predicate).empty()) {
      throw ValidationError("scene graph: relation \"" + rel.id +
                            "\": predicate is empty");
    }
    if (object_index_.find(rel.subject_id) == object_index_.end() ||
        object_index_.find(rel.object_id) == object_index_.end()) {
      throw ValidationError("scene graph: relation \"" + rel.id +
                            "\": endpoint does not resolve");
    }
    if (rel.bbox) check_in_bounds(*rel.bbox, rel.id);
    outgoing_[rel.subject_id].push_back(i);
  }

  std::unordered_set<std::string> region_ids;
  for (const RegionDescription& region : regions_) {
    if (region.id.empty() || !region_ids.insert(region.id).second) {
      throw ValidationError("scene graph: duplicate or empty region id \"" +
                            region.id + "\"");
    }
    if (tokenize(region.phrase).empty()) {
      throw ValidationError("scene graph: region \"" + region.id +
                            "\": phrase is empty");
    }
    check_in_bounds(region.bbox, region.id);
  }
}

const ObjectNode* SceneGraph::find_object(const std::string& id) const {
  auto it = object_index_.find(id);
  return it == object_index_.end() ? nullptr : &objects_[it->second];
}

const ObjectNode& SceneGraph::object(const std::string& id) const {
  const ObjectNode* obj = find_object(id);
  if (obj == nullptr) {
    throw LookupError("scene graph: unknown object id \"" + id + "\"");
  }
  return *obj;
}

std::vector<const Relation*> SceneGraph::relations_from(
    const std::string& subject_id) const {
  std::vector<const Relation*> out;
  auto it = outgoing_.find(subject_id);
  if (it == outgoing_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t idx : it->second) out.push_back(&relations_[idx]);
  return out;
}

BoundingBox SceneGraph::relation_bbox(const Relation& rel) const {
  if (rel.bbox) return *rel.bbox;
  return union_bbox(object(rel.subject_id).bbox, object(rel.object_id).bbox);
}

SceneGraph parse_scene_graph(const std::string& json_text,
                             std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("scene graph: malformed JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw SchemaError("scene graph: top-level value must be an object");
  }

  const json& image = require_field(doc, "image", "document");
  const int width = require_int(image, "width", "image");
  const int height = require_int(image, "height", "image");
  if (width <= 0 || height <= 0) {
    throw ValidationError("scene graph: image dimensions must be positive");
  }

  auto warn = [&](const std::string& msg) {
    if (warnings != nullptr) warnings->push_back(msg);
  };

  // Clips to the image; nullopt means the box lies fully outside. Boxes
  // declared with no extent are rejected, but negative origins are merely
  // clipped away.
  auto clip_or_drop = [&](const BoundingBox& raw, const std::string& id)
      -> std::optional<BoundingBox> {
    if (raw.w <= 0 || raw.h <= 0) {
      throw ValidationError("scene graph: entity \"" + id +
                            "\": bounding box has zero area");
    }
    std::optional<BoundingBox> clipped = clip_bbox(raw, width, height);
    if (!clipped) {
      warn("dropped entity \"" + id + "\": bounding box outside image");
    } else if (*clipped != raw) {
      warn("clipped bounding box of entity \"" + id + "\" to image bounds");
    }
    return clipped;
  };

  std::vector<ObjectNode> objects;
  if (auto it = doc.find("objects"); it != doc.end()) {
    if (!it->is_array()) {
      throw SchemaError("scene graph: \"objects\" must be an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& o = (*it)[i];
      const std::string where = "object " + std::to_string(i);
      ObjectNode node;
      node.id = require_string(o, "id", where);
      node.name = normalize_text(require_string(o, "name", where));
      if (auto attrs = o.find("attributes"); attrs != o.end()) {
        if (!attrs->is_array()) {
          throw SchemaError("scene graph: " + where +
                            ": \"attributes\" must be an array");
        }
        for (const json& a : *attrs) {
          if (!a.is_string()) {
            throw SchemaError("scene graph: " + where +
                              ": attributes must be strings");
          }
          node.attributes.push_back(normalize_text(a.get<std::string>()));
        }
      }
      std::optional<BoundingBox> clipped =
          clip_or_drop(read_bbox(o, where), node.id);
      if (!clipped) continue;
      node.bbox = *clipped;
      objects.push_back(std::move(node));
    }
  }

  std::unordered_set<std::string> object_ids;
  for (const ObjectNode& obj : objects) object_ids.insert(obj.id);

  std::vector<Relation> relations;
  if (auto it = doc.find("relations"); it != doc.end()) {
    if (!it->is_array()) {
      throw SchemaError("scene graph: \"relations\" must be an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& r = (*it)[i];
      const std::string where = "relation " + std::to_string(i);
      Relation rel;
      rel.id = require_string(r, "id", where);
      rel.subject_id = require_string(r, "subject_id", where);
      rel.predicate = normalize_text(require_string(r, "predicate", where));
      rel.object_id = require_string(r, "object_id", where);
      if (object_ids.find(rel.subject_id) == object_ids.end() ||
          object_ids.find(rel.object_id) == object_ids.end()) {
        warn("dropped relation \"" + rel.id + "\": dangling endpoint");
        continue;
      }
      if (auto b = r.find("bbox"); b != r.end() && !b->is_null()) {
        std::optional<BoundingBox> clipped =
            clip_or_drop(read_bbox(r, where), rel.id);
        // A relation whose own box clips away still has the endpoint union.
        if (clipped) rel.bbox = *clipped;
      }
      relations.push_back(std::move(rel));
    }
  }

  std::vector<RegionDescription> regions;
  if (auto it = doc.find("regions"); it != doc.end()) {
    if (!it->is_array()) {
      throw SchemaError("scene graph: \"regions\" must be an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& r = (*it)[i];
      const std::string where = "region " + std::to_string(i);
      RegionDescription region;
      region.id = require_string(r, "id", where);
      region.phrase = normalize_text(require_string(r, "phrase", where));
      std::optional<BoundingBox> clipped =
          clip_or_drop(read_bbox(r, where), region.id);
      if (!clipped) continue;
      region.bbox = *clipped;
      regions.push_back(std::move(region));
    }
  }

  return SceneGraph(width, height, std::move(objects), std::move(relations),
                    std::move(regions));
}

std::string serialize_scene_graph(const SceneGraph& graph) {
  json doc;
  doc["image"] = json{{"width", graph.image_width()},
                      {"height", graph.image_height()}};
  doc["objects"] = json::array();
  for (const ObjectNode& obj : graph.objects()) {
    doc["objects"].push_back(json{{"id", obj.id},
                                  {"name", obj.name},
                                  {"attributes", obj.attributes},
                                  {"bbox", bbox_to_json(obj.bbox)}});
  }
  doc["relations"] = json::array();
  for (const Relation& rel : graph.relations()) {
    json r{{"id", rel.id},
           {"subject_id", rel.subject_id},
           {"predicate", rel.predicate},
           {"object_id", rel.object_id}};
    if (rel.bbox) r["bbox"] = bbox_to_json(*rel.bbox);
    doc["relations"].push_back(std::move(r));
  }
  doc["regions"] = json::array();
  for (const RegionDescription& region : graph.regions()) {
    doc["regions"].push_back(json{{"id", region.id},
                                  {"phrase", region.phrase},
                                  {"bbox", bbox_to_json(region.bbox)}});
  }
  return doc.dump(2) + "\n";
}

std::string object_phrase(const ObjectNode& obj, int max_attrs) {
  if (max_attrs < 0) throw ArgumentError("object_phrase: max_attrs < 0");
  std::vector<std::string> parts;
  const std::size_t n =
      std::min<std::size_t>(obj.attributes.size(), static_cast<std::size_t>(max_attrs));
  for (std::size_t i = 0; i < n; ++i) parts.push_back(obj.attributes[i]);
  parts.push_back(obj.name);
  return normalize_text(join(parts, " "));
}

std::string relation_phrase(const Relation& rel, const SceneGraph& graph) {
  const ObjectNode& subject = graph.object(rel.subject_id);
  const ObjectNode& target = graph.object(rel.object_id);
  return normalize_text(subject.name + " " + rel.predicate + " " + target.name);
}

}  // namespace xqa
