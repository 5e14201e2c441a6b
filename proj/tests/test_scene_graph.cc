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

#include <random>

#include <doctest.h>

#include "xqa/errors.h"
#include "xqa/text.h"

using namespace xqa;

namespace {

std::string graph_json(const std::string& objects, const std::string& relations,
                       const std::string& regions) {
  return R"({"image": {"width": 224, "height": 224}, "objects": [)" + objects +
         R"(], "relations": [)" + relations + R"(], "regions": [)" + regions +
         "]}";
}

}  // namespace

TEST_CASE("parse_scene_graph accepts an empty graph") {
  std::vector<std::string> warnings;
  SceneGraph g = parse_scene_graph(graph_json("", "", ""), &warnings);
  CHECK(g.objects().empty());
  CHECK(g.relations().empty());
  CHECK(g.regions().empty());
  CHECK(warnings.empty());
}

TEST_CASE("parse_scene_graph reads a region description") {
  SceneGraph g = parse_scene_graph(graph_json(
      "", "",
      R"({"id": "rg1", "phrase": "A Tennis Player hitting a ball",
          "bbox": {"x": 10, "y": 10, "w": 100, "h": 80}})"));
  REQUIRE(g.regions().size() == 1);
  CHECK(g.regions()[0].phrase == "a tennis player hitting a ball");
  CHECK(g.regions()[0].bbox == BoundingBox{10, 10, 100, 80});
}

TEST_CASE("parse_scene_graph drops dangling relations with a warning") {
  std::vector<std::string> warnings;
  SceneGraph g = parse_scene_graph(
      graph_json(
          R"({"id": "o1", "name": "car", "attributes": [],
              "bbox": {"x": 0, "y": 0, "w": 50, "h": 50}})",
          R"({"id": "r1", "subject_id": "o1", "predicate": "parked on",
              "object_id": "missing"})",
          ""),
      &warnings);
  CHECK(g.relations().empty());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("r1") != std::string::npos);
  // Re-serializing shows the relation is really gone.
  SceneGraph again = parse_scene_graph(serialize_scene_graph(g));
  CHECK(again.relations().empty());
  CHECK(again.objects().size() == 1);
}

TEST_CASE("parse_scene_graph clips out-of-bounds boxes") {
  std::vector<std::string> warnings;
  SceneGraph g = parse_scene_graph(
      graph_json(R"({"id": "o1", "name": "sky",
                     "bbox": {"x": -10, "y": -10, "w": 300, "h": 60}})",
                 "", ""),
      &warnings);
  REQUIRE(g.objects().size() == 1);
  CHECK(g.objects()[0].bbox == BoundingBox{0, 0, 224, 50});
  CHECK(warnings.size() == 1);
}

TEST_CASE("parse_scene_graph drops entities clipped to nothing") {
  std::vector<std::string> warnings;
  SceneGraph g = parse_scene_graph(
      graph_json(R"({"id": "o1", "name": "ghost",
                     "bbox": {"x": 500, "y": 500, "w": 10, "h": 10}})",
                 "", ""),
      &warnings);
  CHECK(g.objects().empty());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("o1") != std::string::npos);
}

TEST_CASE("parse_scene_graph error paths") {
  CHECK_THROWS_AS(parse_scene_graph("{not json"), ParseError);
  // The parse error carries a byte offset.
  try {
    parse_scene_graph("{\"image\": }");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  // Missing required field names the field.
  try {
    parse_scene_graph(graph_json(
        R"({"id": "o1", "bbox": {"x": 0, "y": 0, "w": 5, "h": 5}})", "", ""));
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("name") != std::string::npos);
  }
  // Declared zero-area box names the entity.
  try {
    parse_scene_graph(graph_json(
        R"({"id": "o9", "name": "dot", "bbox": {"x": 1, "y": 1, "w": 0, "h": 5}})",
        "", ""));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("o9") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scene_graph(graph_json(
                      R"({"id": "d", "name": "a", "bbox": {"x":0,"y":0,"w":5,"h":5}},
                         {"id": "d", "name": "b", "bbox": {"x":0,"y":0,"w":5,"h":5}})",
                      "", "")),
                  ValidationError);
}

TEST_CASE("object_phrase renders attributes then name") {
  CHECK(object_phrase({"o1", "sign", {"walk"}, {}}, 1) == "walk sign");
  CHECK(object_phrase({"o2", "table", {}, {}}, 2) == "table");
  CHECK(object_phrase({"o3", "stool", {"bar", "tall"}, {}}, 1) == "bar stool");
  CHECK(object_phrase({"o3", "stool", {"bar", "tall"}, {}}, 2) ==
        "bar tall stool");
  CHECK(object_phrase({"o3", "stool", {"bar", "tall"}, {}}, 0) == "stool");
}

TEST_CASE("relation_phrase joins subject, predicate, object") {
  SceneGraph g = parse_scene_graph(graph_json(
      R"({"id": "o1", "name": "car", "bbox": {"x": 0, "y": 0, "w": 60, "h": 40}},
         {"id": "o2", "name": "road", "bbox": {"x": 0, "y": 100, "w": 224, "h": 100}},
         {"id": "o3", "name": "keyboard", "bbox": {"x": 10, "y": 10, "w": 40, "h": 20}},
         {"id": "o4", "name": "keys", "bbox": {"x": 12, "y": 12, "w": 30, "h": 10}})",
      R"({"id": "r1", "subject_id": "o1", "predicate": "parked on", "object_id": "o2"},
         {"id": "r2", "subject_id": "o3", "predicate": "with", "object_id": "o4"},
         {"id": "r3", "subject_id": "o1", "predicate": "rel", "object_id": "o1"})",
      ""));
  CHECK(relation_phrase(g.relations()[0], g) == "car parked on road");
  CHECK(relation_phrase(g.relations()[1], g) == "keyboard with keys");
  CHECK(relation_phrase(g.relations()[2], g) == "car rel car");

  Relation bad{"rx", "nope", "on", "o1", std::nullopt};
  CHECK_THROWS_AS(relation_phrase(bad, g), LookupError);

  // Token count decomposes over the three parts.
  for (const Relation& rel : g.relations()) {
    CHECK(token_count(relation_phrase(rel, g)) ==
          token_count(g.object(rel.subject_id).name) +
              token_count(rel.predicate) +
              token_count(g.object(rel.object_id).name));
  }
}

TEST_CASE("relation bbox falls back to the endpoint union") {
  SceneGraph g = parse_scene_graph(graph_json(
      R"({"id": "o1", "name": "a", "bbox": {"x": 0, "y": 0, "w": 10, "h": 10}},
         {"id": "o2", "name": "b", "bbox": {"x": 20, "y": 20, "w": 10, "h": 10}})",
      R"({"id": "r1", "subject_id": "o1", "predicate": "near", "object_id": "o2"},
         {"id": "r2", "subject_id": "o1", "predicate": "near", "object_id": "o2",
          "bbox": {"x": 0, "y": 0, "w": 5, "h": 5}})",
      ""));
  CHECK(g.relation_bbox(g.relations()[0]) == BoundingBox{0, 0, 30, 30});
  CHECK(g.relation_bbox(g.relations()[1]) == BoundingBox{0, 0, 5, 5});
}

TEST_CASE("union_bbox basics") {
  const BoundingBox b{3, 4, 10, 12};
  CHECK(union_bbox(b, b) == b);
  CHECK(union_bbox({0, 0, 10, 10}, {20, 20, 10, 10}) ==
        BoundingBox{0, 0, 30, 30});
  // Nested boxes give the outer box.
  CHECK(union_bbox({0, 0, 50, 50}, {10, 10, 5, 5}) == BoundingBox{0, 0, 50, 50});
}

TEST_CASE("union_bbox properties") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 80);
  std::uniform_int_distribution<int> extent(1, 60);
  auto random_box = [&] {
    return BoundingBox{coord(rng), coord(rng), extent(rng), extent(rng)};
  };
  for (int i = 0; i < 200; ++i) {
    const BoundingBox a = random_box(), b = random_box(), c = random_box();
    CHECK(union_bbox(a, b) == union_bbox(b, a));
    CHECK(union_bbox(union_bbox(a, b), c) == union_bbox(a, union_bbox(b, c)));
    CHECK(union_bbox(a, a) == a);
    CHECK(union_bbox(a, b).area() >= std::max(a.area(), b.area()));
    CHECK(contains(union_bbox(a, b), a));
    CHECK(contains(union_bbox(a, b), b));
  }
}

TEST_CASE("parse and serialize round-trip on random graphs") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 150);
  std::uniform_int_distribution<int> extent(1, 70);
  std::uniform_int_distribution<int> count(0, 6);
  const std::vector<std::string> names = {"car", "road", "tree", "walk sign",
                                          "man"};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ObjectNode> objects;
    const int n_obj = count(rng);
    for (int i = 0; i < n_obj; ++i) {
      ObjectNode o;
      o.id = "o" + std::to_string(i);
      o.name = names[i % names.size()];
      if (i % 2 == 0) o.attributes = {"small"};
      o.bbox = {coord(rng), coord(rng), extent(rng), extent(rng)};
      objects.push_back(o);
    }
    std::vector<Relation> relations;
    if (n_obj >= 2) {
      const int n_rel = count(rng) % n_obj;
      for (int i = 0; i < n_rel; ++i) {
        Relation r;
        r.id = "r" + std::to_string(i);
        r.subject_id = "o" + std::to_string(i % n_obj);
        r.predicate = "next to";
        r.object_id = "o" + std::to_string((i + 1) % n_obj);
        relations.push_back(r);
      }
    }
    std::vector<RegionDescription> regions;
    const int n_reg = count(rng);
    for (int i = 0; i < n_reg; ++i) {
      regions.push_back({"g" + std::to_string(i), "a thing near a thing",
                         {coord(rng), coord(rng), extent(rng), extent(rng)}});
    }
    SceneGraph g(224, 224, objects, relations, regions);

    const std::string once = serialize_scene_graph(g);
    SceneGraph reparsed = parse_scene_graph(once);
    const std::string twice = serialize_scene_graph(reparsed);
    CHECK(once == twice);
    CHECK(reparsed.objects().size() == g.objects().size());
    CHECK(reparsed.relations().size() == g.relations().size());
    CHECK(reparsed.regions().size() == g.regions().size());
  }
}

TEST_CASE("every stored entity carries a positive-area box") {
  std::vector<std::string> warnings;
  SceneGraph g = parse_scene_graph(
      graph_json(
          R"({"id": "o1", "name": "car", "bbox": {"x": 200, "y": 0, "w": 100, "h": 10}},
             {"id": "o2", "name": "road", "bbox": {"x": 0, "y": 223, "w": 224, "h": 300}})",
          R"({"id": "r1", "subject_id": "o1", "predicate": "on", "object_id": "o2"})",
          R"({"id": "g1", "phrase": "the road below", "bbox": {"x": 0, "y": 200, "w": 224, "h": 24}})"),
      &warnings);
  for (const ObjectNode& o : g.objects()) CHECK(o.bbox.area() > 0);
  for (const RegionDescription& r : g.regions()) CHECK(r.bbox.area() > 0);
  for (const Relation& r : g.relations()) CHECK(g.relation_bbox(r).area() > 0);
}
