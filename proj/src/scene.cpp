// Copyright (c) 2026 Semnav Authors
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

#include "semnav/scene.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "semnav/errors.hpp"

namespace semnav {

using nlohmann::json;

namespace {

double require_number(const json& obj, const std::string& context,
                      const std::string& key) {
  if (!obj.contains(key)) {
    throw ParseError(context + "." + key + ": missing required field");
  }
  if (!obj[key].is_number()) {
    throw ParseError(context + "." + key + ": expected a number");
  }
  return obj[key].get<double>();
}

std::string require_string(const json& obj, const std::string& context,
                           const std::string& key) {
  if (!obj.contains(key)) {
    throw ParseError(context + "." + key + ": missing required field");
  }
  if (!obj[key].is_string()) {
    throw ParseError(context + "." + key + ": expected a string");
  }
  return obj[key].get<std::string>();
}

Vec2 parse_point(const json& obj, const std::string& context) {
  return {require_number(obj, context, "x"), require_number(obj, context, "y")};
}

Polygon parse_footprint(const json& arr, const std::string& context) {
  if (!arr.is_array()) {
    throw ParseError(context + ": expected an array of [x,y] pairs");
  }
  Polygon poly;
  poly.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ParseError(context + ": each vertex must be a [x,y] number pair");
    }
    poly.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  return poly;
}

}  // namespace

Scene load_scene(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scene document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scene document: expected a JSON object");

  if (!doc.contains("schema_version")) {
    throw ParseError("schema_version: missing required field");
  }
  if (!doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != kSceneSchemaVersion) {
    throw ParseError("schema_version: expected " +
                     std::to_string(kSceneSchemaVersion));
  }

  Scene scene;
  if (!doc.contains("bounds") || !doc["bounds"].is_object()) {
    throw ParseError("bounds: missing or not an object");
  }
  const json& b = doc["bounds"];
  scene.bounds.min_x = require_number(b, "bounds", "min_x");
  scene.bounds.min_y = require_number(b, "bounds", "min_y");
  scene.bounds.max_x = require_number(b, "bounds", "max_x");
  scene.bounds.max_y = require_number(b, "bounds", "max_y");

  if (doc.contains("resolution")) {
    if (!doc["resolution"].is_number()) {
      throw ParseError("resolution: expected a number");
    }
    scene.resolution = doc["resolution"].get<double>();
  }

  if (!doc.contains("start") || !doc["start"].is_object()) {
    throw ParseError("start: missing or not an object");
  }
  if (!doc.contains("goal") || !doc["goal"].is_object()) {
    throw ParseError("goal: missing or not an object");
  }
  scene.start = parse_point(doc["start"], "start");
  scene.goal = parse_point(doc["goal"], "goal");

  if (doc.contains("obstacles")) {
    if (!doc["obstacles"].is_array()) {
      throw ParseError("obstacles: expected an array");
    }
    std::size_t i = 0;
    for (const auto& item : doc["obstacles"]) {
      const std::string context = "obstacles[" + std::to_string(i) + "]";
      if (!item.is_object()) throw ParseError(context + ": expected an object");
      ObstacleInstance inst;
      inst.instance_id = require_string(item, context, "instance_id");
      inst.family = require_string(item, context, "family");
      inst.description =
          item.contains("description") && item["description"].is_string()
              ? item["description"].get<std::string>()
              : std::string{};
      if (!item.contains("footprint")) {
        throw ParseError(context + ".footprint: missing required field");
      }
      inst.footprint = parse_footprint(item["footprint"], context + ".footprint");
      scene.obstacles.push_back(std::move(inst));
      ++i;
    }
  }

  validate_scene(scene);
  return scene;
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scene file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scene(buf.str());
}

std::string save_scene(const Scene& scene) {
  json doc;
  doc["schema_version"] = kSceneSchemaVersion;
  doc["bounds"] = {{"min_x", scene.bounds.min_x},
                   {"min_y", scene.bounds.min_y},
                   {"max_x", scene.bounds.max_x},
                   {"max_y", scene.bounds.max_y}};
  doc["resolution"] = scene.resolution;
  doc["start"] = {{"x", scene.start.x()}, {"y", scene.start.y()}};
  doc["goal"] = {{"x", scene.goal.x()}, {"y", scene.goal.y()}};
  doc["obstacles"] = json::array();
  for (const ObstacleInstance& inst : scene.obstacles) {
    json footprint = json::array();
    for (const Vec2& v : inst.footprint) {
      footprint.push_back({v.x(), v.y()});
    }
    doc["obstacles"].push_back({{"instance_id", inst.instance_id},
                                {"family", inst.family},
                                {"description", inst.description},
                                {"footprint", std::move(footprint)}});
  }
  return doc.dump(2) + "\n";
}

void validate_scene(const Scene& scene) {
  if (scene.bounds.width() <= 0.0 || scene.bounds.height() <= 0.0) {
    throw ValidationError("bounds must have strictly positive width and height");
  }
  if (scene.resolution <= 0.0) {
    throw ValidationError("resolution must be > 0");
  }
  if (scene.bounds.width() < 2.0 * scene.resolution ||
      scene.bounds.height() < 2.0 * scene.resolution) {
    throw ValidationError("bounds must span at least 2 cells in each dimension");
  }
  if (!scene.bounds.contains(scene.start)) {
    throw ValidationError("start outside bounds");
  }
  if (!scene.bounds.contains(scene.goal)) {
    throw ValidationError("goal outside bounds");
  }
  std::set<std::string> seen_ids;
  for (const ObstacleInstance& inst : scene.obstacles) {
    if (inst.family.empty()) {
      throw ValidationError("obstacle " + inst.instance_id + ": family is empty");
    }
    if (inst.instance_id.empty()) {
      throw ValidationError("obstacle with empty instance_id");
    }
    if (!seen_ids.insert(inst.instance_id).second) {
      throw ValidationError("duplicate instance_id: " + inst.instance_id);
    }
    if (inst.footprint.size() < 3) {
      throw ValidationError("obstacle " + inst.instance_id +
                            ": footprint needs at least 3 vertices");
    }
    if (polygon_area(inst.footprint) <= 0.0) {
      throw ValidationError("obstacle " + inst.instance_id +
                            ": footprint has zero area");
    }
  }
}

}  // namespace semnav
