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

#ifndef SEMNAV_SCENE_HPP_
#define SEMNAV_SCENE_HPP_

#include <string>
#include <vector>

#include "semnav/geometry.hpp"

namespace semnav {

/// One placed building element. The family name is the unit at which danger
/// coefficients are assigned; the footprint is the element's 2D cross-section.
struct ObstacleInstance {
  std::string instance_id;
  std::string family;
  std::string description;
  Polygon footprint;  // closed simple polygon, world meters
};

/// World-space floorplan: walkable bounds, obstacle instances, and the
/// start/goal query points. All lengths in meters.
struct Scene {
  Rect bounds;
  double resolution = 0.1;  // cell edge length used when rasterizing
  Vec2 start{0.0, 0.0};
  Vec2 goal{0.0, 0.0};
  std::vector<ObstacleInstance> obstacles;
};

/// Current scene file schema version. Loaders accept exactly this version.
inline constexpr int kSceneSchemaVersion = 1;

/// Parses a scene document (JSON text). Unknown fields are ignored.
/// Throws ParseError naming the offending field for schema violations and
/// ValidationError for invariant violations (e.g. "goal outside bounds").
Scene load_scene(const std::string& document);

/// load_scene over a file's contents.
Scene load_scene_file(const std::string& path);

/// Serializes a scene back to the schema. Round trip through load_scene is
/// loss-free.
std::string save_scene(const Scene& scene);

/// Checks every Scene invariant; throws ValidationError on the first failure.
void validate_scene(const Scene& scene);

}  // namespace semnav

#endif  // SEMNAV_SCENE_HPP_
