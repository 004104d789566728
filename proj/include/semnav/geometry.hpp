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

#ifndef SEMNAV_GEOMETRY_HPP_
#define SEMNAV_GEOMETRY_HPP_

#include <Eigen/Dense>
#include <vector>

namespace semnav {

using Vec2 = Eigen::Vector2d;

/// Simple polygon in world meters. Vertices in order, closing edge implied
/// (last vertex connects back to the first).
using Polygon = std::vector<Vec2>;

/// Axis-aligned rectangle in world meters.
struct Rect {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  bool contains(const Vec2& p) const {
    return p.x() >= min_x && p.x() <= max_x && p.y() >= min_y && p.y() <= max_y;
  }
};

/// Straight-line distance between two world points.
double euclidean_distance(const Vec2& a, const Vec2& b);

/// Signed shoelace area; positive for counter-clockwise vertex order.
double polygon_signed_area(const Polygon& poly);

/// |signed area|.
double polygon_area(const Polygon& poly);

/// Axis-aligned bounding box of a polygon. Undefined for empty input.
Rect polygon_bbox(const Polygon& poly);

/// Even-odd rule; points exactly on an edge may land on either side.
bool point_in_polygon(const Vec2& p, const Polygon& poly);

/// Sutherland-Hodgman clip of a simple polygon against a rectangle. The
/// result may carry degenerate edges along the clip boundary; its absolute
/// shoelace area still equals the true intersection area.
Polygon clip_polygon_to_rect(const Polygon& poly, const Rect& rect);

/// Area of polygon ∩ rect in m².
double polygon_rect_overlap_area(const Polygon& poly, const Rect& rect);

}  // namespace semnav

#endif  // SEMNAV_GEOMETRY_HPP_
