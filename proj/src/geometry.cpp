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

#include "semnav/geometry.hpp"

#include <cmath>

namespace semnav {

double euclidean_distance(const Vec2& a, const Vec2& b) {
  return (b - a).norm();
}

double polygon_signed_area(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return 0.0;
  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    twice_area += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * twice_area;
}

double polygon_area(const Polygon& poly) {
  return std::abs(polygon_signed_area(poly));
}

Rect polygon_bbox(const Polygon& poly) {
  Rect box;
  box.min_x = box.max_x = poly.front().x();
  box.min_y = box.max_y = poly.front().y();
  for (const Vec2& p : poly) {
    box.min_x = std::min(box.min_x, p.x());
    box.max_x = std::max(box.max_x, p.x());
    box.min_y = std::min(box.min_y, p.y());
    box.max_y = std::max(box.max_y, p.y());
  }
  return box;
}

bool point_in_polygon(const Vec2& p, const Polygon& poly) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    const bool crosses = (a.y() > p.y()) != (b.y() > p.y());
    if (crosses &&
        p.x() < (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) + a.x()) {
      inside = !inside;
    }
  }
  return inside;
}

namespace {

// One half-plane pass of Sutherland-Hodgman. inside(p) keeps p; edges
// crossing the boundary emit the intersection point.
template <typename InsideFn, typename CrossFn>
Polygon clip_half_plane(const Polygon& poly, InsideFn inside, CrossFn cross) {
  Polygon out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 4);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& cur = poly[i];
    const Vec2& prev = poly[(i + n - 1) % n];
    const bool cur_in = inside(cur);
    const bool prev_in = inside(prev);
    if (cur_in) {
      if (!prev_in) out.push_back(cross(prev, cur));
      out.push_back(cur);
    } else if (prev_in) {
      out.push_back(cross(prev, cur));
    }
  }
  return out;
}

Vec2 cross_at_x(const Vec2& a, const Vec2& b, double x) {
  const double t = (x - a.x()) / (b.x() - a.x());
  return {x, a.y() + t * (b.y() - a.y())};
}

Vec2 cross_at_y(const Vec2& a, const Vec2& b, double y) {
  const double t = (y - a.y()) / (b.y() - a.y());
  return {a.x() + t * (b.x() - a.x()), y};
}

}  // namespace

Polygon clip_polygon_to_rect(const Polygon& poly, const Rect& rect) {
  Polygon p = poly;
  p = clip_half_plane(
      p, [&](const Vec2& v) { return v.x() >= rect.min_x; },
      [&](const Vec2& a, const Vec2& b) { return cross_at_x(a, b, rect.min_x); });
  p = clip_half_plane(
      p, [&](const Vec2& v) { return v.x() <= rect.max_x; },
      [&](const Vec2& a, const Vec2& b) { return cross_at_x(a, b, rect.max_x); });
  p = clip_half_plane(
      p, [&](const Vec2& v) { return v.y() >= rect.min_y; },
      [&](const Vec2& a, const Vec2& b) { return cross_at_y(a, b, rect.min_y); });
  p = clip_half_plane(
      p, [&](const Vec2& v) { return v.y() <= rect.max_y; },
      [&](const Vec2& a, const Vec2& b) { return cross_at_y(a, b, rect.max_y); });
  return p;
}

double polygon_rect_overlap_area(const Polygon& poly, const Rect& rect) {
  return polygon_area(clip_polygon_to_rect(poly, rect));
}

}  // namespace semnav
