// Copyright 2026 The camplace Authors
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

// 2D primitives, floorplan validation and the angular-sweep visibility
// polygon. Everything here is immutable after construction and safe to share
// between threads.

#ifndef CAMPLACE_GEOMETRY_HPP_
#define CAMPLACE_GEOMETRY_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace camplace {

/// Distance tolerance (meters) for orientation and containment predicates.
inline constexpr double kGeomEps = 1e-9;
/// Angular offset (radians) of the auxiliary probe rays next to sweep events.
inline constexpr double kAngleEps = 1e-7;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

struct Segment {
  Point2 a;
  Point2 b;

  double length() const { return distance(a, b); }
};

/// Builds a segment; throws kInvalidGeometry when the endpoints coincide
/// within kGeomEps or are not finite.
Segment make_segment(Point2 a, Point2 b);

using Ring = std::vector<Point2>;

struct Box {
  Point2 min;
  Point2 max;
};

enum class Location { kInside, kOnBoundary, kOutside };
enum class Intersection { kNone, kTouching, kProper };

/// Shoelace area; positive for counter-clockwise rings. Throws
/// kInvalidGeometry for fewer than three vertices.
double signed_area(std::span<const Point2> ring);

/// Orientation of c relative to the directed line a->b, with a kGeomEps
/// distance band mapped to 0.
int orientation(Point2 a, Point2 b, Point2 c);

Intersection segments_intersect(const Segment& s1, const Segment& s2);

double point_segment_distance(Point2 p, const Segment& s);

/// Validated indoor environment: one counter-clockwise outer ring plus
/// clockwise holes. Walls are the ring edges, outer ring first.
class Floorplan {
 public:
  /// Validates and normalizes the rings: drops repeated vertices, merges
  /// collinear edges and fixes orientation. Orientation fixes are reported
  /// through `warnings` when given; every other violation throws
  /// kInvalidGeometry with a message naming the broken invariant.
  static Floorplan create(Ring outer, std::vector<Ring> holes = {},
                          std::vector<std::string>* warnings = nullptr);

  const Ring& outer() const { return outer_; }
  const std::vector<Ring>& holes() const { return holes_; }
  std::span<const Segment> walls() const { return walls_; }
  /// 0 for the outer ring, k + 1 for hole k.
  std::size_t wall_ring(std::size_t wall) const { return wall_ring_[wall]; }
  std::span<const Point2> vertices() const { return vertices_; }
  const Box& bounds() const { return bounds_; }
  double area() const { return area_; }
  double perimeter() const;
  /// True when there are no holes and every outer corner turns left.
  bool is_convex() const;

 private:
  Floorplan() = default;

  Ring outer_;
  std::vector<Ring> holes_;
  std::vector<Segment> walls_;
  std::vector<std::size_t> wall_ring_;
  std::vector<Point2> vertices_;
  Box bounds_;
  double area_ = 0.0;
};

Location point_in_floorplan(Point2 p, const Floorplan& f);

/// Distance from p to the nearest wall.
double wall_clearance(Point2 p, const Floorplan& f);

/// One fan triangle (viewpoint, near, far) in counter-clockwise order; `near`
/// lies on the ray at `angle_begin`, `far` on the ray at `angle_end`.
struct FanTriangle {
  Point2 near;
  Point2 far;
  std::size_t wall = 0;
  double angle_begin = 0.0;
  double angle_end = 0.0;
};

/// The region of the floorplan visible from a viewpoint as a triangle fan
/// sorted by angle. angle_begin of the first triangle is in [-pi, pi]; the
/// last triangle may extend past pi.
class VisibilityPolygon {
 public:
  VisibilityPolygon(Point2 viewpoint, std::vector<FanTriangle> fan)
      : viewpoint_(viewpoint), fan_(std::move(fan)) {}

  Point2 viewpoint() const { return viewpoint_; }
  std::span<const FanTriangle> fan() const { return fan_; }
  double area() const;
  /// Boundary ring of the fan, counter-clockwise, consecutive duplicates
  /// removed.
  Ring ring() const;

 private:
  Point2 viewpoint_;
  std::vector<FanTriangle> fan_;
};

/// Angular sweep over all wall vertices. Throws kPlacementInfeasible when the
/// viewpoint is not strictly inside the floorplan.
VisibilityPolygon visibility_polygon(Point2 viewpoint, const Floorplan& f);

/// True when target lies in (or within kGeomEps of) a fan triangle.
bool sees(Point2 viewpoint, Point2 target, const VisibilityPolygon& vp);

}  // namespace camplace

#endif  // CAMPLACE_GEOMETRY_HPP_
