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

#include "camplace/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "camplace/error.hpp"

namespace camplace {
namespace {

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Error geometry_error(const std::string& message) {
  return Error(ErrorCode::kInvalidGeometry, message);
}

std::string ring_name(std::size_t ring) {
  return ring == 0 ? std::string("outer ring")
                   : "hole " + std::to_string(ring - 1);
}

// Drops repeated vertices and merges collinear neighbours. A vertex where the
// ring folds back onto itself is a zero-width spike and therefore
// self-intersecting.
Ring clean_ring(Ring ring, const std::string& name) {
  for (const Point2& p : ring) {
    if (!finite(p)) throw geometry_error(name + " has a non-finite vertex");
  }
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size() && ring.size() >= 3; ++i) {
      const Point2 prev = ring[(i + ring.size() - 1) % ring.size()];
      const Point2 cur = ring[i];
      const Point2 next = ring[(i + 1) % ring.size()];
      if (distance(prev, cur) <= kGeomEps) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (distance(prev, next) <= kGeomEps) {
        throw geometry_error(name + " self-intersects (zero-width spike)");
      }
      if (point_segment_distance(cur, Segment{prev, next}) <= kGeomEps) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (std::abs(cross(next - prev, cur - prev)) <= kGeomEps * distance(prev, next)) {
        throw geometry_error(name + " self-intersects (zero-width spike)");
      }
    }
  }
  if (ring.size() < 3) throw geometry_error(name + " is degenerate (fewer than 3 vertices)");
  return ring;
}

bool ring_is_simple(const Ring& ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Segment si{ring[i], ring[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Segment sj{ring[j], ring[(j + 1) % n]};
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Neighbours share exactly one endpoint; anything more is an overlap.
        const Point2 other_i = j == i + 1 ? si.a : si.b;
        const Point2 other_j = j == i + 1 ? sj.b : sj.a;
        if (point_segment_distance(other_i, sj) <= kGeomEps ||
            point_segment_distance(other_j, si) <= kGeomEps) {
          return false;
        }
        continue;
      }
      if (segments_intersect(si, sj) != Intersection::kNone) return false;
    }
  }
  return true;
}

// Strict even-odd containment for a single ring; callers handle the boundary.
bool inside_ring(Point2 p, const Ring& ring) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[j];
    const Point2 b = ring[i];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool rings_touch(const Ring& r1, const Ring& r2) {
  for (std::size_t i = 0; i < r1.size(); ++i) {
    const Segment s1{r1[i], r1[(i + 1) % r1.size()]};
    for (std::size_t j = 0; j < r2.size(); ++j) {
      const Segment s2{r2[j], r2[(j + 1) % r2.size()]};
      if (segments_intersect(s1, s2) != Intersection::kNone) return true;
    }
  }
  return false;
}

}  // namespace

Segment make_segment(Point2 a, Point2 b) {
  if (!finite(a) || !finite(b)) throw geometry_error("segment endpoint is not finite");
  if (distance(a, b) <= kGeomEps) throw geometry_error("segment endpoints coincide");
  return Segment{a, b};
}

double signed_area(std::span<const Point2> ring) {
  if (ring.size() < 3) throw geometry_error("ring needs at least 3 vertices");
  double twice = 0.0;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    twice += cross(ring[j], ring[i]);
  }
  return 0.5 * twice;
}

int orientation(Point2 a, Point2 b, Point2 c) {
  const Point2 ab = b - a;
  const double len = norm(ab);
  const double side = len > 0.0 ? cross(ab, c - a) / len : 0.0;
  if (side > kGeomEps) return 1;
  if (side < -kGeomEps) return -1;
  return 0;
}

Intersection segments_intersect(const Segment& s1, const Segment& s2) {
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return Intersection::kProper;
  if (point_segment_distance(s2.a, s1) <= kGeomEps ||
      point_segment_distance(s2.b, s1) <= kGeomEps ||
      point_segment_distance(s1.a, s2) <= kGeomEps ||
      point_segment_distance(s1.b, s2) <= kGeomEps) {
    return Intersection::kTouching;
  }
  return Intersection::kNone;
}

double point_segment_distance(Point2 p, const Segment& s) {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, s.a + t * d);
}

Floorplan Floorplan::create(Ring outer, std::vector<Ring> holes,
                            std::vector<std::string>* warnings) {
  Floorplan f;
  f.outer_ = clean_ring(std::move(outer), ring_name(0));
  if (!ring_is_simple(f.outer_)) throw geometry_error("outer ring self-intersects");
  double outer_area = signed_area(f.outer_);
  if (std::abs(outer_area) <= kGeomEps) throw geometry_error("outer ring has zero area");
  if (outer_area < 0.0) {
    std::reverse(f.outer_.begin(), f.outer_.end());
    outer_area = -outer_area;
    if (warnings) warnings->push_back("outer ring was clockwise; reversed to counter-clockwise");
  }

  for (std::size_t k = 0; k < holes.size(); ++k) {
    Ring hole = clean_ring(std::move(holes[k]), ring_name(k + 1));
    if (!ring_is_simple(hole)) throw geometry_error(ring_name(k + 1) + " self-intersects");
    const double a = signed_area(hole);
    if (std::abs(a) <= kGeomEps) throw geometry_error(ring_name(k + 1) + " has zero area");
    if (a > 0.0) {
      std::reverse(hole.begin(), hole.end());
      if (warnings) {
        warnings->push_back(ring_name(k + 1) + " was counter-clockwise; reversed to clockwise");
      }
    }
    if (rings_touch(hole, f.outer_) ||
        !std::all_of(hole.begin(), hole.end(),
                     [&](Point2 p) { return inside_ring(p, f.outer_); })) {
      throw geometry_error("hole not contained (hole " + std::to_string(k) + ")");
    }
    for (std::size_t m = 0; m < f.holes_.size(); ++m) {
      if (rings_touch(hole, f.holes_[m]) || inside_ring(hole[0], f.holes_[m]) ||
          inside_ring(f.holes_[m][0], hole)) {
        throw geometry_error("holes overlap (holes " + std::to_string(m) + " and " +
                             std::to_string(k) + ")");
      }
    }
    f.holes_.push_back(std::move(hole));
  }

  auto add_ring = [&f](const Ring& ring, std::size_t id) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      f.walls_.push_back(Segment{ring[i], ring[(i + 1) % ring.size()]});
      f.wall_ring_.push_back(id);
      f.vertices_.push_back(ring[i]);
    }
  };
  add_ring(f.outer_, 0);
  f.area_ = outer_area;
  for (std::size_t k = 0; k < f.holes_.size(); ++k) {
    add_ring(f.holes_[k], k + 1);
    f.area_ += signed_area(f.holes_[k]);
  }

  f.bounds_ = {f.outer_[0], f.outer_[0]};
  for (const Point2& p : f.outer_) {
    f.bounds_.min = {std::min(f.bounds_.min.x, p.x), std::min(f.bounds_.min.y, p.y)};
    f.bounds_.max = {std::max(f.bounds_.max.x, p.x), std::max(f.bounds_.max.y, p.y)};
  }
  return f;
}

double Floorplan::perimeter() const {
  double total = 0.0;
  for (const Segment& s : walls_) total += s.length();
  return total;
}

bool Floorplan::is_convex() const {
  if (!holes_.empty()) return false;
  const std::size_t n = outer_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(outer_[i], outer_[(i + 1) % n], outer_[(i + 2) % n]) <= 0) return false;
  }
  return true;
}

Location point_in_floorplan(Point2 p, const Floorplan& f) {
  if (wall_clearance(p, f) <= kGeomEps) return Location::kOnBoundary;
  if (!inside_ring(p, f.outer())) return Location::kOutside;
  for (const Ring& hole : f.holes()) {
    if (inside_ring(p, hole)) return Location::kOutside;
  }
  return Location::kInside;
}

double wall_clearance(Point2 p, const Floorplan& f) {
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& s : f.walls()) best = std::min(best, point_segment_distance(p, s));
  return best;
}

}  // namespace camplace
