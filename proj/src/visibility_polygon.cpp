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

// Rotational sweep around the viewpoint. Every wall vertex defines an event
// direction; between two consecutive events the nearest wall cannot change
// (walls only meet at endpoints), so one probe ray just past the lower event
// identifies it and the fan triangle is cut exactly from that wall's line.

#include <algorithm>
#include <limits>
#include <numbers>

#include "camplace/error.hpp"
#include "camplace/geometry.hpp"

namespace camplace {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Event {
  double angle;
  Point2 dir;
};

// Index of the wall first hit by the ray origin + t * dir, t > 0.
std::size_t nearest_wall(Point2 origin, Point2 dir, std::span<const Segment> walls) {
  double best_t = std::numeric_limits<double>::infinity();
  std::size_t best = walls.size();
  for (std::size_t w = 0; w < walls.size(); ++w) {
    const Point2 e = walls[w].b - walls[w].a;
    const double denom = cross(dir, e);
    if (denom == 0.0) continue;
    const Point2 ao = walls[w].a - origin;
    const double t = cross(ao, e) / denom;
    const double s = cross(ao, dir) / denom;
    if (t <= 0.0 || s < 0.0 || s > 1.0) continue;
    if (t < best_t) {
      best_t = t;
      best = w;
    }
  }
  return best;
}

// Point where the ray origin + t * dir meets the wall, clamped onto the wall.
Point2 cut_wall(Point2 origin, Point2 dir, const Segment& wall) {
  const Point2 e = wall.b - wall.a;
  const double denom = cross(dir, e);
  if (denom == 0.0) {
    return distance(origin, wall.a) < distance(origin, wall.b) ? wall.a : wall.b;
  }
  const double s = std::clamp(cross(wall.a - origin, dir) / denom, 0.0, 1.0);
  return wall.a + s * e;
}

bool in_triangle(Point2 apex, const FanTriangle& tri, Point2 p) {
  const Point2 corners[3] = {apex, tri.near, tri.far};
  for (int i = 0; i < 3; ++i) {
    const Point2 a = corners[i];
    const Point2 b = corners[(i + 1) % 3];
    const double len = distance(a, b);
    if (len <= kGeomEps) continue;
    if (cross(b - a, p - a) / len < -kGeomEps) return false;
  }
  return true;
}

}  // namespace

double VisibilityPolygon::area() const {
  double total = 0.0;
  for (const FanTriangle& t : fan_) {
    total += 0.5 * cross(t.near - viewpoint_, t.far - viewpoint_);
  }
  return total;
}

Ring VisibilityPolygon::ring() const {
  Ring out;
  auto push = [&out](Point2 p) {
    if (out.empty() || distance(out.back(), p) > kGeomEps) out.push_back(p);
  };
  for (const FanTriangle& t : fan_) {
    push(t.near);
    push(t.far);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= kGeomEps) out.pop_back();
  return out;
}

VisibilityPolygon visibility_polygon(Point2 viewpoint, const Floorplan& f) {
  const Location loc = point_in_floorplan(viewpoint, f);
  if (loc == Location::kOutside) {
    throw Error(ErrorCode::kPlacementInfeasible, "viewpoint outside floorplan");
  }
  if (loc == Location::kOnBoundary) {
    throw Error(ErrorCode::kPlacementInfeasible, "viewpoint on floorplan boundary");
  }

  std::vector<Event> events;
  events.reserve(f.vertices().size());
  for (const Point2& v : f.vertices()) {
    const Point2 d = v - viewpoint;
    events.push_back({std::atan2(d.y, d.x), d});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.angle < b.angle; });

  // Vertices seen along the same direction produce a single event.
  std::vector<Event> unique;
  unique.reserve(events.size());
  for (const Event& e : events) {
    if (!unique.empty()) {
      const Event& last = unique.back();
      const bool same_dir =
          std::abs(cross(last.dir, e.dir)) <= 1e-12 * norm(last.dir) * norm(e.dir) &&
          dot(last.dir, e.dir) > 0.0;
      if (same_dir) continue;
    }
    unique.push_back(e);
  }
  if (unique.size() > 1) {
    const Event& first = unique.front();
    const Event& last = unique.back();
    if (std::abs(cross(last.dir, first.dir)) <= 1e-12 * norm(last.dir) * norm(first.dir) &&
        dot(last.dir, first.dir) > 0.0) {
      unique.pop_back();
    }
  }

  const std::span<const Segment> walls = f.walls();
  std::vector<FanTriangle> fan;
  fan.reserve(unique.size());
  const std::size_t m = unique.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Event& lo = unique[i];
    const Event& hi = unique[(i + 1) % m];
    double gap = hi.angle - lo.angle;
    if (i + 1 == m) gap += kTwoPi;
    if (gap <= 0.0) continue;
    const double probe_angle = lo.angle + std::min(kAngleEps, 0.5 * gap);
    const Point2 probe{std::cos(probe_angle), std::sin(probe_angle)};
    const std::size_t w = nearest_wall(viewpoint, probe, walls);
    if (w == walls.size()) {
      throw Error(ErrorCode::kInternal, "visibility sweep found no wall along a probe ray");
    }
    fan.push_back({cut_wall(viewpoint, lo.dir, walls[w]), cut_wall(viewpoint, hi.dir, walls[w]),
                   w, lo.angle, lo.angle + gap});
  }
  return VisibilityPolygon(viewpoint, std::move(fan));
}

bool sees(Point2 viewpoint, Point2 target, const VisibilityPolygon& vp) {
  const Point2 d = target - viewpoint;
  if (norm(d) <= kGeomEps) return true;
  const std::span<const FanTriangle> fan = vp.fan();
  if (fan.empty()) return false;
  double angle = std::atan2(d.y, d.x);
  if (angle < fan.front().angle_begin) angle += kTwoPi;
  const auto it = std::upper_bound(fan.begin(), fan.end(), angle,
                                   [](double a, const FanTriangle& t) { return a < t.angle_begin; });
  const std::size_t n = fan.size();
  const std::size_t hit = it == fan.begin() ? n - 1 : static_cast<std::size_t>(it - fan.begin()) - 1;
  // Neighbours too: targets on an event ray may round to either side of it.
  for (std::size_t k : {hit, (hit + 1) % n, (hit + n - 1) % n}) {
    if (in_triangle(viewpoint, fan[k], target)) return true;
  }
  return false;
}

}  // namespace camplace
