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

#include "camplace/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "camplace/error.hpp"

namespace camplace {
namespace {

Error config_error(const std::string& message) { return Error(ErrorCode::kConfig, message); }

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void SamplingConfig::validate() const {
  if (!positive(boundary_spacing)) throw config_error("boundary_spacing must be > 0");
  if (!positive(grid_spacing)) throw config_error("grid_spacing must be > 0");
  if (!std::isfinite(d_min) || d_min < 0.0) throw config_error("d_min must be >= 0");
  if (!std::isfinite(fov_y_deg) || fov_y_deg <= 0.0 || fov_y_deg >= 180.0) {
    throw config_error("fov_y must be in (0, 180) degrees");
  }
  if (!std::isfinite(camera_height_to_floor) || camera_height_to_floor < 0.0 ||
      !std::isfinite(camera_height_to_ceiling) || camera_height_to_ceiling < 0.0) {
    throw config_error("camera heights must be >= 0");
  }
}

double standoff_from_fov(double fov_y_deg, double h_floor, double h_ceiling) {
  if (!std::isfinite(fov_y_deg) || fov_y_deg <= 0.0 || fov_y_deg >= 180.0) {
    throw config_error("fov_y must be in (0, 180) degrees");
  }
  if (!(h_floor >= 0.0) || !(h_ceiling >= 0.0)) throw config_error("camera heights must be >= 0");
  const double half = 0.5 * fov_y_deg * std::numbers::pi / 180.0;
  return std::max(h_floor, h_ceiling) / std::tan(half);
}

double effective_d_min(const SamplingConfig& config) {
  config.validate();
  return std::max(standoff_from_fov(config.fov_y_deg, config.camera_height_to_floor,
                                    config.camera_height_to_ceiling),
                  config.d_min);
}

std::vector<BoundaryPoint> sample_boundary(const Floorplan& f, double spacing) {
  if (!positive(spacing)) throw config_error("boundary_spacing must be > 0");
  std::vector<BoundaryPoint> points;
  const std::span<const Segment> walls = f.walls();
  for (std::size_t w = 0; w < walls.size(); ++w) {
    const Segment& s = walls[w];
    const double len = s.length();
    const auto parts = std::max<long long>(1, std::llround(len / spacing));
    const Point2 dir = s.b - s.a;
    // Rings are oriented so the interior is always on the left of a wall.
    const Point2 normal{-dir.y / len, dir.x / len};
    for (long long k = 0; k < parts; ++k) {
      const double t = (static_cast<double>(k) + 0.5) / static_cast<double>(parts);
      points.push_back(
          {static_cast<Index>(points.size()), s.a + t * dir, normal, w});
    }
  }
  return points;
}

std::vector<CandidateSite> sample_interior(const Floorplan& f, double grid_spacing, double d_min) {
  if (!positive(grid_spacing)) throw config_error("grid_spacing must be > 0");
  if (!std::isfinite(d_min) || d_min < 0.0) throw config_error("d_min must be >= 0");
  const Box& box = f.bounds();
  const auto nx = static_cast<long long>(std::floor((box.max.x - box.min.x) / grid_spacing + 1e-9));
  const auto ny = static_cast<long long>(std::floor((box.max.y - box.min.y) / grid_spacing + 1e-9));

  std::vector<CandidateSite> sites;
  for (long long j = 0; j <= ny; ++j) {
    for (long long i = 0; i <= nx; ++i) {
      const Point2 p{box.min.x + static_cast<double>(i) * grid_spacing,
                     box.min.y + static_cast<double>(j) * grid_spacing};
      const double clearance = wall_clearance(p, f);
      if (clearance <= kGeomEps || clearance < d_min) continue;
      if (point_in_floorplan(p, f) != Location::kInside) continue;
      sites.push_back({static_cast<Index>(sites.size()), p, clearance});
    }
  }
  if (sites.empty()) {
    std::ostringstream msg;
    msg << "infeasible sampling: no grid point at spacing " << grid_spacing
        << " m has wall clearance >= " << d_min << " m";
    throw Error(ErrorCode::kInfeasibleSampling, msg.str());
  }
  return sites;
}

}  // namespace camplace
