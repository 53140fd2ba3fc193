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

#ifndef CAMPLACE_SAMPLING_HPP_
#define CAMPLACE_SAMPLING_HPP_

#include <cstdint>
#include <vector>

#include "camplace/geometry.hpp"

namespace camplace {

using Index = std::uint32_t;

/// A wall sample that has to be seen by at least one camera.
struct BoundaryPoint {
  Index index = 0;
  Point2 position;
  Point2 normal;  // unit, pointing into the floorplan
  std::size_t wall_id = 0;
};

/// A grid position where a camera may stand.
struct CandidateSite {
  Index index = 0;
  Point2 position;
  double clearance = 0.0;
};

struct SamplingConfig {
  double boundary_spacing = 0.25;
  double grid_spacing = 0.25;
  double d_min = 0.0;  // physical clearance, e.g. a tripod footprint
  double fov_y_deg = 150.0;
  double camera_height_to_floor = 1.5;
  double camera_height_to_ceiling = 1.3;

  /// Throws kConfig on non-positive spacings, a negative d_min or height, or
  /// a field of view outside (0, 180).
  void validate() const;
};

/// Closest distance to a wall at which a camera with vertical field of view
/// fov_y still sees each wall from floor to ceiling: cot(fov_y / 2) times the
/// larger of the two heights.
double standoff_from_fov(double fov_y_deg, double h_floor, double h_ceiling);

/// The larger of the field-of-view standoff and the configured clearance.
double effective_d_min(const SamplingConfig& config);

/// Splits every wall of length L into max(1, round(L / spacing)) equal parts
/// and places one point at the centre of each part. Outer-ring walls come
/// first, then hole walls, each in ring order.
std::vector<BoundaryPoint> sample_boundary(const Floorplan& f, double spacing);

/// Grid anchored at the bounding-box minimum corner, row-major from the
/// bottom row. Keeps points strictly inside with clearance >= d_min. Throws
/// kInfeasibleSampling when nothing survives.
std::vector<CandidateSite> sample_interior(const Floorplan& f, double grid_spacing, double d_min);

}  // namespace camplace

#endif  // CAMPLACE_SAMPLING_HPP_
