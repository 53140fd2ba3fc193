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

// Independent reference implementations used to check the library. Nothing
// here calls into the geometry, visibility or solver code; only the input
// data types are shared.

#ifndef CAMPLACE_TESTS_ORACLES_HPP_
#define CAMPLACE_TESTS_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "camplace/geometry.hpp"
#include "camplace/sampling.hpp"

namespace oracle {

using camplace::Floorplan;
using camplace::Point2;

/// Area visible from v, by casting `rays` uniformly spaced rays (offset by
/// half a step) and summing the sectors up to the nearest wall hit.
double ray_cast_area(Point2 v, const Floorplan& f, std::size_t rays = 100000);

/// Nearest wall hit along the ray from v in direction theta, or nullopt.
std::optional<double> ray_cast_distance(Point2 v, double theta, const Floorplan& f);

/// Direct occlusion test: the closed segment p-q crosses no wall properly
/// and none of its pieces between wall contacts leaves the floorplan.
bool segment_visible(Point2 p, Point2 q, const Floorplan& f);

/// True when moving either endpoint by `delta` along an axis (staying within
/// the floorplan) changes the answer of segment_visible, i.e. the pair sits
/// in the tolerance band of a visibility edge.
bool near_visibility_edge(Point2 p, Point2 q, const Floorplan& f, double delta = 1e-6);

/// Even-odd containment with an explicit on-wall band.
enum class Where { kInside, kOnWall, kOutside };
Where locate(Point2 p, const Floorplan& f, double band = 1e-9);

long double distance_to_walls(Point2 p, const Floorplan& f);

/// Angle in degrees between a boundary normal and the direction to camera,
/// via acos of the normalized dot product.
double incidence_deg(const camplace::BoundaryPoint& b, Point2 camera);

struct PairLimits {
  double d_min = 0.0;
  std::optional<double> d_max;
  std::optional<double> theta_max_deg;
};

/// Column-major coverage sets from testing every pair directly.
std::vector<std::vector<camplace::Index>> brute_force_columns(
    const std::vector<camplace::BoundaryPoint>& boundary,
    const std::vector<camplace::CandidateSite>& candidates, const Floorplan& f,
    const PairLimits& limits);

/// cot(fov/2) * max(h_floor, h_ceiling) via cos/sin in long double.
long double standoff(long double fov_y_deg, long double h_floor, long double h_ceiling);

/// Smallest cover size by exhaustive search; cols[c] lists covered rows.
/// Rows no column covers are ignored.
std::size_t min_cover_size(std::size_t n_rows, const std::vector<std::vector<camplace::Index>>& cols);

}  // namespace oracle

#endif  // CAMPLACE_TESTS_ORACLES_HPP_
