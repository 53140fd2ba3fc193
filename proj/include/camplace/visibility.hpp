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

// Constrained coverage relation between wall samples (rows) and camera
// candidates (columns).

#ifndef CAMPLACE_VISIBILITY_HPP_
#define CAMPLACE_VISIBILITY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "camplace/geometry.hpp"
#include "camplace/sampling.hpp"

namespace camplace {

/// Angles are compared with this slack (degrees) so that exactly-on-bound
/// configurations are accepted despite rounding in atan2.
inline constexpr double kAngleTolDeg = 1e-9;

/// Per-pair tests. Bounds are inclusive; a missing bound means unbounded.
struct Constraints {
  double d_min = 0.0;
  std::optional<double> d_max;
  std::optional<double> theta_max_deg;

  /// Throws kConfig unless 0 <= d_min < d_max and 0 < theta_max <= 90.
  void validate() const;
};

/// Angle in degrees between the wall normal at b and the direction from b
/// toward the camera.
double incidence_angle_deg(const BoundaryPoint& b, Point2 camera);

/// Range and angle tests only.
bool within_constraints(const BoundaryPoint& b, Point2 camera, const Constraints& k);

bool pair_visible(const BoundaryPoint& b, const CandidateSite& c, const VisibilityPolygon& vp,
                  const Constraints& k);

/// Sorted boundary indices covered by a camera at vp.viewpoint().
std::vector<Index> covered_boundary(const VisibilityPolygon& vp,
                                    std::span<const BoundaryPoint> boundary,
                                    const Constraints& k);

/// Sparse boolean matrix stored both by row and by column.
class VisibilityMatrix {
 public:
  VisibilityMatrix() = default;

  /// cols[c] must be sorted and hold indices < n_boundary.
  static VisibilityMatrix from_columns(std::size_t n_boundary,
                                       std::vector<std::vector<Index>> cols);
  static VisibilityMatrix from_rows(std::size_t n_candidates,
                                    std::vector<std::vector<Index>> rows);

  std::size_t n_boundary() const { return rows_.size(); }
  std::size_t n_candidates() const { return cols_.size(); }
  std::size_t pair_count() const { return pair_count_; }
  std::span<const Index> row(std::size_t b) const { return rows_[b]; }
  std::span<const Index> col(std::size_t c) const { return cols_[c]; }
  bool contains(std::size_t b, std::size_t c) const;

  friend bool operator==(const VisibilityMatrix&, const VisibilityMatrix&) = default;

 private:
  std::vector<std::vector<Index>> rows_;
  std::vector<std::vector<Index>> cols_;
  std::size_t pair_count_ = 0;
};

struct BuildOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// One visibility polygon per candidate, then that candidate's column.
/// Output does not depend on the thread count. A geometry failure is
/// rethrown with the candidate index in its message.
VisibilityMatrix build_matrix(std::span<const BoundaryPoint> boundary,
                              std::span<const CandidateSite> candidates, const Floorplan& f,
                              const Constraints& k, const BuildOptions& options = {});

/// Visibility polygon clipped to the d_max disc, as a closed ring around the
/// viewpoint. Arcs are flattened to at most `max_arc_step_deg` per vertex.
Ring coverage_region(const VisibilityPolygon& vp, const Constraints& k,
                     double max_arc_step_deg = 2.0);

}  // namespace camplace

#endif  // CAMPLACE_VISIBILITY_HPP_
