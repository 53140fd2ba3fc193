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

#include "camplace/visibility.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "camplace/error.hpp"

namespace camplace {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

}  // namespace

void Constraints::validate() const {
  if (!std::isfinite(d_min) || d_min < 0.0) throw Error(ErrorCode::kConfig, "d_min must be >= 0");
  if (d_max) {
    if (!std::isfinite(*d_max) || *d_max <= 0.0) {
      throw Error(ErrorCode::kConfig, "d_max must be a positive number");
    }
    if (!(d_min < *d_max)) throw Error(ErrorCode::kConfig, "d_min must be smaller than d_max");
  }
  if (theta_max_deg) {
    if (!std::isfinite(*theta_max_deg) || *theta_max_deg <= 0.0 || *theta_max_deg > 90.0) {
      throw Error(ErrorCode::kConfig, "theta_max must be in (0, 90] degrees");
    }
  }
}

double incidence_angle_deg(const BoundaryPoint& b, Point2 camera) {
  const Point2 u = camera - b.position;
  return std::atan2(std::abs(cross(b.normal, u)), dot(b.normal, u)) * kRadToDeg;
}

bool within_constraints(const BoundaryPoint& b, Point2 camera, const Constraints& k) {
  const double d = distance(b.position, camera);
  if (d < k.d_min - kGeomEps) return false;
  if (k.d_max && d > *k.d_max + kGeomEps) return false;
  if (k.theta_max_deg && incidence_angle_deg(b, camera) > *k.theta_max_deg + kAngleTolDeg) {
    return false;
  }
  return true;
}

bool pair_visible(const BoundaryPoint& b, const CandidateSite& c, const VisibilityPolygon& vp,
                  const Constraints& k) {
  return within_constraints(b, c.position, k) && sees(c.position, b.position, vp);
}

std::vector<Index> covered_boundary(const VisibilityPolygon& vp,
                                    std::span<const BoundaryPoint> boundary,
                                    const Constraints& k) {
  std::vector<Index> out;
  const Point2 camera = vp.viewpoint();
  for (const BoundaryPoint& b : boundary) {
    if (within_constraints(b, camera, k) && sees(camera, b.position, vp)) out.push_back(b.index);
  }
  return out;
}

VisibilityMatrix VisibilityMatrix::from_columns(std::size_t n_boundary,
                                                std::vector<std::vector<Index>> cols) {
  VisibilityMatrix m;
  m.rows_.resize(n_boundary);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!std::is_sorted(cols[c].begin(), cols[c].end()) ||
        std::adjacent_find(cols[c].begin(), cols[c].end()) != cols[c].end()) {
      throw Error(ErrorCode::kInvalidArgument, "matrix column is not strictly sorted");
    }
    for (Index b : cols[c]) {
      if (b >= n_boundary) throw Error(ErrorCode::kInvalidArgument, "boundary index out of range");
      m.rows_[b].push_back(static_cast<Index>(c));
    }
    m.pair_count_ += cols[c].size();
  }
  m.cols_ = std::move(cols);
  return m;
}

VisibilityMatrix VisibilityMatrix::from_rows(std::size_t n_candidates,
                                             std::vector<std::vector<Index>> rows) {
  std::vector<std::vector<Index>> cols(n_candidates);
  for (std::size_t b = 0; b < rows.size(); ++b) {
    std::sort(rows[b].begin(), rows[b].end());
    rows[b].erase(std::unique(rows[b].begin(), rows[b].end()), rows[b].end());
    for (Index c : rows[b]) {
      if (c >= n_candidates) {
        throw Error(ErrorCode::kInvalidArgument, "candidate index out of range");
      }
      cols[c].push_back(static_cast<Index>(b));
    }
  }
  return from_columns(rows.size(), std::move(cols));
}

bool VisibilityMatrix::contains(std::size_t b, std::size_t c) const {
  const auto& col = cols_[c];
  return std::binary_search(col.begin(), col.end(), static_cast<Index>(b));
}

VisibilityMatrix build_matrix(std::span<const BoundaryPoint> boundary,
                              std::span<const CandidateSite> candidates, const Floorplan& f,
                              const Constraints& k, const BuildOptions& options) {
  k.validate();
  std::vector<std::vector<Index>> cols(candidates.size());
  std::vector<std::exception_ptr> errors(candidates.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t c = next.fetch_add(1); c < candidates.size(); c = next.fetch_add(1)) {
      try {
        const VisibilityPolygon vp = visibility_polygon(candidates[c].position, f);
        cols[c] = covered_boundary(vp, boundary, k);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(candidates.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t c = 0; c < errors.size(); ++c) {
    if (!errors[c]) continue;
    try {
      std::rethrow_exception(errors[c]);
    } catch (const Error& e) {
      throw Error(e.code(), "candidate " + std::to_string(c) + ": " + e.what());
    }
  }
  return VisibilityMatrix::from_columns(boundary.size(), std::move(cols));
}

Ring coverage_region(const VisibilityPolygon& vp, const Constraints& k, double max_arc_step_deg) {
  const Point2 apex = vp.viewpoint();
  Ring out;
  auto push = [&out](Point2 p) {
    if (out.empty() || distance(out.back(), p) > kGeomEps) out.push_back(p);
  };
  const double step = std::max(max_arc_step_deg, 1e-3) / kRadToDeg;

  for (const FanTriangle& t : vp.fan()) {
    if (!k.d_max) {
      push(t.near);
      push(t.far);
      continue;
    }
    const double r = *k.d_max;
    // |near + s * e - apex|^2 = r^2
    const Point2 e = t.far - t.near;
    const Point2 w = t.near - apex;
    const double qa = dot(e, e);
    const double qb = 2.0 * dot(w, e);
    const double qc = dot(w, w) - r * r;
    std::vector<double> cuts{0.0};
    if (qa > 0.0) {
      const double disc = qb * qb - 4.0 * qa * qc;
      if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        for (double s : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)}) {
          if (s > 0.0 && s < 1.0) cuts.push_back(s);
        }
      }
    }
    cuts.push_back(1.0);

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Point2 p0 = t.near + cuts[i] * e;
      const Point2 p1 = t.near + cuts[i + 1] * e;
      const Point2 mid = t.near + (0.5 * (cuts[i] + cuts[i + 1])) * e;
      if (distance(mid, apex) <= r) {
        push(p0);
        push(p1);
        continue;
      }
      double a0 = std::atan2(p0.y - apex.y, p0.x - apex.x);
      double a1 = std::atan2(p1.y - apex.y, p1.x - apex.x);
      if (a1 < a0) a1 += 2.0 * std::numbers::pi;
      const int n = std::max(1, static_cast<int>(std::ceil((a1 - a0) / step)));
      for (int j = 0; j <= n; ++j) {
        const double a = a0 + (a1 - a0) * j / n;
        push(apex + r * Point2{std::cos(a), std::sin(a)});
      }
    }
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= kGeomEps) out.pop_back();
  return out;
}

}  // namespace camplace
