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

#include "camplace/planner.hpp"

#include <chrono>

#include "camplace/error.hpp"

namespace camplace {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Constraints effective_constraints(const SamplingConfig& sampling, const Constraints& requested) {
  Constraints k = requested;
  k.d_min = effective_d_min(sampling);
  k.validate();
  return k;
}

}  // namespace

PlanReport plan(const PlanRequest& req) {
  if (!(req.time_budget_s > 0.0)) throw Error(ErrorCode::kConfig, "time_budget_s must be > 0");
  const Floorplan& f = req.floorplan;
  PlanReport report;
  report.constraints = effective_constraints(req.sampling, req.constraints);
  report.walls.push_back(f.outer());
  for (const Ring& h : f.holes()) report.walls.push_back(h);

  report.boundary = sample_boundary(f, req.sampling.boundary_spacing);
  const std::vector<CandidateSite> candidates =
      sample_interior(f, req.sampling.grid_spacing, report.constraints.d_min);

  const auto build_start = Clock::now();
  BuildOptions build;
  build.threads = req.threads;
  CoverInstance inst = CoverInstance::from_matrix(
      build_matrix(report.boundary, candidates, f, report.constraints, build));
  report.stats.matrix_build_time_s = seconds_since(build_start);
  report.stats.n_boundary = inst.matrix.n_boundary();
  report.stats.n_candidates = inst.matrix.n_candidates();
  report.stats.pair_count = inst.matrix.pair_count();
  report.stats.effective_d_min = report.constraints.d_min;
  report.uncoverable = inst.uncoverable;

  report.solution = req.solver == SolverChoice::kGreedy ? solve_greedy(inst)
                                                        : solve_exact(inst, req.time_budget_s);
  report.stats.solve_time_s = report.solution.diagnostics.solve_time_s;
  if (report.solution.status == SolveStatus::kInfeasible) {
    throw Error(ErrorCode::kSolverInfeasible,
                "solver infeasible: no candidate site can cover the boundary");
  }

  report.cover = verify_cover(inst.matrix, report.solution.chosen);
  if (report.cover.missed != inst.uncoverable) {
    throw Error(ErrorCode::kInternal,
                "cover check failed: solution leaves " + std::to_string(report.cover.missed.size()) +
                    " boundary points uncovered, expected " +
                    std::to_string(inst.uncoverable.size()));
  }

  for (Index c : report.solution.chosen) {
    const Point2 pos = candidates[c].position;
    report.chosen_positions.push_back(pos);
    const VisibilityPolygon vp = visibility_polygon(pos, f);
    report.coverage.push_back({c, pos, coverage_region(vp, report.constraints)});
  }
  return report;
}

VerifyResult verify_placements(const Floorplan& f, const SamplingConfig& sampling,
                               const Constraints& constraints,
                               const std::vector<Point2>& placements) {
  VerifyResult result;
  result.constraints = effective_constraints(sampling, constraints);
  result.boundary = sample_boundary(f, sampling.boundary_spacing);
  result.placements = placements;

  std::vector<std::vector<Index>> cols;
  for (std::size_t i = 0; i < placements.size(); ++i) {
    const Point2 p = placements[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) ||
        point_in_floorplan(p, f) != Location::kInside) {
      throw Error(ErrorCode::kPlacementInfeasible,
                  "viewpoint outside floorplan (placement " + std::to_string(i) + ")");
    }
    cols.push_back(covered_boundary(visibility_polygon(p, f), result.boundary, result.constraints));
  }
  result.per_placement = cols;
  const VisibilityMatrix m = VisibilityMatrix::from_columns(result.boundary.size(), std::move(cols));
  std::vector<Index> all(placements.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
  result.cover = verify_cover(m, all);
  return result;
}

CoverageRegion visibility_region(const Floorplan& f, Point2 point, const Constraints& constraints) {
  constraints.validate();
  if (!std::isfinite(point.x) || !std::isfinite(point.y) ||
      point_in_floorplan(point, f) != Location::kInside) {
    throw Error(ErrorCode::kPlacementInfeasible, "viewpoint outside floorplan");
  }
  const VisibilityPolygon vp = visibility_polygon(point, f);
  return {0, point, coverage_region(vp, constraints)};
}

}  // namespace camplace
