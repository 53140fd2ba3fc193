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

// End-to-end planning pipeline and the JSON / SVG documents around it.

#ifndef CAMPLACE_PLANNER_HPP_
#define CAMPLACE_PLANNER_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "camplace/geometry.hpp"
#include "camplace/sampling.hpp"
#include "camplace/solver.hpp"
#include "camplace/visibility.hpp"

namespace camplace {

inline constexpr int kDocumentVersion = 1;

enum class SolverChoice { kGreedy, kExact };

struct PlanRequest {
  Floorplan floorplan;
  SamplingConfig sampling;
  /// d_min here is ignored; the pipeline uses effective_d_min(sampling).
  Constraints constraints;
  SolverChoice solver = SolverChoice::kExact;
  double time_budget_s = 60.0;
  unsigned threads = 0;
};

struct PlanStats {
  std::size_t n_boundary = 0;
  std::size_t n_candidates = 0;
  std::size_t pair_count = 0;
  double effective_d_min = 0.0;
  double matrix_build_time_s = 0.0;
  double solve_time_s = 0.0;
};

struct CoverageRegion {
  Index candidate = 0;
  Point2 position;
  Ring polygon;
};

struct PlanReport {
  Solution solution;
  PlanStats stats;
  Constraints constraints;  // with the effective d_min
  std::vector<BoundaryPoint> boundary;
  std::vector<Point2> chosen_positions;
  std::vector<Index> uncoverable;
  CoverCheck cover;
  std::vector<CoverageRegion> coverage;
  std::vector<Ring> walls;  // outer ring then holes, for rendering
};

/// validate -> d_min -> sample -> matrix -> solve -> verify -> report. Throws
/// kInternal when the independent cover check disagrees with the solver and
/// kSolverInfeasible when no cover exists.
PlanReport plan(const PlanRequest& req);

/// Manual placements scored against the same sampling and constraints.
struct VerifyResult {
  std::vector<BoundaryPoint> boundary;
  std::vector<Point2> placements;
  std::vector<std::vector<Index>> per_placement;
  CoverCheck cover;
  Constraints constraints;
};

/// Throws kPlacementInfeasible ("viewpoint outside floorplan") for a
/// placement that is not strictly inside.
VerifyResult verify_placements(const Floorplan& f, const SamplingConfig& sampling,
                               const Constraints& constraints,
                               const std::vector<Point2>& placements);

/// Visibility polygon of one point clipped to the range limit.
CoverageRegion visibility_region(const Floorplan& f, Point2 point, const Constraints& constraints);

// ---- documents ----

Floorplan parse_floorplan(const nlohmann::json& doc, std::vector<std::string>* warnings = nullptr);
/// Parses text; syntax errors report line and column.
Floorplan parse_floorplan_text(std::string_view text,
                               std::vector<std::string>* warnings = nullptr);
Floorplan load_floorplan(const std::filesystem::path& path,
                         std::vector<std::string>* warnings = nullptr);
nlohmann::json floorplan_document(const Floorplan& f);

/// Parses JSON text, mapping syntax errors to kParse with line/column.
nlohmann::json parse_json_text(std::string_view text, std::string_view what);

SamplingConfig parse_sampling(const nlohmann::json& doc);
Constraints parse_constraints(const nlohmann::json& doc);
PlanRequest parse_plan_request(const nlohmann::json& doc);
nlohmann::json plan_request_document(const PlanRequest& req);

/// The solution document; timing lives under "timing" and is left out when
/// include_timing is false.
nlohmann::json solution_document(const PlanReport& report, bool include_timing = true);
/// Solution document plus the geometry a client needs to draw the result.
nlohmann::json report_document(const PlanReport& report);

struct SolutionSummary {
  std::vector<Point2> chosen;
  std::vector<Index> chosen_indices;
  std::size_t objective = 0;
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<Index> missed_boundary;
};
SolutionSummary parse_solution_document(const nlohmann::json& doc);

/// Accepts {"placements": [[x,y],...]} or a solution document ("chosen").
std::vector<Point2> parse_placements(const nlohmann::json& doc);

nlohmann::json verify_document(const VerifyResult& result);
nlohmann::json visibility_document(const CoverageRegion& region);

std::string render_svg(const PlanReport& report);

struct ExportTargets {
  std::optional<std::filesystem::path> solution;
  std::optional<std::filesystem::path> svg;
};
/// Throws kIo naming the path on write failure.
void export_report(const PlanReport& report, const ExportTargets& targets);

}  // namespace camplace

#endif  // CAMPLACE_PLANNER_HPP_
