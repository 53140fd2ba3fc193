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

// JSON documents: floorplans, plan requests, solutions and the service
// payloads. Unbounded constraints are encoded as null.

#include <fstream>
#include <sstream>

#include "camplace/error.hpp"
#include "camplace/planner.hpp"

namespace camplace {
namespace {

using nlohmann::json;

Error parse_error(const std::string& where, const std::string& what) {
  return Error(ErrorCode::kParse, where + ": " + what);
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

void require_object(const json& doc, const std::string& where) {
  if (!doc.is_object()) throw parse_error(where, "expected an object");
}

void check_version(const json& doc, const std::string& where) {
  if (const json* v = find(doc, "version")) {
    if (!v->is_number_integer() || v->get<int>() != kDocumentVersion) {
      throw parse_error(where + ".version", "unsupported version (expected 1)");
    }
  }
}

double number(const json& doc, const char* key, double fallback, const std::string& where) {
  const json* v = find(doc, key);
  if (!v || v->is_null()) return fallback;
  if (!v->is_number()) throw parse_error(where + "." + key, "expected a number");
  return v->get<double>();
}

std::optional<double> optional_number(const json& doc, const char* key, const std::string& where) {
  const json* v = find(doc, key);
  if (!v || v->is_null()) return std::nullopt;
  if (!v->is_number()) throw parse_error(where + "." + key, "expected a number or null");
  return v->get<double>();
}

Point2 point(const json& doc, const std::string& where) {
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number() || !doc[1].is_number()) {
    throw parse_error(where, "expected an [x, y] number pair");
  }
  return {doc[0].get<double>(), doc[1].get<double>()};
}

Ring ring(const json& doc, const std::string& where) {
  if (!doc.is_array()) throw parse_error(where, "expected an array of [x, y] pairs");
  Ring out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.push_back(point(doc[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

json ring_json(const Ring& r) {
  json out = json::array();
  for (const Point2& p : r) out.push_back(point_json(p));
  return out;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json constraints_json(const Constraints& k) {
  return {{"d_min", k.d_min},
          {"d_max", optional_json(k.d_max)},
          {"theta_max_deg", optional_json(k.theta_max_deg)}};
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

json parse_json_text(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::kParse, "invalid JSON in " + std::string(what) + " at " +
                                       location(text, byte) + ": " + e.what());
  }
}

Floorplan parse_floorplan(const json& doc, std::vector<std::string>* warnings) {
  require_object(doc, "floorplan");
  check_version(doc, "floorplan");
  if (const json* units = find(doc, "units")) {
    if (!units->is_string() || units->get<std::string>() != "meters") {
      throw parse_error("floorplan.units", "only \"meters\" is supported");
    }
  }
  const json* outer = find(doc, "outer");
  if (!outer) throw parse_error("floorplan", "missing \"outer\" ring");
  Ring outer_ring = ring(*outer, "floorplan.outer");
  std::vector<Ring> holes;
  if (const json* hs = find(doc, "holes"); hs && !hs->is_null()) {
    if (!hs->is_array()) throw parse_error("floorplan.holes", "expected an array of rings");
    for (std::size_t i = 0; i < hs->size(); ++i) {
      holes.push_back(ring((*hs)[i], "floorplan.holes[" + std::to_string(i) + "]"));
    }
  }
  return Floorplan::create(std::move(outer_ring), std::move(holes), warnings);
}

Floorplan parse_floorplan_text(std::string_view text, std::vector<std::string>* warnings) {
  return parse_floorplan(parse_json_text(text, "floorplan document"), warnings);
}

Floorplan load_floorplan(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return parse_floorplan(parse_json_text(text, path.string()), warnings);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

json floorplan_document(const Floorplan& f) {
  json holes = json::array();
  for (const Ring& h : f.holes()) holes.push_back(ring_json(h));
  return {{"version", kDocumentVersion},
          {"units", "meters"},
          {"outer", ring_json(f.outer())},
          {"holes", holes}};
}

SamplingConfig parse_sampling(const json& doc) {
  SamplingConfig s;
  if (doc.is_null()) return s;
  require_object(doc, "sampling");
  s.boundary_spacing = number(doc, "boundary_spacing", s.boundary_spacing, "sampling");
  s.grid_spacing = number(doc, "grid_spacing", s.grid_spacing, "sampling");
  s.d_min = number(doc, "d_min", s.d_min, "sampling");
  s.fov_y_deg = number(doc, "fov_y_deg", s.fov_y_deg, "sampling");
  s.camera_height_to_floor = number(doc, "h_floor", s.camera_height_to_floor, "sampling");
  s.camera_height_to_ceiling = number(doc, "h_ceiling", s.camera_height_to_ceiling, "sampling");
  s.validate();
  return s;
}

Constraints parse_constraints(const json& doc) {
  Constraints k;
  if (doc.is_null()) return k;
  require_object(doc, "constraints");
  k.d_max = optional_number(doc, "d_max", "constraints");
  k.theta_max_deg = optional_number(doc, "theta_max_deg", "constraints");
  return k;
}

PlanRequest parse_plan_request(const json& doc) {
  require_object(doc, "request");
  const json* fp = find(doc, "floorplan");
  if (!fp) throw parse_error("request", "missing \"floorplan\"");
  PlanRequest req{parse_floorplan(*fp), {}, {}};
  if (const json* s = find(doc, "sampling")) req.sampling = parse_sampling(*s);
  if (const json* k = find(doc, "constraints")) req.constraints = parse_constraints(*k);
  if (const json* solver = find(doc, "solver"); solver && !solver->is_null()) {
    const std::string name = solver->is_string() ? solver->get<std::string>() : "";
    if (name == "greedy") {
      req.solver = SolverChoice::kGreedy;
    } else if (name == "exact") {
      req.solver = SolverChoice::kExact;
    } else {
      throw parse_error("request.solver", "expected \"greedy\" or \"exact\"");
    }
  }
  req.time_budget_s = number(doc, "time_budget_s", req.time_budget_s, "request");
  if (!(req.time_budget_s > 0.0)) throw parse_error("request.time_budget_s", "must be > 0");
  const double threads = number(doc, "threads", 0.0, "request");
  if (threads < 0.0) throw parse_error("request.threads", "must be >= 0");
  req.threads = static_cast<unsigned>(threads);
  return req;
}

json plan_request_document(const PlanRequest& req) {
  const SamplingConfig& s = req.sampling;
  return {{"floorplan", floorplan_document(req.floorplan)},
          {"sampling",
           {{"boundary_spacing", s.boundary_spacing},
            {"grid_spacing", s.grid_spacing},
            {"d_min", s.d_min},
            {"fov_y_deg", s.fov_y_deg},
            {"h_floor", s.camera_height_to_floor},
            {"h_ceiling", s.camera_height_to_ceiling}}},
          {"constraints",
           {{"d_max", optional_json(req.constraints.d_max)},
            {"theta_max_deg", optional_json(req.constraints.theta_max_deg)}}},
          {"solver", req.solver == SolverChoice::kGreedy ? "greedy" : "exact"},
          {"time_budget_s", req.time_budget_s}};
}

json solution_document(const PlanReport& report, bool include_timing) {
  const Solution& sol = report.solution;
  json chosen = json::array();
  for (const Point2& p : report.chosen_positions) chosen.push_back(point_json(p));
  const ReductionCounts& red = sol.diagnostics.reductions;
  json doc = {
      {"version", kDocumentVersion},
      {"chosen", chosen},
      {"chosen_indices", sol.chosen},
      {"objective", sol.objective},
      {"status", std::string(status_name(sol.status))},
      {"missed_boundary", report.cover.missed},
      {"stats",
       {{"n_boundary", report.stats.n_boundary},
        {"n_candidates", report.stats.n_candidates},
        {"pair_count", report.stats.pair_count},
        {"uncoverable", report.uncoverable},
        {"effective_d_min", report.stats.effective_d_min},
        {"constraints", constraints_json(report.constraints)},
        {"nodes_explored", sol.diagnostics.nodes_explored},
        {"lower_bound", sol.diagnostics.lower_bound},
        {"reductions",
         {{"essential_columns", red.essential_columns},
          {"dominated_rows", red.dominated_rows},
          {"dominated_columns", red.dominated_columns}}}}},
  };
  if (include_timing) {
    doc["timing"] = {{"matrix_build_time_s", report.stats.matrix_build_time_s},
                     {"solve_time_s", report.stats.solve_time_s}};
  }
  return doc;
}

json report_document(const PlanReport& report) {
  json doc = solution_document(report, true);
  json boundary = json::array();
  for (const BoundaryPoint& b : report.boundary) {
    boundary.push_back(
        {{"position", point_json(b.position)}, {"normal", point_json(b.normal)}, {"wall", b.wall_id}});
  }
  json coverage = json::array();
  for (const CoverageRegion& r : report.coverage) {
    coverage.push_back({{"candidate", r.candidate},
                        {"position", point_json(r.position)},
                        {"polygon", ring_json(r.polygon)},
                        {"covered", report.solution.per_camera_coverage.at(r.candidate)}});
  }
  json walls = json::array();
  for (const Ring& w : report.walls) walls.push_back(ring_json(w));
  doc["boundary_points"] = boundary;
  doc["covered_boundary"] = report.cover.covered;
  doc["coverage"] = coverage;
  doc["walls"] = walls;
  return doc;
}

SolutionSummary parse_solution_document(const json& doc) {
  require_object(doc, "solution");
  check_version(doc, "solution");
  SolutionSummary s;
  const json* chosen = find(doc, "chosen");
  if (!chosen) throw parse_error("solution", "missing \"chosen\"");
  s.chosen = ring(*chosen, "solution.chosen");
  try {
    s.chosen_indices = doc.at("chosen_indices").get<std::vector<Index>>();
    s.objective = doc.at("objective").get<std::size_t>();
    s.status = parse_status(doc.at("status").get<std::string>());
    s.missed_boundary = doc.value("missed_boundary", std::vector<Index>{});
  } catch (const json::exception& e) {
    throw parse_error("solution", e.what());
  }
  return s;
}

std::vector<Point2> parse_placements(const json& doc) {
  require_object(doc, "placements document");
  if (const json* p = find(doc, "placements")) return ring(*p, "placements");
  if (const json* c = find(doc, "chosen")) return ring(*c, "chosen");
  throw parse_error("placements document", "expected \"placements\" or \"chosen\"");
}

json verify_document(const VerifyResult& result) {
  json boundary = json::array();
  for (const BoundaryPoint& b : result.boundary) boundary.push_back(point_json(b.position));
  json per = json::array();
  for (std::size_t i = 0; i < result.placements.size(); ++i) {
    per.push_back({{"position", point_json(result.placements[i])},
                   {"covered", result.per_placement[i]}});
  }
  return {{"version", kDocumentVersion},
          {"n_boundary", result.boundary.size()},
          {"boundary_points", boundary},
          {"covered", result.cover.covered},
          {"missed", result.cover.missed},
          {"missed_count", result.cover.missed.size()},
          {"per_placement", per},
          {"constraints", constraints_json(result.constraints)}};
}

json visibility_document(const CoverageRegion& region) {
  double area = 0.0;
  if (region.polygon.size() >= 3) area = signed_area(region.polygon);
  return {{"version", kDocumentVersion},
          {"point", point_json(region.position)},
          {"polygon", ring_json(region.polygon)},
          {"area", area}};
}

}  // namespace camplace
