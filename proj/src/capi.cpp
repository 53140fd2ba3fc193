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

#include "camplace/camplace.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "camplace/error.hpp"
#include "camplace/planner.hpp"

struct camplace_floorplan {
  camplace::Floorplan floorplan;
  std::vector<std::string> warnings;
};

struct camplace_report {
  camplace::PlanReport report;
};

namespace {

using camplace::Error;
using camplace::ErrorCode;
using nlohmann::json;

thread_local std::string g_last_error;

camplace_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kOracleMisuse:
      return CAMPLACE_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse:
      return CAMPLACE_ERR_PARSE;
    case ErrorCode::kInvalidGeometry:
      return CAMPLACE_ERR_INVALID_GEOMETRY;
    case ErrorCode::kConfig:
      return CAMPLACE_ERR_CONFIG;
    case ErrorCode::kPlacementInfeasible:
      return CAMPLACE_ERR_PLACEMENT_INFEASIBLE;
    case ErrorCode::kInfeasibleSampling:
      return CAMPLACE_ERR_INFEASIBLE_SAMPLING;
    case ErrorCode::kSolverInfeasible:
      return CAMPLACE_ERR_SOLVER_INFEASIBLE;
    case ErrorCode::kIo:
      return CAMPLACE_ERR_IO;
    case ErrorCode::kInternal:
      return CAMPLACE_ERR_INTERNAL;
  }
  return CAMPLACE_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes and the thread's last
// error message.
template <typename F>
camplace_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return CAMPLACE_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return CAMPLACE_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CAMPLACE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CAMPLACE_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) throw Error(ErrorCode::kInvalidArgument, std::string(name) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json parse_request(const char* text, const char* what) {
  json doc = camplace::parse_json_text(text, what);
  if (!doc.is_object()) throw Error(ErrorCode::kParse, std::string(what) + ": expected an object");
  return doc;
}

json member_or_null(const json& doc, const char* key) {
  const auto it = doc.find(key);
  return it == doc.end() ? json(nullptr) : *it;
}

}  // namespace

extern "C" {

const char* camplace_version(void) { return CAMPLACE_VERSION; }

const char* camplace_last_error(void) { return g_last_error.c_str(); }

const char* camplace_status_name(camplace_status status) {
  switch (status) {
    case CAMPLACE_OK:
      return "ok";
    case CAMPLACE_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case CAMPLACE_ERR_PARSE:
      return "parse_error";
    case CAMPLACE_ERR_INVALID_GEOMETRY:
      return "invalid_geometry";
    case CAMPLACE_ERR_CONFIG:
      return "config_error";
    case CAMPLACE_ERR_PLACEMENT_INFEASIBLE:
      return "placement_infeasible";
    case CAMPLACE_ERR_INFEASIBLE_SAMPLING:
      return "infeasible_sampling";
    case CAMPLACE_ERR_SOLVER_INFEASIBLE:
      return "solver_infeasible";
    case CAMPLACE_ERR_IO:
      return "io_error";
    case CAMPLACE_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

camplace_status camplace_floorplan_load(const char* path, camplace_floorplan** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    std::vector<std::string> warnings;
    camplace::Floorplan f = camplace::load_floorplan(path, &warnings);
    *out = new camplace_floorplan{std::move(f), std::move(warnings)};
  });
}

camplace_status camplace_floorplan_parse(const char* text, camplace_floorplan** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = nullptr;
    std::vector<std::string> warnings;
    camplace::Floorplan f = camplace::parse_floorplan_text(text, &warnings);
    *out = new camplace_floorplan{std::move(f), std::move(warnings)};
  });
}

size_t camplace_floorplan_wall_count(const camplace_floorplan* floorplan) {
  return floorplan ? floorplan->floorplan.walls().size() : 0;
}

double camplace_floorplan_area(const camplace_floorplan* floorplan) {
  return floorplan ? floorplan->floorplan.area() : 0.0;
}

size_t camplace_floorplan_warning_count(const camplace_floorplan* floorplan) {
  return floorplan ? floorplan->warnings.size() : 0;
}

const char* camplace_floorplan_warning(const camplace_floorplan* floorplan, size_t index) {
  if (!floorplan || index >= floorplan->warnings.size()) return nullptr;
  return floorplan->warnings[index].c_str();
}

camplace_status camplace_floorplan_json(const camplace_floorplan* floorplan, char** out) {
  return guarded([&] {
    require(floorplan, "floorplan");
    require(out, "out");
    *out = dup_string(camplace::floorplan_document(floorplan->floorplan).dump());
  });
}

void camplace_floorplan_free(camplace_floorplan* floorplan) { delete floorplan; }

camplace_status camplace_plan(const char* request_json, camplace_report** out) {
  return guarded([&] {
    require(request_json, "request_json");
    require(out, "out");
    *out = nullptr;
    const camplace::PlanRequest req =
        camplace::parse_plan_request(parse_request(request_json, "plan request"));
    *out = new camplace_report{camplace::plan(req)};
  });
}

camplace_status camplace_plan_floorplan(const camplace_floorplan* floorplan,
                                        const char* options_json, camplace_report** out) {
  return guarded([&] {
    require(floorplan, "floorplan");
    require(out, "out");
    *out = nullptr;
    json doc = options_json ? parse_request(options_json, "plan options") : json::object();
    doc["floorplan"] = camplace::floorplan_document(floorplan->floorplan);
    *out = new camplace_report{camplace::plan(camplace::parse_plan_request(doc))};
  });
}

size_t camplace_report_objective(const camplace_report* report) {
  return report ? report->report.solution.objective : 0;
}

const char* camplace_report_status(const camplace_report* report) {
  if (!report) return "infeasible";
  return camplace::status_name(report->report.solution.status).data();
}

size_t camplace_report_missed_count(const camplace_report* report) {
  return report ? report->report.cover.missed.size() : 0;
}

camplace_status camplace_report_solution_json(const camplace_report* report, int include_timing,
                                              char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(camplace::solution_document(report->report, include_timing != 0).dump(2));
  });
}

camplace_status camplace_report_json(const camplace_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(camplace::report_document(report->report).dump());
  });
}

camplace_status camplace_report_svg(const camplace_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(camplace::render_svg(report->report));
  });
}

camplace_status camplace_report_write(const camplace_report* report, const char* solution_path,
                                      const char* svg_path) {
  return guarded([&] {
    require(report, "report");
    camplace::ExportTargets targets;
    if (solution_path) targets.solution = solution_path;
    if (svg_path) targets.svg = svg_path;
    camplace::export_report(report->report, targets);
  });
}

void camplace_report_free(camplace_report* report) { delete report; }

camplace_status camplace_verify(const char* request_json, char** out_json) {
  return guarded([&] {
    require(request_json, "request_json");
    require(out_json, "out_json");
    *out_json = nullptr;
    const json doc = parse_request(request_json, "verify request");
    if (!doc.contains("floorplan")) throw Error(ErrorCode::kParse, "request: missing \"floorplan\"");
    const camplace::Floorplan f = camplace::parse_floorplan(doc.at("floorplan"));
    const auto result = camplace::verify_placements(
        f, camplace::parse_sampling(member_or_null(doc, "sampling")),
        camplace::parse_constraints(member_or_null(doc, "constraints")),
        camplace::parse_placements(doc));
    *out_json = dup_string(camplace::verify_document(result).dump());
  });
}

camplace_status camplace_visibility(const char* request_json, char** out_json) {
  return guarded([&] {
    require(request_json, "request_json");
    require(out_json, "out_json");
    *out_json = nullptr;
    const json doc = parse_request(request_json, "visibility request");
    if (!doc.contains("floorplan")) throw Error(ErrorCode::kParse, "request: missing \"floorplan\"");
    if (!doc.contains("point")) throw Error(ErrorCode::kParse, "request: missing \"point\"");
    const camplace::Floorplan f = camplace::parse_floorplan(doc.at("floorplan"));
    const json& p = doc.at("point");
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw Error(ErrorCode::kParse, "point: expected an [x, y] number pair");
    }
    camplace::Constraints k = camplace::parse_constraints(member_or_null(doc, "constraints"));
    k.d_min = camplace::effective_d_min(camplace::parse_sampling(member_or_null(doc, "sampling")));
    const auto region =
        camplace::visibility_region(f, {p[0].get<double>(), p[1].get<double>()}, k);
    *out_json = dup_string(camplace::visibility_document(region).dump());
  });
}

void camplace_string_free(char* s) { std::free(s); }

}  // extern "C"
