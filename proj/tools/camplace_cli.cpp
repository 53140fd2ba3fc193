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

// camplace: plan, verify and serve camera placements from the command line.
// Everything goes through the C API in libcamplace.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "camplace/camplace.h"
#include "server.hpp"

namespace {

using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitGaps = 3;

struct SamplingFlags {
  double boundary_spacing = 0.25;
  double grid_spacing = 0.25;
  double min_range = 0.0;
  double fov_y_deg = 150.0;
  double h_floor = 1.5;
  double h_ceiling = 1.3;
  std::optional<double> max_range;
  std::optional<double> max_angle_deg;

  void add_to(CLI::App& app) {
    app.add_option("--max-range", max_range, "Maximum camera-to-wall distance (m); unbounded if absent");
    app.add_option("--min-range", min_range, "Physical minimum clearance to walls (m)")->capture_default_str();
    app.add_option("--max-angle-deg", max_angle_deg,
                   "Maximum angle between wall normal and camera direction; unbounded if absent");
    app.add_option("--boundary-spacing", boundary_spacing, "Wall sample spacing (m)")->capture_default_str();
    app.add_option("--grid-spacing", grid_spacing, "Candidate grid spacing (m)")->capture_default_str();
    app.add_option("--fov-y-deg", fov_y_deg, "Vertical field of view (deg)")->capture_default_str();
    app.add_option("--camera-height-floor", h_floor, "Camera height above floor (m)")->capture_default_str();
    app.add_option("--camera-height-ceiling", h_ceiling, "Camera distance below ceiling (m)")
        ->capture_default_str();
  }

  json sampling() const {
    return {{"boundary_spacing", boundary_spacing}, {"grid_spacing", grid_spacing},
            {"d_min", min_range},                   {"fov_y_deg", fov_y_deg},
            {"h_floor", h_floor},                   {"h_ceiling", h_ceiling}};
  }

  json constraints() const {
    return {{"d_max", max_range ? json(*max_range) : json(nullptr)},
            {"theta_max_deg", max_angle_deg ? json(*max_angle_deg) : json(nullptr)}};
  }
};

int fail(camplace_status s) {
  std::cerr << "error: " << camplace_status_name(s) << ": " << camplace_last_error() << "\n";
  return kExitError;
}

struct FloorplanHandle {
  camplace_floorplan* p = nullptr;
  ~FloorplanHandle() { camplace_floorplan_free(p); }
};

struct ReportHandle {
  camplace_report* p = nullptr;
  ~ReportHandle() { camplace_report_free(p); }
};

struct CString {
  char* p = nullptr;
  ~CString() { camplace_string_free(p); }
};

camplace_status load(const std::string& path, FloorplanHandle& fp) {
  const camplace_status s = camplace_floorplan_load(path.c_str(), &fp.p);
  if (s == CAMPLACE_OK) {
    for (size_t i = 0; i < camplace_floorplan_warning_count(fp.p); ++i) {
      std::cerr << "warning: " << camplace_floorplan_warning(fp.p, i) << "\n";
    }
  }
  return s;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

int run_plan(const std::string& floorplan, const SamplingFlags& flags, const std::string& solver,
             double time_budget, unsigned threads, const std::string& out, const std::string& svg) {
  FloorplanHandle fp;
  if (camplace_status s = load(floorplan, fp); s != CAMPLACE_OK) return fail(s);
  const json options = {{"sampling", flags.sampling()},
                        {"constraints", flags.constraints()},
                        {"solver", solver},
                        {"time_budget_s", time_budget},
                        {"threads", threads}};
  ReportHandle report;
  if (camplace_status s = camplace_plan_floorplan(fp.p, options.dump().c_str(), &report.p);
      s != CAMPLACE_OK) {
    return fail(s);
  }
  if (!out.empty() || !svg.empty()) {
    const camplace_status s = camplace_report_write(report.p, out.empty() ? nullptr : out.c_str(),
                                                    svg.empty() ? nullptr : svg.c_str());
    if (s != CAMPLACE_OK) return fail(s);
  }
  if (out.empty()) {
    CString doc;
    if (camplace_status s = camplace_report_solution_json(report.p, 1, &doc.p); s != CAMPLACE_OK) {
      return fail(s);
    }
    std::cout << doc.p << "\n";
  }
  std::cerr << "cameras: " << camplace_report_objective(report.p) << " ("
            << camplace_report_status(report.p) << "), missed boundary points: "
            << camplace_report_missed_count(report.p) << "\n";
  return 0;
}

int run_verify(const std::string& floorplan, const std::string& placements,
               const SamplingFlags& flags, const std::string& out) {
  FloorplanHandle fp;
  if (camplace_status s = load(floorplan, fp); s != CAMPLACE_OK) return fail(s);
  CString fp_doc;
  if (camplace_status s = camplace_floorplan_json(fp.p, &fp_doc.p); s != CAMPLACE_OK) return fail(s);

  std::ifstream in(placements, std::ios::binary);
  if (!in) {
    std::cerr << "error: io_error: cannot read " << placements << "\n";
    return kExitError;
  }
  std::ostringstream text;
  text << in.rdbuf();
  json placements_doc = json::parse(text.str(), nullptr, false);
  if (placements_doc.is_discarded() || !placements_doc.is_object()) {
    std::cerr << "error: parse_error: " << placements << " is not a JSON object\n";
    return kExitError;
  }
  json request = {{"floorplan", json::parse(fp_doc.p)},
                  {"sampling", flags.sampling()},
                  {"constraints", flags.constraints()}};
  if (placements_doc.contains("placements")) {
    request["placements"] = placements_doc["placements"];
  } else if (placements_doc.contains("chosen")) {
    request["placements"] = placements_doc["chosen"];
  } else {
    std::cerr << "error: parse_error: " << placements << ": expected \"placements\" or \"chosen\"\n";
    return kExitError;
  }

  CString result;
  if (camplace_status s = camplace_verify(request.dump().c_str(), &result.p); s != CAMPLACE_OK) {
    return fail(s);
  }
  const json doc = json::parse(result.p);
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else if (!write_text(out, doc.dump(2) + "\n")) {
    std::cerr << "error: io_error: cannot write " << out << "\n";
    return kExitError;
  }
  const std::size_t missed = doc["missed_count"].get<std::size_t>();
  std::cerr << "covered " << doc["covered"].size() << " of " << doc["n_boundary"].get<std::size_t>()
            << " boundary points, missed " << missed << "\n";
  return missed == 0 ? 0 : kExitGaps;
}

int run_serve(const std::string& bind, const std::string& static_dir) {
  try {
    camplace::service::Options options = camplace::service::parse_bind(bind);
    options.static_dir = static_dir;
    camplace::service::Server server(options);
    const int port = server.bind();
    std::cerr << "listening on http://" << options.host << ":" << port << "\n";
    server.run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal 360-degree camera placements covering the walls of a floorplan"};
  app.set_version_flag("--version", std::string(camplace_version()));
  app.require_subcommand(1);

  SamplingFlags plan_flags;
  std::string plan_floorplan;
  std::string solver = "exact";
  double time_budget = 60.0;
  unsigned threads = 0;
  std::string out;
  std::string svg;
  CLI::App* plan = app.add_subcommand("plan", "Compute a minimal placement");
  plan->add_option("floorplan", plan_floorplan, "Floorplan JSON document")->required();
  plan_flags.add_to(*plan);
  plan->add_option("--solver", solver, "Solver")
      ->check(CLI::IsMember({"greedy", "exact"}))
      ->capture_default_str();
  plan->add_option("--time-budget", time_budget, "Exact solver time budget (s)")->capture_default_str();
  plan->add_option("--threads", threads, "Worker threads for the visibility matrix (0 = all cores)");
  plan->add_option("--out", out, "Write the solution document here instead of stdout");
  plan->add_option("--svg", svg, "Write an SVG rendering");

  SamplingFlags verify_flags;
  std::string verify_floorplan;
  std::string placements;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Check which walls a set of placements covers");
  verify->add_option("floorplan", verify_floorplan, "Floorplan JSON document")->required();
  verify->add_option("placements", placements,
                     "JSON with \"placements\": [[x,y],...] or a solution document")
      ->required();
  verify_flags.add_to(*verify);
  verify->add_option("--out", verify_out, "Write the verify document here instead of stdout");

  std::string bind = "127.0.0.1:8080";
  std::string static_dir;
  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--bind", bind, "HOST:PORT")->capture_default_str();
  serve->add_option("--static-dir", static_dir, "Directory with the web client");

  CLI11_PARSE(app, argc, argv);

  if (*plan) {
    return run_plan(plan_floorplan, plan_flags, solver, time_budget, threads, out, svg);
  }
  if (*verify) return run_verify(verify_floorplan, placements, verify_flags, verify_out);
  return run_serve(bind, static_dir);
}
