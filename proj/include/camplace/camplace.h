/*
 * Copyright 2026 The camplace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libcamplace.
 *
 * Every call returns a camplace_status. On failure a message describing the
 * error is available from camplace_last_error() on the calling thread until
 * the next call on that thread. Strings returned through char** out
 * parameters are owned by the caller and released with camplace_string_free.
 * Handles are released with their matching *_free function; passing NULL to
 * a free function is allowed.
 *
 * Request and response payloads are the JSON documents described in the
 * README (plan request, solution, verify and visibility documents).
 */

#ifndef CAMPLACE_CAMPLACE_H_
#define CAMPLACE_CAMPLACE_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(CAMPLACE_BUILDING_LIBRARY)
#define CAMPLACE_API __declspec(dllexport)
#else
#define CAMPLACE_API __declspec(dllimport)
#endif
#else
#define CAMPLACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum camplace_status {
  CAMPLACE_OK = 0,
  CAMPLACE_ERR_INVALID_ARGUMENT = 1,
  CAMPLACE_ERR_PARSE = 2,
  CAMPLACE_ERR_INVALID_GEOMETRY = 3,
  CAMPLACE_ERR_CONFIG = 4,
  CAMPLACE_ERR_PLACEMENT_INFEASIBLE = 5,
  CAMPLACE_ERR_INFEASIBLE_SAMPLING = 6,
  CAMPLACE_ERR_SOLVER_INFEASIBLE = 7,
  CAMPLACE_ERR_IO = 8,
  CAMPLACE_ERR_INTERNAL = 9
} camplace_status;

typedef struct camplace_floorplan camplace_floorplan;
typedef struct camplace_report camplace_report;

CAMPLACE_API const char* camplace_version(void);
CAMPLACE_API const char* camplace_last_error(void);
/* Stable snake_case name of a status, e.g. "invalid_geometry". */
CAMPLACE_API const char* camplace_status_name(camplace_status status);

CAMPLACE_API camplace_status camplace_floorplan_load(const char* path, camplace_floorplan** out);
CAMPLACE_API camplace_status camplace_floorplan_parse(const char* json, camplace_floorplan** out);
CAMPLACE_API size_t camplace_floorplan_wall_count(const camplace_floorplan* floorplan);
CAMPLACE_API double camplace_floorplan_area(const camplace_floorplan* floorplan);
/* Normalization notes (e.g. a reversed ring orientation) from loading. */
CAMPLACE_API size_t camplace_floorplan_warning_count(const camplace_floorplan* floorplan);
CAMPLACE_API const char* camplace_floorplan_warning(const camplace_floorplan* floorplan,
                                                    size_t index);
/* Normalized floorplan document. */
CAMPLACE_API camplace_status camplace_floorplan_json(const camplace_floorplan* floorplan,
                                                     char** out);
CAMPLACE_API void camplace_floorplan_free(camplace_floorplan* floorplan);

/* Runs the full pipeline on a plan request document. */
CAMPLACE_API camplace_status camplace_plan(const char* request_json, camplace_report** out);
/* Same, with the floorplan taken from a handle; options_json is a plan
 * request without the "floorplan" member (may be NULL for defaults). */
CAMPLACE_API camplace_status camplace_plan_floorplan(const camplace_floorplan* floorplan,
                                                     const char* options_json,
                                                     camplace_report** out);
CAMPLACE_API size_t camplace_report_objective(const camplace_report* report);
/* "optimal", "feasible_bound_gap" or "infeasible". */
CAMPLACE_API const char* camplace_report_status(const camplace_report* report);
CAMPLACE_API size_t camplace_report_missed_count(const camplace_report* report);
/* Solution document; timing fields are omitted when include_timing is 0. */
CAMPLACE_API camplace_status camplace_report_solution_json(const camplace_report* report,
                                                           int include_timing, char** out);
/* Solution document plus boundary samples, coverage regions and walls. */
CAMPLACE_API camplace_status camplace_report_json(const camplace_report* report, char** out);
CAMPLACE_API camplace_status camplace_report_svg(const camplace_report* report, char** out);
/* Writes the solution document and/or SVG; either path may be NULL. */
CAMPLACE_API camplace_status camplace_report_write(const camplace_report* report,
                                                   const char* solution_path,
                                                   const char* svg_path);
CAMPLACE_API void camplace_report_free(camplace_report* report);

/* {"floorplan", "placements": [[x,y],...], "sampling", "constraints"}
 * -> verify document with covered / missed boundary indices. */
CAMPLACE_API camplace_status camplace_verify(const char* request_json, char** out_json);
/* {"floorplan", "point": [x,y], "constraints", "sampling"}
 * -> visibility document with the range-clipped coverage polygon. */
CAMPLACE_API camplace_status camplace_visibility(const char* request_json, char** out_json);

CAMPLACE_API void camplace_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CAMPLACE_CAMPLACE_H_ */
