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

#include "camplace/error.hpp"

namespace camplace {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kParse:
      return "parse_error";
    case ErrorCode::kInvalidGeometry:
      return "invalid_geometry";
    case ErrorCode::kConfig:
      return "config_error";
    case ErrorCode::kPlacementInfeasible:
      return "placement_infeasible";
    case ErrorCode::kInfeasibleSampling:
      return "infeasible_sampling";
    case ErrorCode::kSolverInfeasible:
      return "solver_infeasible";
    case ErrorCode::kOracleMisuse:
      return "oracle_misuse";
    case ErrorCode::kIo:
      return "io_error";
    case ErrorCode::kInternal:
      return "internal_error";
  }
  return "internal_error";
}

}  // namespace camplace
