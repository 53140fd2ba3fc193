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

#ifndef CAMPLACE_ERROR_HPP_
#define CAMPLACE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace camplace {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kInvalidGeometry,
  kConfig,
  kPlacementInfeasible,
  kInfeasibleSampling,
  kSolverInfeasible,
  kOracleMisuse,
  kIo,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

/// The single exception type thrown by the library. The code is what the C
/// API and the HTTP service map to status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace camplace

#endif  // CAMPLACE_ERROR_HPP_
