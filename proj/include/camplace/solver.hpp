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

// Minimum set cover over a VisibilityMatrix: pick as few candidate columns as
// possible so that every coverable boundary row has a chosen column.

#ifndef CAMPLACE_SOLVER_HPP_
#define CAMPLACE_SOLVER_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "camplace/visibility.hpp"

namespace camplace {

/// Rows with no covering column are set aside as uncoverable instead of
/// making the whole instance infeasible.
struct CoverInstance {
  VisibilityMatrix matrix;
  std::vector<Index> uncoverable;

  static CoverInstance from_matrix(VisibilityMatrix matrix);
};

enum class SolveStatus { kOptimal, kFeasibleBoundGap, kInfeasible };

std::string_view status_name(SolveStatus s);
/// Throws kParse on unknown names.
SolveStatus parse_status(std::string_view name);

struct ReductionCounts {
  std::size_t essential_columns = 0;
  std::size_t dominated_rows = 0;
  std::size_t dominated_columns = 0;
};

struct SolveDiagnostics {
  std::uint64_t nodes_explored = 0;
  ReductionCounts reductions;
  std::size_t lower_bound = 0;
  double solve_time_s = 0.0;
};

struct Solution {
  std::vector<Index> chosen;  // sorted
  std::size_t objective = 0;
  SolveStatus status = SolveStatus::kInfeasible;
  SolveDiagnostics diagnostics;
  std::map<Index, std::vector<Index>> per_camera_coverage;
};

struct CoverCheck {
  std::vector<Index> covered;
  std::vector<Index> missed;
};

/// Splits all boundary rows by whether a chosen column covers them.
CoverCheck verify_cover(const VisibilityMatrix& matrix, std::span<const Index> chosen);

/// Most-newly-covered first, lowest index on ties.
Solution solve_greedy(const CoverInstance& inst);

struct ExactOptions {
  double time_budget_s = 60.0;
  bool essential_columns = true;
  bool dominated_rows = true;
  bool dominated_columns = true;
};

/// Reductions to a fixpoint, then depth-first branch and bound seeded with
/// the greedy cover. Status is kOptimal only when the search finished inside
/// the time budget.
Solution solve_exact(const CoverInstance& inst, const ExactOptions& options);
Solution solve_exact(const CoverInstance& inst, double time_budget_s);

/// Subsets in increasing size, lexicographic within a size. Testing oracle;
/// throws kOracleMisuse above max_candidates columns.
Solution solve_bruteforce(const CoverInstance& inst, std::size_t max_candidates = 25);

}  // namespace camplace

#endif  // CAMPLACE_SOLVER_HPP_
