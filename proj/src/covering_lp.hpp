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

#ifndef CAMPLACE_SRC_COVERING_LP_HPP_
#define CAMPLACE_SRC_COVERING_LP_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace camplace::detail {

struct CoveringLp {
  std::vector<double> x;  // column values
  std::vector<double> u;  // row multipliers, clamped to be nonnegative
};

/// Solves the covering LP  min sum(x)  s.t.  A x >= 1, x >= 0  with a
/// primal-dual interior-point method. `col_rows[j]` lists the rows column j
/// covers; every row must be covered by some column. The multipliers are
/// near-optimal duals, so they make a strong starting point for a
/// Lagrangian bound; callers must evaluate that bound themselves rather
/// than trust the LP value.
CoveringLp solve_covering_lp(std::size_t n_rows,
                             const std::vector<std::vector<std::uint32_t>>& col_rows);

}  // namespace camplace::detail

#endif  // CAMPLACE_SRC_COVERING_LP_HPP_
