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

// Cover instances, the greedy baseline and the exhaustive oracle.

#include <algorithm>
#include <chrono>
#include <string>

#include "bitset.hpp"
#include "camplace/error.hpp"
#include "camplace/solver.hpp"

namespace camplace {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void fill_coverage(const VisibilityMatrix& m, Solution& s) {
  s.objective = s.chosen.size();
  for (Index c : s.chosen) {
    const auto col = m.col(c);
    s.per_camera_coverage[c] = std::vector<Index>(col.begin(), col.end());
  }
}

// Depth-first enumeration of k-subsets in lexicographic order.
class SubsetSearch {
 public:
  SubsetSearch(const std::vector<detail::Bitset>& cols, const detail::Bitset& target)
      : cols_(cols), target_(target) {}

  bool find(std::size_t k, std::vector<Index>& out) {
    chosen_.clear();
    return extend(0, k, detail::Bitset(target_.size()), out);
  }

 private:
  bool extend(std::size_t first, std::size_t remaining, const detail::Bitset& covered,
              std::vector<Index>& out) {
    if (remaining == 0) {
      if (!target_.is_subset_of(covered)) return false;
      out = chosen_;
      return true;
    }
    for (std::size_t c = first; c + remaining <= cols_.size(); ++c) {
      detail::Bitset next = covered;
      next |= cols_[c];
      chosen_.push_back(static_cast<Index>(c));
      if (extend(c + 1, remaining - 1, next, out)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<detail::Bitset>& cols_;
  const detail::Bitset& target_;
  std::vector<Index> chosen_;
};

}  // namespace

CoverInstance CoverInstance::from_matrix(VisibilityMatrix matrix) {
  CoverInstance inst;
  for (std::size_t b = 0; b < matrix.n_boundary(); ++b) {
    if (matrix.row(b).empty()) inst.uncoverable.push_back(static_cast<Index>(b));
  }
  inst.matrix = std::move(matrix);
  return inst;
}

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kFeasibleBoundGap:
      return "feasible_bound_gap";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "infeasible";
}

SolveStatus parse_status(std::string_view name) {
  for (SolveStatus s :
       {SolveStatus::kOptimal, SolveStatus::kFeasibleBoundGap, SolveStatus::kInfeasible}) {
    if (status_name(s) == name) return s;
  }
  throw Error(ErrorCode::kParse, "unknown solution status '" + std::string(name) + "'");
}

CoverCheck verify_cover(const VisibilityMatrix& matrix, std::span<const Index> chosen) {
  std::vector<char> hit(matrix.n_boundary(), 0);
  for (Index c : chosen) {
    if (c >= matrix.n_candidates()) {
      throw Error(ErrorCode::kInvalidArgument, "chosen candidate index out of range");
    }
    for (Index b : matrix.col(c)) hit[b] = 1;
  }
  CoverCheck out;
  for (std::size_t b = 0; b < hit.size(); ++b) {
    (hit[b] ? out.covered : out.missed).push_back(static_cast<Index>(b));
  }
  return out;
}

Solution solve_greedy(const CoverInstance& inst) {
  const auto start = Clock::now();
  const VisibilityMatrix& m = inst.matrix;
  std::vector<char> covered(m.n_boundary(), 0);
  std::vector<std::size_t> gain(m.n_candidates());
  for (std::size_t c = 0; c < m.n_candidates(); ++c) gain[c] = m.col(c).size();
  std::size_t remaining = m.n_boundary() - inst.uncoverable.size();

  Solution s;
  while (remaining > 0 && !gain.empty()) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < gain.size(); ++c) {
      if (gain[c] > gain[best]) best = c;
    }
    if (gain[best] == 0) break;
    s.chosen.push_back(static_cast<Index>(best));
    for (Index b : m.col(best)) {
      if (covered[b]) continue;
      covered[b] = 1;
      --remaining;
      for (Index c : m.row(b)) --gain[c];
    }
  }
  std::sort(s.chosen.begin(), s.chosen.end());
  s.status = SolveStatus::kFeasibleBoundGap;
  fill_coverage(m, s);
  s.diagnostics.solve_time_s = seconds_since(start);
  return s;
}

Solution solve_bruteforce(const CoverInstance& inst, std::size_t max_candidates) {
  const auto start = Clock::now();
  const VisibilityMatrix& m = inst.matrix;
  if (m.n_candidates() > max_candidates) {
    throw Error(ErrorCode::kOracleMisuse,
                "brute-force oracle refuses " + std::to_string(m.n_candidates()) +
                    " candidates (limit " + std::to_string(max_candidates) + ")");
  }
  std::vector<detail::Bitset> cols(m.n_candidates(), detail::Bitset(m.n_boundary()));
  detail::Bitset target(m.n_boundary());
  for (std::size_t c = 0; c < m.n_candidates(); ++c) {
    for (Index b : m.col(c)) {
      cols[c].set(b);
      target.set(b);
    }
  }

  Solution s;
  SubsetSearch search(cols, target);
  for (std::size_t k = 0; k <= cols.size(); ++k) {
    if (search.find(k, s.chosen)) break;
  }
  s.status = SolveStatus::kOptimal;
  fill_coverage(m, s);
  s.diagnostics.lower_bound = s.objective;
  s.diagnostics.solve_time_s = seconds_since(start);
  return s;
}

}  // namespace camplace
