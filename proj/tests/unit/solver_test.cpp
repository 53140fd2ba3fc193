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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "camplace/solver.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace camplace;
using fixtures::caught;

namespace {

CoverInstance instance(std::size_t n_rows, std::vector<std::vector<Index>> cols) {
  return CoverInstance::from_matrix(VisibilityMatrix::from_columns(n_rows, std::move(cols)));
}

// A covers rows {0,1,2}, B {0,1}, C {2,3}.
CoverInstance abc() { return instance(4, {{0, 1, 2}, {0, 1}, {2, 3}}); }

// Every column covers two rows; greedy's tie-break takes A first and then
// needs both B and C, while {B, C} alone is a cover.
CoverInstance adversarial() { return instance(4, {{0, 2}, {0, 1}, {2, 3}}); }

void check_cover(const CoverInstance& inst, const Solution& s) {
  const CoverCheck check = verify_cover(inst.matrix, s.chosen);
  CHECK(check.missed == inst.uncoverable);
  CHECK(s.objective == s.chosen.size());
  CHECK(std::is_sorted(s.chosen.begin(), s.chosen.end()));
}

}  // namespace

TEST_CASE("uncoverable rows are set aside") {
  const CoverInstance inst = instance(5, {{0, 1}, {3}});
  CHECK(inst.uncoverable == std::vector<Index>{2, 4});
}

TEST_CASE("greedy") {
  SUBCASE("single candidate") {
    const Solution s = solve_greedy(instance(3, {{0, 1, 2}}));
    CHECK(s.chosen == std::vector<Index>{0});
    CHECK(s.status == SolveStatus::kFeasibleBoundGap);
  }
  SUBCASE("most new rows first") {
    const Solution s = solve_greedy(abc());
    CHECK(s.chosen == std::vector<Index>{0, 2});
    CHECK(s.objective == 2);
  }
  SUBCASE("tie-break can cost a camera") {
    const Solution s = solve_greedy(adversarial());
    CHECK(s.objective == 3);
    CHECK(oracle::min_cover_size(4, {{0, 2}, {0, 1}, {2, 3}}) == 2);
  }
}

TEST_CASE("brute force") {
  CHECK(solve_bruteforce(abc()).chosen == std::vector<Index>{0, 2});
  CHECK(solve_bruteforce(adversarial()).chosen == std::vector<Index>{1, 2});
  CHECK(solve_bruteforce(instance(3, {{1}, {0, 1, 2}, {2}})).chosen == std::vector<Index>{1});
  const Solution empty = solve_bruteforce(instance(3, {{}, {}}));
  CHECK(empty.objective == 0);
  CHECK(empty.status == SolveStatus::kOptimal);
  std::vector<std::vector<Index>> many(26, std::vector<Index>{0});
  CHECK(caught([&] { solve_bruteforce(instance(1, many)); }).first == ErrorCode::kOracleMisuse);
}

TEST_CASE("verify_cover") {
  const CoverInstance inst = abc();
  const CoverCheck none = verify_cover(inst.matrix, {});
  CHECK(none.covered.empty());
  CHECK(none.missed == std::vector<Index>{0, 1, 2, 3});
  const std::vector<Index> gap{1};
  const CoverCheck partial = verify_cover(inst.matrix, gap);
  CHECK(partial.covered == std::vector<Index>{0, 1});
  CHECK(partial.missed == std::vector<Index>{2, 3});
  const std::vector<Index> bad{7};
  CHECK(caught([&] { verify_cover(inst.matrix, bad); }).first == ErrorCode::kInvalidArgument);
}

TEST_CASE("exact solver on the hand instances") {
  const Solution s = solve_exact(adversarial(), 10.0);
  CHECK(s.objective == 2);
  CHECK(s.status == SolveStatus::kOptimal);
  CHECK(s.per_camera_coverage.at(1) == std::vector<Index>{0, 1});
  check_cover(adversarial(), s);

  const Solution none = solve_exact(instance(3, {}), 10.0);
  CHECK(none.status == SolveStatus::kInfeasible);
  CHECK(none.objective == 0);
}

TEST_CASE("exact equals exhaustive search with any reduction set") {
  gen::Rng rng(99);
  const ExactOptions variants[] = {
      {10.0, true, true, true},  {10.0, false, false, false}, {10.0, true, false, false},
      {10.0, false, true, false}, {10.0, false, false, true},
  };
  for (int i = 0; i < 150; ++i) {
    const gen::CoverCase c = gen::random_cover(rng, 30, 30);
    const CoverInstance inst = instance(c.n_rows, c.cols);
    const std::size_t optimum = oracle::min_cover_size(c.n_rows, c.cols);
    const Solution greedy = solve_greedy(inst);
    for (const ExactOptions& o : variants) {
      const Solution s = solve_exact(inst, o);
      REQUIRE(s.status == SolveStatus::kOptimal);
      CHECK(s.objective == optimum);
      CHECK(s.objective <= greedy.objective);
      CHECK(s.diagnostics.lower_bound == s.objective);
      check_cover(inst, s);
    }
    const double n = std::max<double>(1.0, static_cast<double>(c.n_rows - inst.uncoverable.size()));
    CHECK(static_cast<double>(greedy.objective) <= static_cast<double>(optimum) * (1.0 + std::log(n)));
  }
}

TEST_CASE("reductions are counted") {
  // Row 3 is covered only by column 2, so column 2 is essential.
  const Solution s = solve_exact(instance(4, {{0, 1}, {0}, {2, 3}, {1, 2}}), 10.0);
  CHECK(s.objective == 2);
  CHECK(s.diagnostics.reductions.essential_columns >= 1);
}

TEST_CASE("time budget is honoured") {
  gen::Rng rng(8);
  std::vector<std::vector<Index>> cols(600);
  std::uniform_int_distribution<int> pick(0, 599);
  for (auto& col : cols) {
    for (int k = 0; k < 25; ++k) col.push_back(static_cast<Index>(pick(rng)));
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
  }
  const CoverInstance inst = instance(600, cols);
  const auto t0 = std::chrono::steady_clock::now();
  const Solution s = solve_exact(inst, 0.5);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(elapsed < 2.5);
  check_cover(inst, s);
  CHECK(s.objective <= solve_greedy(inst).objective);
  CHECK(s.diagnostics.lower_bound <= s.objective);
  if (s.status != SolveStatus::kOptimal) CHECK(s.status == SolveStatus::kFeasibleBoundGap);
}

TEST_CASE("status names round-trip") {
  for (SolveStatus s : {SolveStatus::kOptimal, SolveStatus::kFeasibleBoundGap, SolveStatus::kInfeasible}) {
    CHECK(parse_status(status_name(s)) == s);
  }
  CHECK(status_name(SolveStatus::kFeasibleBoundGap) == "feasible_bound_gap");
  CHECK(caught([] { parse_status("nope"); }).first == ErrorCode::kParse);
}
