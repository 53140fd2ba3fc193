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

// Small floorplans and helpers shared by the unit tests.

#ifndef CAMPLACE_TESTS_UNIT_FIXTURES_HPP_
#define CAMPLACE_TESTS_UNIT_FIXTURES_HPP_

#include <random>
#include <string>

#include <doctest.h>

#include "camplace/error.hpp"
#include "camplace/geometry.hpp"
#include "oracles.hpp"

namespace fixtures {

using camplace::Floorplan;
using camplace::Point2;

inline Floorplan square(double side) {
  return Floorplan::create({{0, 0}, {side, 0}, {side, side}, {0, side}});
}

inline Floorplan l_shape() {
  return Floorplan::create({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

// 6 x 6 square with a centred 2 x 2 hole: a ring-shaped corridor.
inline Floorplan annulus() {
  return Floorplan::create({{0, 0}, {6, 0}, {6, 6}, {0, 6}}, {{{2, 2}, {2, 4}, {4, 4}, {4, 2}}});
}

inline Point2 random_inside(std::mt19937_64& rng, const Floorplan& f, double clearance = 1e-6) {
  std::uniform_real_distribution<double> ux(f.bounds().min.x, f.bounds().max.x);
  std::uniform_real_distribution<double> uy(f.bounds().min.y, f.bounds().max.y);
  while (true) {
    const Point2 p{ux(rng), uy(rng)};
    if (oracle::locate(p, f) == oracle::Where::kInside && oracle::distance_to_walls(p, f) > clearance) {
      return p;
    }
  }
}

// Runs f and returns the code and message of the camplace::Error it throws.
template <typename F>
std::pair<camplace::ErrorCode, std::string> caught(F&& f) {
  try {
    f();
  } catch (const camplace::Error& e) {
    return {e.code(), e.what()};
  }
  FAIL("expected camplace::Error");
  return {camplace::ErrorCode::kInternal, ""};
}

}  // namespace fixtures

#endif  // CAMPLACE_TESTS_UNIT_FIXTURES_HPP_
