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

#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace gen {
namespace {

using camplace::Point2;
using camplace::Ring;
using Grid = std::vector<std::vector<char>>;  // [x][y], 1 = filled

bool at(const Grid& g, int x, int y) {
  if (x < 0 || y < 0 || x >= static_cast<int>(g.size()) || y >= static_cast<int>(g[0].size())) {
    return false;
  }
  return g[x][y] != 0;
}

// Fills empty cells that cannot reach the grid border.
void fill_enclosed(Grid& g) {
  const int w = static_cast<int>(g.size());
  const int h = static_cast<int>(g[0].size());
  std::vector<std::vector<char>> outside(w, std::vector<char>(h, 0));
  std::vector<std::pair<int, int>> stack;
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      if ((x == 0 || y == 0 || x == w - 1 || y == h - 1) && !g[x][y]) {
        outside[x][y] = 1;
        stack.emplace_back(x, y);
      }
    }
  }
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    for (const auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      const int nx = x + dx;
      const int ny = y + dy;
      if (nx < 0 || ny < 0 || nx >= w || ny >= h || g[nx][ny] || outside[nx][ny]) continue;
      outside[nx][ny] = 1;
      stack.emplace_back(nx, ny);
    }
  }
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      if (!g[x][y] && !outside[x][y]) g[x][y] = 1;
    }
  }
}

// Two cells meeting only at a corner would make the boundary touch itself.
bool fix_pinch(Grid& g) {
  const int w = static_cast<int>(g.size());
  const int h = static_cast<int>(g[0].size());
  for (int x = -1; x < w; ++x) {
    for (int y = -1; y < h; ++y) {
      const bool a = at(g, x, y), b = at(g, x + 1, y), c = at(g, x, y + 1), d = at(g, x + 1, y + 1);
      if (a && d && !b && !c) {
        if (x + 1 < w && y >= 0) {
          g[x + 1][y] = 1;
        } else {
          g[x][y + 1] = 1;
        }
        return true;
      }
      if (b && c && !a && !d) {
        if (x >= 0 && y >= 0) {
          g[x][y] = 1;
        } else {
          g[x + 1][y + 1] = 1;
        }
        return true;
      }
    }
  }
  return false;
}

// Directed boundary loops with the filled side on the left.
std::vector<std::vector<std::pair<int, int>>> trace(const Grid& g) {
  std::map<std::pair<int, int>, std::pair<int, int>> next;
  for (int x = 0; x < static_cast<int>(g.size()); ++x) {
    for (int y = 0; y < static_cast<int>(g[0].size()); ++y) {
      if (!g[x][y]) continue;
      if (!at(g, x, y - 1)) next[{x, y}] = {x + 1, y};
      if (!at(g, x + 1, y)) next[{x + 1, y}] = {x + 1, y + 1};
      if (!at(g, x, y + 1)) next[{x + 1, y + 1}] = {x, y + 1};
      if (!at(g, x - 1, y)) next[{x, y + 1}] = {x, y};
    }
  }
  std::vector<std::vector<std::pair<int, int>>> loops;
  while (!next.empty()) {
    std::vector<std::pair<int, int>> loop;
    auto cur = next.begin()->first;
    while (true) {
      auto it = next.find(cur);
      if (it == next.end()) break;
      loop.push_back(cur);
      cur = it->second;
      next.erase(it);
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace

camplace::Floorplan random_rectilinear(Rng& rng, const RectilinearOptions& options) {
  std::uniform_int_distribution<int> dim(3, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (true) {
    const int w = dim(rng);
    const int h = dim(rng);
    Grid g(w, std::vector<char>(h, 0));
    const int target = std::max(3, static_cast<int>(w * h * (0.35 + 0.45 * unit(rng))));
    std::vector<std::pair<int, int>> cells{{static_cast<int>(unit(rng) * w), static_cast<int>(unit(rng) * h)}};
    g[cells[0].first][cells[0].second] = 1;
    int filled = 1;
    while (filled < target) {
      const auto [x, y] = cells[static_cast<std::size_t>(unit(rng) * cells.size())];
      static constexpr std::pair<int, int> kDirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      const auto [dx, dy] = kDirs[static_cast<std::size_t>(unit(rng) * 4)];
      const int nx = x + dx;
      const int ny = y + dy;
      if (nx < 0 || ny < 0 || nx >= w || ny >= h || g[nx][ny]) continue;
      g[nx][ny] = 1;
      cells.emplace_back(nx, ny);
      ++filled;
    }
    do {
      fill_enclosed(g);
    } while (fix_pinch(g));

    if (options.hole) {
      std::vector<std::pair<int, int>> interior;
      for (int x = 1; x + 1 < w; ++x) {
        for (int y = 1; y + 1 < h; ++y) {
          bool all = true;
          for (int dx = -1; dx <= 1 && all; ++dx) {
            for (int dy = -1; dy <= 1 && all; ++dy) all = g[x + dx][y + dy] != 0;
          }
          if (all) interior.emplace_back(x, y);
        }
      }
      if (interior.empty()) continue;
      const auto [hx, hy] = interior[static_cast<std::size_t>(unit(rng) * interior.size())];
      g[hx][hy] = 0;
    }

    std::vector<double> xs{0.0};
    std::vector<double> ys{0.0};
    for (int i = 0; i < w; ++i) {
      xs.push_back(xs.back() + options.cell * (1 - options.jitter + 2 * options.jitter * unit(rng)));
    }
    for (int i = 0; i < h; ++i) {
      ys.push_back(ys.back() + options.cell * (1 - options.jitter + 2 * options.jitter * unit(rng)));
    }

    Ring outer;
    std::vector<Ring> holes;
    for (const auto& loop : trace(g)) {
      Ring r;
      for (const auto [x, y] : loop) r.push_back({xs[x], ys[y]});
      if (camplace::signed_area(r) > 0) {
        outer = std::move(r);
      } else {
        holes.push_back(std::move(r));
      }
    }
    camplace::Floorplan f = camplace::Floorplan::create(std::move(outer), std::move(holes));
    const int walls = static_cast<int>(f.walls().size());
    if (walls < options.min_walls || walls > options.max_walls) continue;
    if (options.hole != !f.holes().empty()) continue;
    return f;
  }
}

camplace::Floorplan comb(int teeth) {
  const double width = 4.0 * teeth;
  Ring r{{0, 0}, {width, 0}, {width, 1}};
  for (int i = teeth - 1; i >= 0; --i) {
    const double x0 = 1.5 + 4.0 * i;
    r.push_back({x0 + 1, 1});
    r.push_back({x0 + 1, 9});
    r.push_back({x0, 9});
    r.push_back({x0, 1});
  }
  r.push_back({0, 1});
  return camplace::Floorplan::create(std::move(r));
}

camplace::Floorplan corridor_loop() {
  constexpr double kWidth = 48.0;
  constexpr double kHeight = 32.0;
  constexpr double kCorridor = 3.0;
  constexpr double kWall = 0.2;
  constexpr double kDoor = 1.2;
  constexpr double kRoomDepth = 5.0;
  constexpr double kBefore = 2.4;  // room extent before the door
  constexpr double kAfter = 2.4;   // room extent after the door

  Ring ring;
  auto side = [&](Point2 start, Point2 dir, double length) {
    const Point2 out{dir.y, -dir.x};
    auto at_s = [&](double s, double depth) { return start + s * dir + depth * out; };
    ring.push_back(start);
    for (double s = 5.0; s + kDoor + kAfter <= length - kWall; s += 8.0) {
      ring.push_back(at_s(s, 0));
      ring.push_back(at_s(s, kWall));
      ring.push_back(at_s(s - kBefore, kWall));
      ring.push_back(at_s(s - kBefore, kWall + kRoomDepth));
      ring.push_back(at_s(s + kDoor + kAfter, kWall + kRoomDepth));
      ring.push_back(at_s(s + kDoor + kAfter, kWall));
      ring.push_back(at_s(s + kDoor, kWall));
      ring.push_back(at_s(s + kDoor, 0));
    }
  };
  side({0, 0}, {1, 0}, kWidth);
  side({kWidth, 0}, {0, 1}, kHeight);
  side({kWidth, kHeight}, {-1, 0}, kWidth);
  side({0, kHeight}, {0, -1}, kHeight);

  Ring core{{kCorridor, kCorridor},
            {kCorridor, kHeight - kCorridor},
            {kWidth - kCorridor, kHeight - kCorridor},
            {kWidth - kCorridor, kCorridor}};
  return camplace::Floorplan::create(std::move(ring), {std::move(core)});
}

camplace::Floorplan random_convex(Rng& rng, int n, double radius) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  while (true) {
    std::vector<double> a(n);
    for (double& v : a) v = angle(rng);
    std::sort(a.begin(), a.end());
    bool spread = true;
    for (int i = 0; i < n; ++i) {
      const double gap = i + 1 < n ? a[i + 1] - a[i] : a[0] + 2 * std::numbers::pi - a[i];
      if (gap < 0.05 || gap > std::numbers::pi * 0.9) spread = false;
    }
    if (!spread) continue;
    Ring r;
    for (double v : a) r.push_back({radius + radius * std::cos(v), radius + radius * std::sin(v)});
    return camplace::Floorplan::create(std::move(r));
  }
}

CoverCase random_cover(Rng& rng, std::size_t max_rows, std::size_t max_cols) {
  std::uniform_int_distribution<std::size_t> rows(1, max_rows);
  std::uniform_int_distribution<std::size_t> cols(1, max_cols);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CoverCase out;
  out.n_rows = rows(rng);
  out.cols.resize(cols(rng));
  const double density = 0.05 + 0.3 * unit(rng);
  for (auto& col : out.cols) {
    for (std::size_t r = 0; r < out.n_rows; ++r) {
      if (unit(rng) < density) col.push_back(static_cast<camplace::Index>(r));
    }
  }
  return out;
}

}  // namespace gen
