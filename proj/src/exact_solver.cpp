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

// Exact minimum set cover: reductions to a fixpoint, then a depth-first
// branch and bound per connected component of the reduced kernel, bounded by
// a Lagrangian relaxation of the covering rows.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "bitset.hpp"
#include "covering_lp.hpp"
#include "camplace/error.hpp"
#include "camplace/solver.hpp"

namespace camplace {
namespace {

using Clock = std::chrono::steady_clock;
using detail::Bitset;

// Working copy of the instance restricted to the rows and columns that are
// still active.
class Reducer {
 public:
  Reducer(const CoverInstance& inst, const ExactOptions& options)
      : m_(inst.matrix),
        options_(options),
        row_active_(m_.n_boundary(), 1),
        col_active_(m_.n_candidates(), 1) {
    for (Index b : inst.uncoverable) row_active_[b] = 0;
  }

  void run(ReductionCounts& counts) {
    bool changed = true;
    while (changed) {
      changed = false;
      if (options_.essential_columns) changed |= fix_essential(counts);
      if (options_.dominated_rows) changed |= drop_dominated_rows(counts);
      if (options_.dominated_columns) changed |= drop_dominated_columns(counts);
    }
    rebuild();
  }

  const std::vector<Index>& forced() const { return forced_; }
  const std::vector<std::vector<Index>>& rows() const { return rows_; }
  const std::vector<std::vector<Index>>& cols() const { return cols_; }
  bool row_active(std::size_t b) const { return row_active_[b]; }
  bool col_active(std::size_t c) const { return col_active_[c]; }

 private:
  void rebuild() {
    rows_.assign(m_.n_boundary(), {});
    cols_.assign(m_.n_candidates(), {});
    for (std::size_t c = 0; c < m_.n_candidates(); ++c) {
      if (!col_active_[c]) continue;
      for (Index b : m_.col(c)) {
        if (!row_active_[b]) continue;
        rows_[b].push_back(static_cast<Index>(c));
        cols_[c].push_back(b);
      }
      if (cols_[c].empty()) col_active_[c] = 0;
    }
  }

  bool fix_essential(ReductionCounts& counts) {
    rebuild();
    bool changed = false;
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      if (!row_active_[b] || rows_[b].size() != 1) continue;
      const Index c = rows_[b][0];
      if (!col_active_[c]) continue;
      forced_.push_back(c);
      col_active_[c] = 0;
      for (Index r : cols_[c]) row_active_[r] = 0;
      ++counts.essential_columns;
      changed = true;
    }
    return changed;
  }

  // Row i is implied by row r when every column covering r also covers i.
  // Equal rows keep the lower index.
  bool drop_dominated_rows(ReductionCounts& counts) {
    rebuild();
    std::vector<Bitset> bits(rows_.size());
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      if (!row_active_[b]) continue;
      bits[b] = Bitset(m_.n_candidates());
      for (Index c : rows_[b]) bits[b].set(c);
    }
    bool changed = false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_active_[r] || rows_[r].empty()) continue;
      const Index pivot = *std::min_element(
          rows_[r].begin(), rows_[r].end(),
          [&](Index a, Index b) { return cols_[a].size() < cols_[b].size(); });
      for (Index i : cols_[pivot]) {
        if (i == r || !row_active_[i]) continue;
        if (rows_[r].size() > rows_[i].size()) continue;
        if (!bits[r].is_subset_of(bits[i])) continue;
        if (rows_[r].size() == rows_[i].size() && i < r) continue;
        row_active_[i] = 0;
        ++counts.dominated_rows;
        changed = true;
      }
    }
    return changed;
  }

  // Column j is useless when another active column covers a superset of its
  // rows. Equal columns keep the lower index.
  bool drop_dominated_columns(ReductionCounts& counts) {
    rebuild();
    std::vector<Bitset> bits(cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (!col_active_[c]) continue;
      bits[c] = Bitset(m_.n_boundary());
      for (Index b : cols_[c]) bits[c].set(b);
    }
    bool changed = false;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (!col_active_[j]) continue;
      const Index pivot = *std::min_element(
          cols_[j].begin(), cols_[j].end(),
          [&](Index a, Index b) { return rows_[a].size() < rows_[b].size(); });
      for (Index k : rows_[pivot]) {
        if (k == j || !col_active_[k]) continue;
        if (cols_[j].size() > cols_[k].size()) continue;
        if (cols_[j].size() == cols_[k].size() && k > j) continue;
        if (!bits[j].is_subset_of(bits[k])) continue;
        col_active_[j] = 0;
        ++counts.dominated_columns;
        changed = true;
        break;
      }
    }
    return changed;
  }

  const VisibilityMatrix& m_;
  const ExactOptions& options_;
  std::vector<char> row_active_;
  std::vector<char> col_active_;
  std::vector<Index> forced_;
  std::vector<std::vector<Index>> rows_;
  std::vector<std::vector<Index>> cols_;
};

// One connected component of the reduced instance, renumbered densely.
struct Kernel {
  std::vector<Index> col_ids;                          // kernel column -> candidate
  std::vector<std::vector<std::uint32_t>> row_cols;    // kernel row -> kernel columns
  std::vector<std::vector<std::uint32_t>> col_rows;    // kernel column -> kernel rows
  std::vector<Bitset> col_bits;
  std::size_t n_rows = 0;
};

std::vector<Kernel> make_kernels(const Reducer& red, std::size_t n_boundary,
                                 std::size_t n_candidates) {
  std::vector<std::size_t> parent(n_boundary);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < n_candidates; ++c) {
    if (!red.col_active(c) || red.cols()[c].empty()) continue;
    const std::size_t first = find(red.cols()[c].front());
    for (Index b : red.cols()[c]) {
      const std::size_t r = find(b);
      if (r != first) parent[r] = first;
    }
  }

  // Components are numbered by their lowest boundary index.
  std::vector<std::size_t> comp_of_root(n_boundary, SIZE_MAX);
  std::vector<std::uint32_t> local(n_boundary, UINT32_MAX);
  std::vector<std::size_t> row_comp(n_boundary, SIZE_MAX);
  std::vector<Kernel> kernels;
  for (std::size_t b = 0; b < n_boundary; ++b) {
    if (!red.row_active(b) || red.rows()[b].empty()) continue;
    std::size_t& comp = comp_of_root[find(b)];
    if (comp == SIZE_MAX) {
      comp = kernels.size();
      kernels.emplace_back();
    }
    row_comp[b] = comp;
    local[b] = static_cast<std::uint32_t>(kernels[comp].n_rows++);
  }
  for (Kernel& k : kernels) k.row_cols.resize(k.n_rows);
  for (std::size_t c = 0; c < n_candidates; ++c) {
    if (!red.col_active(c) || red.cols()[c].empty()) continue;
    Kernel& k = kernels[row_comp[red.cols()[c].front()]];
    const auto kc = static_cast<std::uint32_t>(k.col_ids.size());
    k.col_ids.push_back(static_cast<Index>(c));
    k.col_rows.emplace_back();
    k.col_bits.emplace_back(k.n_rows);
    for (Index b : red.cols()[c]) {
      k.col_rows.back().push_back(local[b]);
      k.col_bits.back().set(local[b]);
      k.row_cols[local[b]].push_back(kc);
    }
  }
  return kernels;
}

// Greedy cover of the whole kernel followed by redundancy removal.
std::vector<std::uint32_t> greedy_kernel_cover(const Kernel& k) {
  Bitset uncovered(k.n_rows);
  for (std::size_t r = 0; r < k.n_rows; ++r) uncovered.set(r);
  std::vector<std::uint32_t> chosen;
  while (!uncovered.none()) {
    std::size_t best_gain = 0;
    std::uint32_t best = 0;
    for (std::uint32_t c = 0; c < k.col_bits.size(); ++c) {
      const std::size_t g = k.col_bits[c].count_and(uncovered);
      if (g > best_gain) {
        best_gain = g;
        best = c;
      }
    }
    chosen.push_back(best);
    uncovered.subtract(k.col_bits[best]);
  }
  return chosen;
}

// Drops columns whose rows are all covered by the others, in order.
void remove_redundant(const Kernel& k, std::vector<std::uint32_t>& chosen) {
  std::vector<std::uint32_t> multiplicity(k.n_rows, 0);
  for (std::uint32_t c : chosen) {
    for (std::uint32_t r : k.col_rows[c]) ++multiplicity[r];
  }
  std::vector<std::uint32_t> kept;
  for (std::uint32_t c : chosen) {
    const bool redundant = std::all_of(k.col_rows[c].begin(), k.col_rows[c].end(),
                                       [&](std::uint32_t r) { return multiplicity[r] >= 2; });
    if (redundant) {
      for (std::uint32_t r : k.col_rows[c]) --multiplicity[r];
    } else {
      kept.push_back(c);
    }
  }
  chosen = std::move(kept);
}

class BranchAndBound {
 public:
  BranchAndBound(const Kernel& k, Clock::time_point deadline, std::vector<std::uint32_t> incumbent)
      : k_(k),
        deadline_(deadline),
        excluded_(k.col_ids.size(), 0),
        stamp_(k.col_ids.size(), 0),
        best_(std::move(incumbent)),
        best_size_(best_.size()) {}

  void run() {
    Bitset all(k_.n_rows);
    for (std::size_t r = 0; r < k_.n_rows; ++r) all.set(r);
    // Start from the LP duals; subgradient steps alone converge too slowly
    // on these highly degenerate covering LPs.
    std::vector<double> u = detail::solve_covering_lp(k_.n_rows, k_.col_rows).u;
    std::vector<double> reduced;
    const double lagrangian = relax(all, u, best_size_, kRootIterations, reduced, true);
    root_bound_ = std::max(combinatorial_bound(all), ceil_bound(lagrangian));
    if (root_bound_ >= best_size_) return;
    lp_dive();
    if (root_bound_ >= best_size_) return;
    dfs(all, u, 0);
    if (!timed_out_) root_bound_ = best_size_;
  }

  bool timed_out() const { return timed_out_; }
  const std::vector<std::uint32_t>& best() const { return best_; }
  std::size_t root_bound() const { return std::min(root_bound_, best_size_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr int kRootIterations = 20000;
  static constexpr int kNodeIterations = 80;
  static constexpr int kStaleIterations = 20;
  static constexpr double kMinStep = 1e-5;
  static constexpr double kVolumeAlpha = 0.1;

  static std::size_t ceil_bound(double v) {
    if (v <= 0.0) return 0;
    return static_cast<std::size_t>(std::ceil(v - 1e-6));
  }

  std::size_t available(std::size_t row) const {
    std::size_t n = 0;
    for (std::uint32_t c : k_.row_cols[row]) n += excluded_[c] ? 0 : 1;
    return n;
  }

  // max(disjoint-rows packing, ceil(|uncovered| / largest column)).
  std::size_t combinatorial_bound(const Bitset& uncovered) {
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (available, row)
    uncovered.for_each([&](std::size_t r) { order.emplace_back(available(r), r); });
    if (order.empty()) return 0;
    std::sort(order.begin(), order.end());
    if (order.front().first == 0) return SIZE_MAX;

    ++epoch_;
    std::size_t packed = 0;
    for (const auto& [avail, r] : order) {
      bool clash = false;
      for (std::uint32_t c : k_.row_cols[r]) {
        if (!excluded_[c] && stamp_[c] == epoch_) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      ++packed;
      for (std::uint32_t c : k_.row_cols[r]) stamp_[c] = epoch_;
    }

    std::size_t widest = 0;
    for (std::size_t c = 0; c < k_.col_bits.size(); ++c) {
      if (!excluded_[c]) widest = std::max(widest, k_.col_bits[c].count_and(uncovered));
    }
    const std::size_t by_size = widest ? (order.size() + widest - 1) / widest : SIZE_MAX;
    return std::max(packed, by_size);
  }

  // Lagrangian relaxation of the rows in `uncovered` over the columns not
  // excluded. Subgradient steps improve u in place; the best bound is
  // returned with its multipliers in u and its reduced costs in `reduced`.
  // Every so often the reduced costs seed a primal heuristic.
  double relax(const Bitset& uncovered, std::vector<double>& u, std::size_t limit, int iterations,
               std::vector<double>& reduced, bool root) {
    const std::size_t n_cols = k_.col_rows.size();
    std::vector<double> rc(n_cols, 1.0);
    std::vector<double> g(k_.n_rows, 0.0);
    std::vector<double> xbar(n_cols, 0.0);  // averaged relaxed primal
    std::vector<double> trial = u;

    // Evaluates L(v) into rc and returns it.
    auto evaluate = [&](const std::vector<double>& v) {
      double bound = 0.0;
      uncovered.for_each([&](std::size_t r) { bound += v[r]; });
      for (std::size_t c = 0; c < n_cols; ++c) {
        if (excluded_[c]) continue;
        double s = 0.0;
        for (std::uint32_t r : k_.col_rows[c]) {
          if (uncovered.test(r)) s += v[r];
        }
        rc[c] = 1.0 - s;
        if (rc[c] < 0.0) bound += rc[c];
      }
      return bound;
    };

    double best = evaluate(u);
    reduced = rc;
    for (std::size_t c = 0; c < n_cols; ++c) xbar[c] = !excluded_[c] && rc[c] < 0.0 ? 1.0 : 0.0;
    double lambda = root ? 0.1 : 0.05;
    int red = 0;

    for (int it = 0; it < iterations; ++it) {
      // The incumbent can improve while we iterate (root heuristic).
      limit = std::min(limit, best_size_ - current_.size());
      if (ceil_bound(best) >= limit || lambda < kMinStep) break;

      double norm = 0.0;
      uncovered.for_each([&](std::size_t r) { g[r] = 1.0; });
      for (std::size_t c = 0; c < n_cols; ++c) {
        if (excluded_[c] || xbar[c] == 0.0) continue;
        for (std::uint32_t r : k_.col_rows[c]) g[r] -= xbar[c];
      }
      uncovered.for_each([&](std::size_t r) {
        if (u[r] <= 0.0 && g[r] < 0.0) g[r] = 0.0;  // projected onto u >= 0
        norm += g[r] * g[r];
      });
      if (norm < 1e-12) break;  // xbar is (nearly) feasible: the bound is tight
      const double step = lambda * (static_cast<double>(limit) - best) / norm;
      uncovered.for_each([&](std::size_t r) { trial[r] = std::max(0.0, u[r] + step * g[r]); });

      const double bound = evaluate(trial);
      for (std::size_t c = 0; c < n_cols; ++c) {
        if (excluded_[c]) continue;
        xbar[c] = kVolumeAlpha * (rc[c] < 0.0 ? 1.0 : 0.0) + (1.0 - kVolumeAlpha) * xbar[c];
      }
      if (root && it % 10 == 0) heuristic(uncovered, rc);
      if (bound > best + 1e-9) {
        best = bound;
        u = trial;
        reduced = rc;
        red = 0;
        lambda = std::min(lambda * 1.1, 2.0);
      } else if (++red >= kStaleIterations) {
        lambda *= 0.66;
        red = 0;
      }
    }
    return best;
  }

  // Primal heuristic: repeatedly solve the LP over the rows still
  // uncovered and take the column with the largest value (ties to the widest
  // column), then drop redundant columns.
  void lp_dive() {
    Bitset left(k_.n_rows);
    for (std::size_t r = 0; r < k_.n_rows; ++r) left.set(r);
    std::vector<std::uint32_t> pick;
    std::vector<std::uint32_t> row_map(k_.n_rows);
    while (!left.none()) {
      if (Clock::now() > deadline_) return;
      std::uint32_t n_left = 0;
      left.for_each([&](std::size_t r) { row_map[r] = n_left++; });
      std::vector<std::uint32_t> cols;
      std::vector<std::vector<std::uint32_t>> sub;
      for (std::uint32_t c = 0; c < k_.col_rows.size(); ++c) {
        std::vector<std::uint32_t> rows;
        for (std::uint32_t r : k_.col_rows[c]) {
          if (left.test(r)) rows.push_back(row_map[r]);
        }
        if (rows.empty()) continue;
        cols.push_back(c);
        sub.push_back(std::move(rows));
      }
      const std::vector<double> x = detail::solve_covering_lp(n_left, sub).x;
      std::size_t best = 0;
      for (std::size_t i = 1; i < cols.size(); ++i) {
        if (x[i] > x[best] + 1e-9 || (x[i] > x[best] - 1e-9 && sub[i].size() > sub[best].size())) best = i;
      }
      pick.push_back(cols[best]);
      left.subtract(k_.col_bits[cols[best]]);
    }
    std::reverse(pick.begin(), pick.end());
    remove_redundant(k_, pick);
    if (pick.size() < best_size_) {
      best_size_ = pick.size();
      best_ = std::move(pick);
    }
  }

  // Completes the current partial cover using the reduced costs: columns
  // with negative reduced cost first, then the cheapest column for each row
  // still uncovered, then redundancy removal.
  void heuristic(const Bitset& uncovered, const std::vector<double>& rc) {
    std::vector<std::uint32_t> pick;
    Bitset left = uncovered;
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < rc.size(); ++c) {
      if (!excluded_[c] && rc[c] < 0.0) order.push_back(c);
    }
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return rc[a] != rc[b] ? rc[a] < rc[b] : a < b;
    });
    for (std::uint32_t c : order) {
      if (k_.col_bits[c].count_and(left) == 0) continue;
      pick.push_back(c);
      left.subtract(k_.col_bits[c]);
    }
    bool stuck = false;
    const Bitset todo = left;
    todo.for_each([&](std::size_t r) {
      if (stuck || !left.test(r)) return;
      std::uint32_t best = UINT32_MAX;
      double best_score = std::numeric_limits<double>::infinity();
      for (std::uint32_t c : k_.row_cols[r]) {
        if (excluded_[c]) continue;
        const double score =
            std::max(rc[c], 0.0) / static_cast<double>(k_.col_bits[c].count_and(left));
        if (score < best_score) {
          best_score = score;
          best = c;
        }
      }
      if (best == UINT32_MAX) {
        stuck = true;
        return;
      }
      pick.push_back(best);
      left.subtract(k_.col_bits[best]);
    });
    if (stuck) return;

    // Drop redundant columns, most expensive first; the columns fixed by the
    // current branch stay.
    std::sort(pick.begin(), pick.end(), [&](std::uint32_t a, std::uint32_t b) {
      return rc[a] != rc[b] ? rc[a] > rc[b] : a < b;
    });
    std::vector<std::uint32_t> multiplicity(k_.n_rows, 0);
    for (const auto* part : {&current_, &pick}) {
      for (std::uint32_t c : *part) {
        for (std::uint32_t r : k_.col_rows[c]) ++multiplicity[r];
      }
    }
    std::vector<std::uint32_t> kept = current_;
    for (std::uint32_t c : pick) {
      const bool redundant = std::all_of(k_.col_rows[c].begin(), k_.col_rows[c].end(),
                                         [&](std::uint32_t r) { return multiplicity[r] >= 2; });
      if (redundant) {
        for (std::uint32_t r : k_.col_rows[c]) --multiplicity[r];
      } else {
        kept.push_back(c);
      }
    }
    if (kept.size() < best_size_) {
      best_size_ = kept.size();
      best_ = std::move(kept);
    }
  }

  void dfs(const Bitset& uncovered, std::vector<double> u, int depth) {
    if (timed_out_) return;
    if ((++nodes_ & 15u) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    if (uncovered.none()) {
      if (current_.size() < best_size_) {
        best_size_ = current_.size();
        best_ = current_;
      }
      return;
    }
    if (current_.size() + 1 >= best_size_) return;
    const std::size_t limit = best_size_ - current_.size();  // prune at bound >= limit
    const std::size_t lb = combinatorial_bound(uncovered);
    if (lb == SIZE_MAX || lb >= limit) return;

    // The root multipliers are already converged; deeper nodes warm-start
    // from their parent's.
    std::vector<double> rc;
    const double bound = relax(uncovered, u, limit, depth == 0 ? 1 : kNodeIterations, rc, false);
    if (ceil_bound(bound) >= limit) return;
    heuristic(uncovered, rc);
    if (current_.size() + 1 >= best_size_) return;
    const std::size_t limit_now = best_size_ - current_.size();

    // Reduced-cost fixing: a column whose reduced cost alone pushes the bound
    // to the incumbent cannot be part of a better cover below this node.
    std::vector<std::uint32_t> fixed;
    for (std::uint32_t c = 0; c < rc.size(); ++c) {
      if (excluded_[c] || rc[c] <= 0.0) continue;
      if (bound + rc[c] > static_cast<double>(limit_now) - 1.0 + 1e-6) {
        excluded_[c] = 1;
        fixed.push_back(c);
      }
    }

    std::size_t branch_row = SIZE_MAX;
    std::size_t fewest = SIZE_MAX;
    uncovered.for_each([&](std::size_t r) {
      const std::size_t a = available(r);
      if (a < fewest) {
        fewest = a;
        branch_row = r;
      }
    });

    if (fewest > 0) {
      std::vector<std::uint32_t> options;
      for (std::uint32_t c : k_.row_cols[branch_row]) {
        if (!excluded_[c]) options.push_back(c);
      }
      std::sort(options.begin(), options.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rc[a] != rc[b] ? rc[a] < rc[b] : a < b;
      });
      std::vector<std::uint32_t> newly_excluded;
      for (std::uint32_t c : options) {
        if (timed_out_ || current_.size() + 1 >= best_size_) break;
        Bitset next = uncovered;
        next.subtract(k_.col_bits[c]);
        current_.push_back(c);
        dfs(next, u, depth + 1);
        current_.pop_back();
        excluded_[c] = 1;
        newly_excluded.push_back(c);
      }
      for (std::uint32_t c : newly_excluded) excluded_[c] = 0;
    }
    for (std::uint32_t c : fixed) excluded_[c] = 0;
  }

  const Kernel& k_;
  Clock::time_point deadline_;
  std::vector<char> excluded_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::size_t best_size_ = SIZE_MAX;
  std::size_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

Solution solve_exact(const CoverInstance& inst, double time_budget_s) {
  ExactOptions options;
  options.time_budget_s = time_budget_s;
  return solve_exact(inst, options);
}

Solution solve_exact(const CoverInstance& inst, const ExactOptions& options) {
  if (!(options.time_budget_s > 0.0)) {
    throw Error(ErrorCode::kConfig, "time budget must be > 0 seconds");
  }
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(options.time_budget_s));
  const VisibilityMatrix& m = inst.matrix;

  Solution s;
  if (m.n_candidates() == 0 && m.n_boundary() > 0) {
    s.status = SolveStatus::kInfeasible;
    s.diagnostics.solve_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    return s;
  }

  const Solution greedy = solve_greedy(inst);
  Reducer reducer(inst, options);
  reducer.run(s.diagnostics.reductions);
  const std::vector<Kernel> kernels = make_kernels(reducer, m.n_boundary(), m.n_candidates());

  std::vector<Index> chosen = reducer.forced();
  std::size_t lower_bound = chosen.size();
  bool proven = true;
  for (const Kernel& k : kernels) {
    std::vector<std::uint32_t> incumbent = greedy_kernel_cover(k);
    remove_redundant(k, incumbent);
    BranchAndBound bnb(k, deadline, std::move(incumbent));
    bnb.run();
    s.diagnostics.nodes_explored += bnb.nodes();
    proven = proven && !bnb.timed_out();
    lower_bound += bnb.root_bound();
    for (std::uint32_t kc : bnb.best()) chosen.push_back(k.col_ids[kc]);
  }
  std::sort(chosen.begin(), chosen.end());

  // The plain greedy cover is a valid fallback when the search was cut short.
  if (!proven && greedy.chosen.size() < chosen.size()) chosen = greedy.chosen;

  s.chosen = std::move(chosen);
  s.objective = s.chosen.size();
  s.status = proven ? SolveStatus::kOptimal : SolveStatus::kFeasibleBoundGap;
  s.diagnostics.lower_bound = proven ? s.objective : std::min(s.objective, lower_bound);
  for (Index c : s.chosen) {
    const auto col = m.col(c);
    s.per_camera_coverage[c] = std::vector<Index>(col.begin(), col.end());
  }
  s.diagnostics.solve_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return s;
}

}  // namespace camplace
