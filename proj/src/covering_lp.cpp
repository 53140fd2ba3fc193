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

// Mehrotra predictor-corrector on the standard form
//   min c'w  s.t.  M w = 1,  w >= 0,   w = (x, s),  M = [A  -I],  c = (1, 0),
// with the normal equations M D M' = A Dx A' + Ds factored by a sparse
// Cholesky each iteration.

#include "covering_lp.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

namespace camplace::detail {
namespace {

using Vec = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<double>;

constexpr int kMaxIterations = 80;
constexpr double kTolerance = 1e-9;

double max_step(const Vec& v, const Vec& dv) {
  double a = 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (dv[i] < 0.0) a = std::min(a, -v[i] / dv[i]);
  }
  return a;
}

}  // namespace

CoveringLp solve_covering_lp(std::size_t n_rows,
                             const std::vector<std::vector<std::uint32_t>>& col_rows) {
  const auto m = static_cast<Eigen::Index>(n_rows);
  const auto n = static_cast<Eigen::Index>(col_rows.size());

  std::vector<Eigen::Triplet<double>> entries;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (std::uint32_t r : col_rows[j]) entries.emplace_back(static_cast<Eigen::Index>(r), j, 1.0);
  }
  SpMat a(m, n);
  a.setFromTriplets(entries.begin(), entries.end());
  const SpMat at = a.transpose();

  // Primal (x, s), dual y and slacks (zx, zs) with zx = 1 - A'y, zs = y.
  Vec x = Vec::Ones(n);
  Vec s = (a * x - Vec::Ones(m)).cwiseMax(1.0);
  Vec y = Vec::Constant(m, 0.5 / std::max<double>(1.0, static_cast<double>(n)));
  Vec zx = Vec::Ones(n);
  Vec zs = Vec::Ones(m);
  const double total = static_cast<double>(n + m);

  Eigen::SimplicialLDLT<SpMat> solver;
  bool analyzed = false;
  for (int it = 0; it < kMaxIterations; ++it) {
    const Vec rp = Vec::Ones(m) - (a * x - s);        // primal residual
    const Vec rdx = Vec::Ones(n) - at * y - zx;       // dual residual, x part
    const Vec rds = y - zs;                           // dual residual, s part (0 + y - zs)
    const double mu = (x.dot(zx) + s.dot(zs)) / total;
    const double primal = x.sum();
    const double dual = y.sum();
    if (rp.norm() <= kTolerance * std::sqrt(static_cast<double>(m)) &&
        rdx.norm() <= kTolerance * std::sqrt(static_cast<double>(n)) &&
        std::abs(primal - dual) <= kTolerance * (1.0 + std::abs(primal))) {
      break;
    }

    const Vec dx = x.cwiseQuotient(zx);
    const Vec ds = s.cwiseQuotient(zs);
    SpMat normal = a * dx.asDiagonal() * at;
    for (Eigen::Index i = 0; i < m; ++i) normal.coeffRef(i, i) += ds[i] + 1e-12;
    if (!analyzed) {
      solver.analyzePattern(normal);
      analyzed = true;
    }
    solver.factorize(normal);
    if (solver.info() != Eigen::Success) break;

    // Solves for a given complementarity target (rcx, rcs).
    auto direction = [&](const Vec& rcx, const Vec& rcs, Vec& dy, Vec& dxv, Vec& dsv, Vec& dzx,
                         Vec& dzs) {
      // Delta w = Z^-1 rc - D (rd - M' dy);  M Delta w = rp.
      const Vec tx = rcx.cwiseQuotient(zx) - dx.cwiseProduct(rdx);
      const Vec ts = rcs.cwiseQuotient(zs) - ds.cwiseProduct(rds);
      const Vec rhs = rp - (a * tx - ts);
      dy = solver.solve(rhs);
      dzx = rdx - at * dy;
      dzs = rds + dy;
      dxv = (rcx - x.cwiseProduct(dzx)).cwiseQuotient(zx);
      dsv = (rcs - s.cwiseProduct(dzs)).cwiseQuotient(zs);
    };

    Vec dy, dxa, dsa, dzxa, dzsa;
    direction(-x.cwiseProduct(zx), -s.cwiseProduct(zs), dy, dxa, dsa, dzxa, dzsa);
    const double ap = std::min(max_step(x, dxa), max_step(s, dsa));
    const double ad = std::min(max_step(zx, dzxa), max_step(zs, dzsa));
    const double mu_aff = ((x + ap * dxa).dot(zx + ad * dzxa) + (s + ap * dsa).dot(zs + ad * dzsa)) / total;
    const double sigma = std::pow(mu_aff / mu, 3);

    Vec dxc, dsc, dzxc, dzsc;
    direction(Vec::Constant(n, sigma * mu) - x.cwiseProduct(zx) - dxa.cwiseProduct(dzxa),
              Vec::Constant(m, sigma * mu) - s.cwiseProduct(zs) - dsa.cwiseProduct(dzsa), dy, dxc,
              dsc, dzxc, dzsc);
    const double step_p = std::min(1.0, 0.995 * std::min(max_step(x, dxc), max_step(s, dsc)));
    const double step_d = std::min(1.0, 0.995 * std::min(max_step(zx, dzxc), max_step(zs, dzsc)));
    x += step_p * dxc;
    s += step_p * dsc;
    y += step_d * dy;
    zx += step_d * dzxc;
    zs += step_d * dzsc;
  }

  CoveringLp lp;
  lp.x.assign(x.data(), x.data() + n);
  lp.u.resize(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) lp.u[i] = std::max(0.0, y[static_cast<Eigen::Index>(i)]);
  return lp;
}

}  // namespace camplace::detail
