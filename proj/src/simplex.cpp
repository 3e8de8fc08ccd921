#include "ontic/simplex.hpp"

#include <cmath>
#include <limits>

#include "ontic/error.hpp"

namespace ontic::lp {

namespace {
constexpr double kPivotTolerance = 1e-12;
constexpr int kMaxPivots = 100000;
}  // namespace

FeasibilityResult find_feasible_point(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                                      double tol) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InputError("constraint matrix and right-hand side differ in length");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != n) throw InputError("ragged constraint matrix");

  // Columns: 0..n-1 structural, n..n+m-1 artificial, n+m right-hand side.
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<std::vector<double>> t(m, std::vector<double>(cols, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sgn = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sgn * a[i][j];
    t[i][n + i] = 1.0;
    t[i][rhs] = sgn * b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-1 objective (minimize the sum of artificials).
  std::vector<double> cost(cols, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (j < n || j == rhs) cost[j] -= t[i][j];

  FeasibilityResult result;
  for (; result.pivots < kMaxPivots; ++result.pivots) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < -kPivotTolerance) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    // Ratio test; ties go to the lowest-index basic variable.
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= kPivotTolerance) continue;
      const double ratio = t[i][rhs] / t[i][enter];
      if (ratio < best - kPivotTolerance || (std::abs(ratio - best) <= kPivotTolerance && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase 1

    const double piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    const double f = cost[enter];
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  result.infeasibility = -cost[rhs];
  result.feasible = result.infeasibility <= tol;
  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) result.x[basis[i]] = t[i][rhs];
  return result;
}

}  // namespace ontic::lp
