#pragma once

#include <vector>

namespace ontic::lp {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> x;        // a basic solution when feasible
  double infeasibility = 0.0;   // optimal phase-1 objective (sum of artificials)
  int pivots = 0;
};

/// Phase-1 simplex with Bland's rule for {x : A x = b, x >= 0}. Dense
/// tableau; one artificial per row. Deterministic for fixed input.
/// Feasible iff the phase-1 optimum is <= tol.
FeasibilityResult find_feasible_point(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                                      double tol = 1e-9);

}  // namespace ontic::lp
