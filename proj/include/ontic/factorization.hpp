#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ontic/polytope.hpp"
#include "ontic/qstate.hpp"

namespace ontic {

/// Dense real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/// m measurements with d outcomes over s preparations: blocks[x] is d x s and
/// column-stochastic within 1e-12.
class DataTable {
 public:
  explicit DataTable(std::vector<RealMatrix> blocks);

  std::size_t measurements() const { return blocks_.size(); }
  std::size_t outcomes() const { return blocks_.empty() ? 0 : blocks_[0].rows(); }
  std::size_t preparations() const { return blocks_.empty() ? 0 : blocks_[0].cols(); }
  const std::vector<RealMatrix>& blocks() const { return blocks_; }

 private:
  std::vector<RealMatrix> blocks_;
};

/// Measurement side of an ontological factorization D^(x) = M^(x) P.
class OntologicalModel {
 public:
  OntologicalModel(std::vector<RealMatrix> measurement, std::vector<std::uint64_t> labels);

  std::size_t omega() const { return labels_.size(); }
  std::size_t measurements() const { return measurement_.size(); }
  std::size_t outcomes() const { return measurement_.empty() ? 0 : measurement_[0].rows(); }
  const std::vector<RealMatrix>& measurement_matrices() const { return measurement_; }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  /// Every entry of every measurement matrix is 0 or 1.
  bool deterministic() const { return deterministic_; }

 private:
  std::vector<RealMatrix> measurement_;
  std::vector<std::uint64_t> labels_;
  bool deterministic_ = true;
};

/// Decomposition failed because the point lies outside the polytope.
class InfeasibleState : public std::runtime_error {
 public:
  InfeasibleState(Facet facet, double violation);
  const Facet& facet() const { return facet_; }
  /// lhs - f at the point (negative).
  double violation() const { return violation_; }

 private:
  Facet facet_;
  double violation_;
};

/// Deterministic measurement matrices of an ontic vertex set: M^(k)[o][j] = 1
/// iff vertex j assigns outcome o to basis k. Columns keep vertex order and labels.
OntologicalModel deterministic_measurement_matrices(int d, const VPolytope& v);

/// Drop the given (0-based) ontic columns from every measurement matrix.
OntologicalModel prune_model(const OntologicalModel& model, const std::vector<std::size_t>& removed_indices);

/// Convex weights over the vertices reproducing p, by phase-1 simplex.
/// Throws InfeasibleState carrying the most violated hull facet.
std::vector<double> decompose_state(const ProbabilityVector& p, const VPolytope& v);

/// max_x max_ij |D^(x) - M^(x) P|.
double factorization_residual(const OntologicalModel& model, const RealMatrix& preparations, const DataTable& table);

/// Omega = s model with M^(x) = D^(x) and P = identity.
std::pair<OntologicalModel, RealMatrix> trivial_indeterministic_of(const DataTable& table);

/// Full d-outcome columns, one per basis, with the omitted probability appended.
std::vector<std::vector<double>> probvec_to_table_column(const ProbabilityVector& p);

/// Data table whose k-th preparation column is the k-th probability vector.
DataTable table_from_probabilities(const std::vector<ProbabilityVector>& columns);

}  // namespace ontic
