#pragma once

#include <cstdint>
#include <vector>

#include "ontic/linalg.hpp"
#include "ontic/mub.hpp"

namespace ontic {

/// Density matrix. Construction validates Hermiticity (1e-12), unit trace
/// (1e-12) and positivity (smallest eigenvalue >= -1e-10).
class QuantumState {
 public:
  explicit QuantumState(CMatrix rho);

  /// |psi><psi| / <psi|psi>; throws InputError for the zero vector.
  static QuantumState pure(const ComplexVector& psi);
  static QuantumState maximally_mixed(int d);

  int dim() const { return static_cast<int>(rho_.size()); }
  const CMatrix& rho() const { return rho_; }
  /// Tr rho^2
  double purity() const;

 private:
  CMatrix rho_;
};

/// Convex mixture t * a + (1 - t) * b.
QuantumState mix(const QuantumState& a, const QuantumState& b, double t);

/// The d^2 - 1 independent MUB outcome probabilities in ProbabilityLayout order.
class ProbabilityVector {
 public:
  ProbabilityVector(int dim, std::vector<double> entries);

  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<double>& entries() const { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }

  /// Probability of the omitted last outcome of `basis`: 1 - sum of the stored block.
  double omitted(int basis) const;
  /// Any outcome 0 .. d-1.
  double probability(int basis, int outcome) const;

 private:
  int dim_;
  std::vector<double> entries_;
};

ProbabilityVector born_probabilities(const QuantumState& state, const ProjectorList& proj);
ProbabilityVector born_probabilities(const QuantumState& state, const MubSet& mub);

/// Haar-random pure state: a normalized vector of independent standard complex
/// Gaussians drawn from xoshiro256** seeded with `seed`.
QuantumState random_pure_state(int d, std::uint64_t seed);

/// sum over all d(d+1) outcome probabilities of p^2, minus (Tr rho^2 + 1).
/// Zero for every state when the bases are a complete MUB set.
double purity_sphere_residual(const QuantumState& state, const ProjectorList& proj);
double purity_sphere_residual(const QuantumState& state, const MubSet& mub);

/// Distance of the qubit probability vector from (1/2, 1/2, 1/2).
double bloch_radius(const QuantumState& state, const MubSet& mub);

}  // namespace ontic
