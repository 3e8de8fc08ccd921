#include "ontic/qstate.hpp"

#include <cmath>

#include "ontic/error.hpp"
#include "ontic/rng.hpp"

namespace ontic {

namespace {
constexpr double kStateTolerance = 1e-12;
constexpr double kPsdTolerance = 1e-10;
constexpr double kProbabilityTolerance = 1e-12;
}  // namespace

QuantumState::QuantumState(CMatrix rho) : rho_(std::move(rho)) {
  if (rho_.size() < 2) throw InputError("state dimension must be >= 2");
  if (hermiticity_defect(rho_) > kStateTolerance) throw InputError("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - 1.0) > kStateTolerance) throw InputError("density matrix trace is not 1");
  if (min_eigenvalue(rho_) < -kPsdTolerance) throw InputError("density matrix is not positive semidefinite");
}

QuantumState QuantumState::pure(const ComplexVector& psi) {
  double norm2 = 0.0;
  for (const auto& a : psi) norm2 += std::norm(a);
  if (norm2 <= 0.0) throw InputError("state vector is zero");
  ComplexVector unit = psi;
  for (auto& a : unit) a /= std::sqrt(norm2);
  return QuantumState(CMatrix::outer(unit));
}

QuantumState QuantumState::maximally_mixed(int d) {
  return QuantumState((1.0 / d) * CMatrix::identity(static_cast<std::size_t>(d)));
}

double QuantumState::purity() const { return trace_product(rho_, rho_).real(); }

QuantumState mix(const QuantumState& a, const QuantumState& b, double t) {
  return QuantumState(t * a.rho() + (1.0 - t) * b.rho());
}

ProbabilityVector::ProbabilityVector(int dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 2 || entries_.size() != static_cast<std::size_t>(dim_ * dim_ - 1))
    throw InputError("probability vector must have d^2 - 1 entries");
  for (double p : entries_)
    if (!(p >= -kProbabilityTolerance && p <= 1.0 + kProbabilityTolerance))
      throw InputError("probability outside [0, 1]");
}

double ProbabilityVector::omitted(int basis) const {
  double s = 0.0;
  for (int i = 0; i + 1 < dim_; ++i) s += entries_.at(static_cast<std::size_t>(basis * (dim_ - 1) + i));
  return 1.0 - s;
}

double ProbabilityVector::probability(int basis, int outcome) const {
  if (outcome == dim_ - 1) return omitted(basis);
  return entries_.at(static_cast<std::size_t>(basis * (dim_ - 1) + outcome));
}

ProbabilityVector born_probabilities(const QuantumState& state, const ProjectorList& proj) {
  if (state.dim() != proj.dim()) throw InputError("state and MUB dimensions differ");
  std::vector<double> p(proj.size());
  for (std::size_t i = 0; i < proj.size(); ++i) p[i] = trace_product(state.rho(), proj[i]).real();
  ProbabilityVector out(state.dim(), std::move(p));
  for (int k = 0; k < proj.layout().bases(); ++k) {
    const double q = out.omitted(k);
    if (q < -kProbabilityTolerance || q > 1.0 + kProbabilityTolerance)
      throw InputError("implied omitted probability outside [0, 1]");
  }
  return out;
}

ProbabilityVector born_probabilities(const QuantumState& state, const MubSet& mub) {
  return born_probabilities(state, ProjectorList(mub));
}

QuantumState random_pure_state(int d, std::uint64_t seed) {
  if (d < 2) throw InputError("dimension must be >= 2");
  Xoshiro256 rng(seed);
  ComplexVector psi(static_cast<std::size_t>(d));
  for (auto& a : psi) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = {re, im};
  }
  return QuantumState::pure(psi);
}

double purity_sphere_residual(const QuantumState& state, const ProjectorList& proj) {
  const auto p = born_probabilities(state, proj);
  double s = 0.0;
  for (int k = 0; k < proj.layout().bases(); ++k)
    for (int i = 0; i < proj.dim(); ++i) s += p.probability(k, i) * p.probability(k, i);
  return s - (state.purity() + 1.0);
}

double purity_sphere_residual(const QuantumState& state, const MubSet& mub) {
  return purity_sphere_residual(state, ProjectorList(mub));
}

double bloch_radius(const QuantumState& state, const MubSet& mub) {
  if (state.dim() != 2 || mub.dim != 2) throw InputError("bloch_radius requires a qubit");
  const auto p = born_probabilities(state, mub);
  double s = 0.0;
  for (double x : p.entries()) s += (x - 0.5) * (x - 0.5);
  return std::sqrt(s);
}

}  // namespace ontic
