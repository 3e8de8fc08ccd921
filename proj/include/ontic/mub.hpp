#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ontic/linalg.hpp"

namespace ontic {

bool is_prime(int n);

/// Flat indexing of the d^2 - 1 independent MUB outcome probabilities:
/// basis-major, outcomes 0 .. d-2 of each basis, the last outcome omitted.
/// Bases and outcomes are 0-based in code.
class ProbabilityLayout {
 public:
  explicit ProbabilityLayout(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int bases() const { return dim_ + 1; }
  std::size_t size() const { return static_cast<std::size_t>(dim_ * dim_ - 1); }

  /// Flat index of (basis, outcome); outcome must be < dim - 1.
  std::size_t flat(int basis, int outcome) const {
    return static_cast<std::size_t>(basis * (dim_ - 1) + outcome);
  }
  std::pair<int, int> basis_outcome(std::size_t i) const {
    return {static_cast<int>(i) / (dim_ - 1), static_cast<int>(i) % (dim_ - 1)};
  }

 private:
  int dim_;
};

/// d + 1 mutually unbiased bases. bases[k][i] is the i-th vector of basis k.
struct MubSet {
  int dim = 0;
  std::string convention_id;
  std::vector<std::vector<ComplexVector>> bases;

  const ComplexVector& vector(int basis, int outcome) const { return bases.at(basis).at(outcome); }
};

inline constexpr const char* kQubitPauliConvention = "pauli-xyz";
inline constexpr const char* kQutritFixedConvention = "qutrit-fixed-twelve";
inline constexpr const char* kIvanovicConvention = "ivanovic-quadratic-phase";

/// Complete MUB set for prime d.
///
/// d = 2: eigenbases of X, Y, Z in that order, eigenvalue +1 first.
/// d = 3: the fixed qutrit table (basis 0 is the permuted computational basis
///        (0,1,0), (0,0,1), (1,0,0)).
/// d > 3: computational basis, then bases k = 0 .. d-1 with
///        v_j^(k)[n] = w^(k n^2 + j n) / sqrt(d), w = exp(2 pi i / d).
///
/// Throws InputError for d < 2 or composite d.
MubSet build_mub(int d);

struct MubValidation {
  double orthonormality_deviation = 0.0;
  double unbiasedness_deviation = 0.0;
  bool count_ok = false;
  bool pass = false;
};

/// Deviations are max |<v_i|v_j> - delta_ij| within a basis and
/// max ||<v_i|v_j>|^2 - 1/d| across bases. pass at 1e-12.
MubValidation verify_mub(const MubSet& mub);

/// Rank-one projectors in the flat probability layout, plus the omitted
/// last-outcome projector of every basis.
class ProjectorList {
 public:
  explicit ProjectorList(const MubSet& mub);

  int dim() const { return layout_.dim(); }
  const ProbabilityLayout& layout() const { return layout_; }
  std::size_t size() const { return flat_.size(); }

  const CMatrix& operator[](std::size_t i) const { return flat_.at(i); }
  /// Any outcome 0 .. d-1, including the omitted one.
  const CMatrix& at(int basis, int outcome) const;
  const std::vector<CMatrix>& flat() const { return flat_; }

 private:
  ProbabilityLayout layout_;
  std::vector<CMatrix> flat_;
  std::vector<CMatrix> omitted_;
};

inline ProjectorList projectors(const MubSet& mub) { return ProjectorList(mub); }

}  // namespace ontic
