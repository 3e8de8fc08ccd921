#include <gtest/gtest.h>

#include <cmath>

#include "ontic/error.hpp"
#include "ontic/qstate.hpp"

using namespace ontic;

namespace {

QuantumState diag_state(std::vector<double> diag) {
  CMatrix rho(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) rho(i, i) = diag[i];
  return QuantumState(rho);
}

// Sum over every MUB vector of |<v|psi>|^4, straight from the basis vectors.
double fourth_moment_sum(const MubSet& mub, const ComplexVector& psi) {
  double s = 0;
  for (const auto& basis : mub.bases)
    for (const auto& v : basis) s += std::pow(std::norm(inner(v, psi)), 2);
  return s;
}

ComplexVector random_vector(int d, std::uint64_t seed) {
  const auto rho = random_pure_state(d, seed).rho();
  // recover a unit vector from the rank-one matrix: column with the largest diagonal
  std::size_t col = 0;
  for (std::size_t i = 1; i < rho.size(); ++i)
    if (rho(i, i).real() > rho(col, col).real()) col = i;
  ComplexVector v(rho.size());
  const double n = std::sqrt(rho(col, col).real());
  for (std::size_t i = 0; i < rho.size(); ++i) v[i] = rho(i, col) / n;
  return v;
}

}  // namespace

TEST(QuantumState, ValidatesInvariants) {
  CMatrix bad_trace(2);
  bad_trace(0, 0) = 1;
  bad_trace(1, 1) = 0.1;
  EXPECT_THROW(QuantumState{bad_trace}, InputError);

  CMatrix non_herm(2);
  non_herm(0, 0) = non_herm(1, 1) = 0.5;
  non_herm(0, 1) = 0.1;
  EXPECT_THROW(QuantumState{non_herm}, InputError);

  EXPECT_THROW(diag_state({1.5, -0.5}), InputError);
  EXPECT_NO_THROW(diag_state({1 + 1e-11, -1e-11}));
}

TEST(QuantumState, PurityOfPureAndMixed) {
  EXPECT_NEAR(QuantumState::pure({1, 0, 0}).purity(), 1.0, 1e-15);
  EXPECT_NEAR(QuantumState::maximally_mixed(3).purity(), 1.0 / 3, 1e-15);
}

TEST(BornProbabilities, MaximallyMixedQutrit) {
  const auto p = born_probabilities(QuantumState::maximally_mixed(3), build_mub(3));
  ASSERT_EQ(p.size(), 8u);
  for (double x : p.entries()) EXPECT_NEAR(x, 1.0 / 3, 1e-15);
}

TEST(BornProbabilities, FirstQutritBasisVector) {
  const auto mub = build_mub(3);
  const auto p = born_probabilities(QuantumState::pure(mub.vector(0, 0)), mub);
  EXPECT_NEAR(p[0], 1.0, 1e-15);
  EXPECT_NEAR(p[1], 0.0, 1e-15);
  for (std::size_t i = 2; i < 8; ++i) EXPECT_NEAR(p[i], 1.0 / 3, 1e-15);
  EXPECT_NEAR(p.omitted(0), 0.0, 1e-15);
}

TEST(BornProbabilities, QubitZeroState) {
  const auto p = born_probabilities(QuantumState::pure({1, 0}), build_mub(2));
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
  EXPECT_NEAR(p[2], 1.0, 1e-15);
}

TEST(BornProbabilities, DimensionMismatchRejected) {
  EXPECT_THROW(born_probabilities(QuantumState::maximally_mixed(2), build_mub(3)), InputError);
}

TEST(BornProbabilities, BlocksSumToOneAndLinear) {
  for (int d : {2, 3, 5}) {
    const auto mub = build_mub(d);
    const ProjectorList proj(mub);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto a = random_pure_state(d, seed);
      const auto b = random_pure_state(d, seed + 1000);
      const auto pa = born_probabilities(a, proj);
      for (int k = 0; k <= d; ++k) {
        double s = 0;
        for (int o = 0; o < d; ++o) s += pa.probability(k, o);
        EXPECT_NEAR(s, 1.0, 1e-12);
      }
      const auto pb = born_probabilities(b, proj);
      const auto pm = born_probabilities(mix(a, b, 0.3), proj);
      for (std::size_t i = 0; i < pm.size(); ++i) EXPECT_NEAR(pm[i], 0.3 * pa[i] + 0.7 * pb[i], 1e-12);
    }
  }
}

TEST(ProbabilityVector, RangeChecked) {
  EXPECT_THROW(ProbabilityVector(2, {0.5, 0.5}), InputError);
  EXPECT_THROW(ProbabilityVector(2, {0.5, 0.5, 1.1}), InputError);
  EXPECT_NO_THROW(ProbabilityVector(2, {0.5, 0.5, 1.0 + 1e-13}));
}

TEST(RandomPureState, PureAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = random_pure_state(3, seed);
    EXPECT_NEAR(a.purity(), 1.0, 1e-12);
    const auto b = random_pure_state(3, seed);
    EXPECT_EQ((a.rho() - b.rho()).max_abs(), 0.0);
  }
  EXPECT_GT((random_pure_state(3, 1).rho() - random_pure_state(3, 2).rho()).max_abs(), 1e-3);
}

TEST(RandomPureState, HaarMeanIsMaximallyMixed) {
  for (int d : {2, 3}) {
    const ProjectorList proj(build_mub(d));
    std::vector<double> mean(proj.size(), 0.0);
    const int n = 100000;
    for (int s = 0; s < n; ++s) {
      const auto p = born_probabilities(random_pure_state(d, static_cast<std::uint64_t>(s)), proj);
      for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += p[i] / n;
    }
    for (double m : mean) EXPECT_NEAR(m, 1.0 / d, 5e-3);
  }
}

// The identity sum p^2 = Tr rho^2 + 1 is first confirmed from raw overlaps.
TEST(PuritySphere, IdentityConfirmedFromOverlaps) {
  for (int d : {2, 3, 5}) {
    const auto mub = build_mub(d);
    for (std::uint64_t seed = 0; seed < 200; ++seed)
      EXPECT_NEAR(fourth_moment_sum(mub, random_vector(d, seed)), 2.0, 1e-12);
  }
}

TEST(PuritySphere, ResidualVanishes) {
  for (int d : {2, 3}) {
    const ProjectorList proj(build_mub(d));
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
      EXPECT_LE(std::abs(purity_sphere_residual(random_pure_state(d, seed), proj)), 1e-9);
  }
  EXPECT_NEAR(purity_sphere_residual(QuantumState::maximally_mixed(3), build_mub(3)), 0.0, 1e-15);
  const auto mixed = mix(random_pure_state(3, 4), QuantumState::maximally_mixed(3), 0.6);
  EXPECT_NEAR(purity_sphere_residual(mixed, build_mub(3)), 0.0, 1e-12);
}

TEST(BlochRadius, PureMixedAndPartial) {
  const auto mub = build_mub(2);
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    EXPECT_NEAR(bloch_radius(random_pure_state(2, seed), mub), 0.5, 1e-12);
  EXPECT_NEAR(bloch_radius(QuantumState::maximally_mixed(2), mub), 0.0, 1e-15);
  EXPECT_NEAR(bloch_radius(diag_state({0.75, 0.25}), mub), 0.25, 1e-15);
  EXPECT_THROW(bloch_radius(QuantumState::maximally_mixed(3), build_mub(3)), InputError);
}
