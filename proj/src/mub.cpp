#include "ontic/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ontic/error.hpp"

namespace ontic {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

namespace {

Complex root_of_unity(int d, long long power) {
  const long long r = ((power % d) + d) % d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

MubSet qubit() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  MubSet m{2, kQubitPauliConvention, {}};
  m.bases = {
      {{h, h}, {h, -h}},          // |+>, |->
      {{h, h * i}, {h, -h * i}},  // |+i>, |-i>
      {{1.0, 0.0}, {0.0, 1.0}},   // |0>, |1>
  };
  return m;
}

MubSet qutrit() {
  const double s = 1.0 / std::sqrt(3.0);
  const Complex w = root_of_unity(3, 1);
  const Complex w2 = root_of_unity(3, 2);
  const Complex one = 1.0;
  auto scaled = [s](ComplexVector v) {
    for (auto& x : v) x *= s;
    return v;
  };
  MubSet m{3, kQutritFixedConvention, {}};
  m.bases = {
      {{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}},
      {scaled({one, one, one}), scaled({w, one, w2}), scaled({w2, one, w})},
      {scaled({w, one, one}), scaled({one, w, one}), scaled({one, one, w})},
      {scaled({w2, one, one}), scaled({one, w2, one}), scaled({one, one, w2})},
  };
  return m;
}

MubSet ivanovic(int d) {
  MubSet m{d, kIvanovicConvention, {}};
  std::vector<ComplexVector> computational(d, ComplexVector(d, 0.0));
  for (int i = 0; i < d; ++i) computational[i][i] = 1.0;
  m.bases.push_back(std::move(computational));
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    std::vector<ComplexVector> basis;
    for (int j = 0; j < d; ++j) {
      ComplexVector v(d);
      for (long long n = 0; n < d; ++n) v[n] = s * root_of_unity(d, k * n * n + j * n);
      basis.push_back(std::move(v));
    }
    m.bases.push_back(std::move(basis));
  }
  return m;
}

}  // namespace

MubSet build_mub(int d) {
  if (d < 2 || !is_prime(d))
    throw InputError("prime required: dimension " + std::to_string(d) + " is not a prime >= 2");
  if (d == 2) return qubit();
  if (d == 3) return qutrit();
  return ivanovic(d);
}

MubValidation verify_mub(const MubSet& mub) {
  MubValidation r;
  const int d = mub.dim;
  r.count_ok = d >= 2 && static_cast<int>(mub.bases.size()) == d + 1;
  for (const auto& basis : mub.bases)
    if (static_cast<int>(basis.size()) != d) r.count_ok = false;
  if (!r.count_ok) return r;

  for (std::size_t k = 0; k < mub.bases.size(); ++k) {
    for (std::size_t mu = k; mu < mub.bases.size(); ++mu) {
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          const Complex ov = inner(mub.bases[k][i], mub.bases[mu][j]);
          if (k == mu) {
            const double target = i == j ? 1.0 : 0.0;
            r.orthonormality_deviation = std::max(r.orthonormality_deviation, std::abs(ov - target));
          } else {
            r.unbiasedness_deviation =
                std::max(r.unbiasedness_deviation, std::abs(std::norm(ov) - 1.0 / d));
          }
        }
      }
    }
  }
  r.pass = r.orthonormality_deviation <= 1e-12 && r.unbiasedness_deviation <= 1e-12;
  return r;
}

ProjectorList::ProjectorList(const MubSet& mub) : layout_(mub.dim) {
  if (!verify_mub(mub).count_ok) throw InputError("MUB set has the wrong shape");
  const int d = mub.dim;
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i + 1 < d; ++i) flat_.push_back(CMatrix::outer(mub.vector(k, i)));
    omitted_.push_back(CMatrix::outer(mub.vector(k, d - 1)));
  }
}

const CMatrix& ProjectorList::at(int basis, int outcome) const {
  if (outcome == dim() - 1) return omitted_.at(basis);
  return flat_.at(layout_.flat(basis, outcome));
}

}  // namespace ontic
