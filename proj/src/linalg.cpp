#include "ontic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ontic/error.hpp"

namespace ontic {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::outer(const ComplexVector& v) {
  CMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.n_ != n_) throw InputError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (other.n_ != n_) throw InputError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(double s) {
  for (auto& x : a_) x *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.size() != b.size()) throw InputError("matrix size mismatch");
  const std::size_t n = a.size();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = std::conj((*this)(j, i));
  return m;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double hermiticity_defect(const CMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

Complex trace_product(const CMatrix& a, const CMatrix& b) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) t += a(i, k) * b(k, i);
  return t;
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const CMatrix& h) {
  if (hermiticity_defect(h) > kHermitianTolerance)
    throw InputError("matrix is not Hermitian");
  const std::size_t n = h.size();

  // Symmetrize so rounding in the input cannot bias the rotations.
  CMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  CMatrix v = CMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= kOffDiagonalTarget; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g < 1e-300) continue;
        // Phase-rotate q so the (p,q) entry is real, then apply a real Jacobi
        // rotation. The combined unitary acts on columns p, q as
        //   [[c, s], [-conj(e) s, conj(e) c]].
        const Complex e = a(p, q) / g;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex ce = std::conj(e);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - ce * s * akq;
          a(k, q) = s * akp + ce * c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - e * s * aqk;
          a(q, k) = s * apk + e * c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - ce * s * vkq;
          v(k, q) = s * vkp + ce * c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  for (std::size_t k : order) {
    out.values.push_back(a(k, k).real());
    ComplexVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v(i, k);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

EigenPair min_eigenpair(const CMatrix& h) {
  auto eig = hermitian_eigen(h);
  if (eig.values.empty()) return {};
  return {eig.values.front(), std::move(eig.vectors.front())};
}

double min_eigenvalue(const CMatrix& h) { return min_eigenpair(h).value; }

}  // namespace ontic
