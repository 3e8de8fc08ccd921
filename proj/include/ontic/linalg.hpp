#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ontic {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static CMatrix identity(std::size_t n);
  /// |v><v|
  static CMatrix outer(const ComplexVector& v);

  std::size_t size() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(double s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(double s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  CMatrix adjoint() const;
  Complex trace() const;
  /// max |a_ij|
  double max_abs() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

/// max_ij |A - A^dagger|
double hermiticity_defect(const CMatrix& a);

/// Tr(A B)
Complex trace_product(const CMatrix& a, const CMatrix& b);

/// <u|v>, conjugate-linear in u.
Complex inner(const ComplexVector& u, const ComplexVector& v);

struct EigenPair {
  double value = 0.0;
  ComplexVector vector;  // unit norm
};

struct EigenDecomposition {
  std::vector<double> values;          // ascending
  std::vector<ComplexVector> vectors;  // vectors[k] belongs to values[k]
};

/// Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations,
/// until the off-diagonal Frobenius norm drops below 1e-13. Throws InputError
/// when the matrix is not Hermitian within 1e-10.
EigenDecomposition hermitian_eigen(const CMatrix& h);

EigenPair min_eigenpair(const CMatrix& h);
double min_eigenvalue(const CMatrix& h);

}  // namespace ontic
