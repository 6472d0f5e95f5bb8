#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace gskit {

using cplx = std::complex<double>;

// Dense row-major matrices sized for this toolkit: exact small-matrix
// algebra on 2x2/4x4 blocks plus Hermitian eigensolves and matrix
// exponentials up to the Fock-oracle dimensions (a few hundred to ~2000).

class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(int rows, int cols);
  RealMatrix(int rows, int cols, std::initializer_list<double> entries);

  static RealMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  const std::vector<double>& data() const { return a_; }

  RealMatrix transpose() const;
  RealMatrix operator*(const RealMatrix& o) const;
  RealMatrix operator+(const RealMatrix& o) const;
  RealMatrix operator-(const RealMatrix& o) const;
  RealMatrix operator*(double s) const;

  double max_abs() const;
  double frobenius() const;
  bool finite() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);
  static ComplexMatrix from_real(const RealMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  cplx operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  cplx* row(int i) { return a_.data() + size_t(i) * cols_; }
  const cplx* row(int i) const { return a_.data() + size_t(i) * cols_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cplx s) const;

  double max_abs() const;
  double frobenius() const;
  double one_norm() const;
  bool finite() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

// Determinant: exact cofactor/minor expansion for n <= 4, LU with partial
// pivoting beyond that. Throws ShapeError for non-square input.
double det(const RealMatrix& m);

// Inverse of a small real matrix by LU with partial pivoting.
RealMatrix inverse(const RealMatrix& m);

// Solve A X = B in place of returning A^-1 B (complex, partial pivoting).
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEig {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns, empty when not requested
};

// Hermitian eigensolver: Householder tridiagonalization followed by
// implicit-shift QL. Input must be Hermitian within tol::hermitian_check.
HermitianEig hermitian_eig(const ComplexMatrix& m, bool with_vectors = true);

// All eigenvalues (with multiplicity) of a square matrix of size <= 4,
// via the characteristic polynomial with Newton-polished roots.
std::vector<cplx> complex_eigvals(const ComplexMatrix& m);

// Matrix exponential by scaling-and-squaring with a Pade(13) core.
ComplexMatrix expm(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace gskit
