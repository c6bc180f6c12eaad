#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lieblab {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Entries are validated to be finite when
/// constructed from user data; arithmetic assumes well-formed operands.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix column(const std::vector<cplx>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<cplx>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;

  /// Columns [first, first+count) as a new rows x count matrix.
  ComplexMatrix columns(std::size_t first, std::size_t count) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);
ComplexMatrix operator*(double scalar, ComplexMatrix m);

/// Square complex matrix with exact conjugate symmetry, enforced at
/// construction by symmetrization. Diagonal entries are exactly real.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t dim);

  /// (M + M*)/2 for a square M.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);
  static HermitianMatrix diagonal(const std::vector<double>& d);
  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix zero(std::size_t n) { return HermitianMatrix(n); }

  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  cplx operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  double trace() const { return mat_.trace().real(); }
  double frobenius_norm() const { return mat_.frobenius_norm(); }

  HermitianMatrix& operator+=(const HermitianMatrix& rhs);
  HermitianMatrix& operator-=(const HermitianMatrix& rhs);
  HermitianMatrix& operator*=(double scalar);

 private:
  ComplexMatrix mat_;
};

HermitianMatrix operator+(HermitianMatrix lhs, const HermitianMatrix& rhs);
HermitianMatrix operator-(HermitianMatrix lhs, const HermitianMatrix& rhs);
HermitianMatrix operator*(double scalar, HermitianMatrix m);

/// (M + M*)/2. Errors on non-square input.
HermitianMatrix hermitize(const ComplexMatrix& m);

/// Solve A X = B by Gaussian elimination with partial pivoting.
/// Throws std::runtime_error when a pivot falls below a relative threshold.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);

double max_abs(const std::vector<double>& v);

}  // namespace lieblab
