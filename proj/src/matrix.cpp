#include "lieblab/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lieblab {

namespace {

void check_finite(const std::vector<cplx>& entries) {
  for (const cplx& e : entries) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("entry count does not match rows*cols");
  }
  check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(const std::vector<cplx>& v) {
  ComplexMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace requires a square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::invalid_argument("column range out of bounds");
  ComplexMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  check_same_shape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  check_same_shape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (cplx& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(lhs.rows()) +
                                "x" + std::to_string(lhs.cols()) + " * " +
                                std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cplx lik = lhs(i, k);
      if (lik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(double scalar, ComplexMatrix m) { return m *= cplx(scalar, 0.0); }

HermitianMatrix::HermitianMatrix(std::size_t dim) : mat_(dim, dim) {}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermitize requires a square matrix");
  const std::size_t n = m.rows();
  HermitianMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h.mat_(i, i) = cplx(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h.mat_(i, j) = v;
      h.mat_(j, i) = std::conj(v);
    }
  }
  return h;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  HermitianMatrix h(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) h.mat_(i, i) = d[i];
  return h;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  return diagonal(std::vector<double>(n, 1.0));
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& rhs) {
  mat_ += rhs.mat_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& rhs) {
  mat_ -= rhs.mat_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double scalar) {
  mat_ *= cplx(scalar, 0.0);
  return *this;
}

HermitianMatrix operator+(HermitianMatrix lhs, const HermitianMatrix& rhs) { return lhs += rhs; }
HermitianMatrix operator-(HermitianMatrix lhs, const HermitianMatrix& rhs) { return lhs -= rhs; }
HermitianMatrix operator*(double scalar, HermitianMatrix m) { return m *= scalar; }

HermitianMatrix hermitize(const ComplexMatrix& m) { return HermitianMatrix::symmetrized(m); }

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square()) throw std::invalid_argument("solve requires a square system matrix");
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;

  double scale = 0.0;
  for (const cplx& e : lu.entries()) scale = std::max(scale, std::abs(e));
  const double pivot_floor = 1e-14 * std::max(scale, 1e-300);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(lu(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best <= pivot_floor) throw std::runtime_error("solve: matrix is numerically singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(col, j), x(pivot, j));
    }
    const cplx inv_piv = 1.0 / lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx f = lu(r, col) * inv_piv;
      if (f == cplx(0.0, 0.0)) continue;
      lu(r, col) = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(r, j) -= f * x(col, j);
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    const cplx inv_piv = 1.0 / lu(col, col);
    for (std::size_t j = 0; j < x.cols(); ++j) {
      cplx s = x(col, j);
      for (std::size_t k = col + 1; k < n; ++k) s -= lu(col, k) * x(k, j);
      x(col, j) = s * inv_piv;
    }
  }
  return x;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  return solve(a, ComplexMatrix::identity(a.rows()));
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace lieblab
