#include "lieblab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lieblab {

namespace {

constexpr int kMaxSweeps = 30;

double offdiag_abs_sum(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::abs(a(p, q));
  return s;
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix& input) {
  const std::size_t n = input.dim();
  ComplexMatrix a = input.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  if (n > 1) {
    bool converged = false;
    for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
      const double off = offdiag_abs_sum(a);
      if (off == 0.0) {
        converged = true;
        break;
      }
      // Early sweeps only rotate pairs above a coarse threshold.
      const double thresh = (sweep < 4) ? 0.2 * off / static_cast<double>(n * n) : 0.0;

      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const double apq_mag = std::abs(a(p, q));
          const double dp = a(p, p).real();
          const double dq = a(q, q).real();
          const double g = 100.0 * apq_mag;

          // Negligible against both diagonal entries: zero it out for good.
          if (sweep > 4 && std::abs(dp) + g == std::abs(dp) && std::abs(dq) + g == std::abs(dq)) {
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            continue;
          }
          if (apq_mag <= thresh) continue;

          // Phase that makes the (p,q) entry real, then a real Jacobi rotation.
          const cplx phase = a(p, q) / apq_mag;  // e^{i theta}
          const double h = dq - dp;
          double t;
          if (std::abs(h) + g == std::abs(h)) {
            t = apq_mag / h;
          } else {
            const double tau = 0.5 * h / apq_mag;
            t = 1.0 / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            if (tau < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const cplx sp = s * std::conj(phase);  // s e^{-i theta}

          // Column update: A <- A U with U the plane rotation on (p,q).
          for (std::size_t i = 0; i < n; ++i) {
            const cplx aip = a(i, p);
            const cplx aiq = a(i, q);
            a(i, p) = c * aip - sp * aiq;
            a(i, q) = s * aip + c * std::conj(phase) * aiq;
          }
          // Row update: A <- U* A.
          for (std::size_t j = 0; j < n; ++j) {
            const cplx apj = a(p, j);
            const cplx aqj = a(q, j);
            a(p, j) = c * apj - s * phase * aqj;
            a(q, j) = s * apj + c * phase * aqj;
          }
          // Restore the exact structure the rotation guarantees.
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = cplx(a(p, p).real(), 0.0);
          a(q, q) = cplx(a(q, q).real(), 0.0);

          for (std::size_t i = 0; i < n; ++i) {
            const cplx vip = v(i, p);
            const cplx viq = v(i, q);
            v(i, p) = c * vip - sp * viq;
            v(i, q) = s * vip + c * std::conj(phase) * viq;
          }
        }
      }
    }
    if (!converged && offdiag_abs_sum(a) != 0.0) {
      // One more chance: the final sweep may have cleaned everything.
      const double off = offdiag_abs_sum(a);
      const double diag_scale = [&] {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a(i, i).real()));
        return m;
      }();
      if (off > 1e-13 * std::max(diag_scale, 1e-300)) {
        throw std::runtime_error("eig_hermitian: sweep limit exceeded");
      }
    }
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i).real();

  // Stable ascending sort; ties keep solver output order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return eigs[i] < eigs[j]; });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = eigs[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<double> eigenvalues_of(const HermitianMatrix& a) {
  return eig_hermitian(a).eigenvalues;
}

double sum_extremal_eigs(const HermitianMatrix& a, int k, Side side) {
  const int n = static_cast<int>(a.dim());
  if (k < 1 || k > n) throw std::invalid_argument("sum_extremal_eigs: k out of range");
  const std::vector<double> eigs = eigenvalues_of(a);
  double s = 0.0;
  if (side == Side::Smallest) {
    for (int i = 0; i < k; ++i) s += eigs[i];
  } else {
    for (int i = 0; i < k; ++i) s += eigs[n - 1 - i];
  }
  return s;
}

}  // namespace lieblab
