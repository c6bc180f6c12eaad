#pragma once

#include <vector>

#include "lieblab/matrix.hpp"

namespace lieblab {

/// Spectral decomposition A = V diag(eigenvalues) V* with eigenvalues sorted
/// ascending and orthonormal eigenvector columns.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization with complex Givens rotations.
/// Throws std::runtime_error if the sweep cap (30) is exceeded.
EigenDecomposition eig_hermitian(const HermitianMatrix& a);

std::vector<double> eigenvalues_of(const HermitianMatrix& a);

enum class Side { Smallest, Largest };

/// Sum of the k smallest (or largest) eigenvalues.
double sum_extremal_eigs(const HermitianMatrix& a, int k, Side side);

}  // namespace lieblab
