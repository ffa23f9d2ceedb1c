#pragma once

#include <vector>

#include "starban/matrix.hpp"

namespace starban::num {

// Full singular value decomposition m = left * diag(singulars) * adjoint(right).
// left is rows x k and right is cols x k with k = min(rows, cols); both have
// orthonormal columns and singulars is sorted in non-increasing order.
struct SvdResult {
  Matrix left;
  std::vector<double> singulars;
  Matrix right;
};

// One-sided Jacobi SVD. Throws numerical_error (with the achieved residual)
// if the rotation sweeps fail to converge or the reconstruction residual
// exceeds tol * max(1, frobenius_norm(m)).
SvdResult svd(const Matrix& m, double tol = 1e-12);

// Largest singular value; 0 for degenerate (zero-dimensional) shapes.
double spectral_norm(const Matrix& m, double tol = 1e-12);

// Sum of all singular values; 0 for degenerate shapes.
double nuclear_norm(const Matrix& m, double tol = 1e-12);

Matrix reconstruct(const SvdResult& s);

}  // namespace starban::num
