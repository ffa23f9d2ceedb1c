#include "starban/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "starban/errors.hpp"

namespace starban::num {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOrthEps = 1e-14;

// Column-view helpers on a row-major matrix.
Complex col_dot(const Matrix& m, std::size_t p, std::size_t q) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < m.rows(); ++i) s += std::conj(m(i, p)) * m(i, q);
  return s;
}

double col_sqnorm(const Matrix& m, std::size_t p) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += std::norm(m(i, p));
  return s;
}

// Apply the unitary  [wp, wq] <- [wp, wq] * (P * J)  columnwise, where
// P = diag(1, pc) strips the phase of the column inner product and
// J = [[c, sr], [-sr, c]] is the real Jacobi rotation. The same operation
// is applied to the accumulated right factor.
void rotate_cols(Matrix& w, std::size_t p, std::size_t q, double c, double sr,
                 Complex pc) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    const Complex wp = w(i, p);
    const Complex wq = w(i, q);
    w(i, p) = c * wp - sr * pc * wq;
    w(i, q) = sr * wp + c * pc * wq;
  }
}

// Gram-Schmidt completion: replace (near-)zero columns of u by unit vectors
// orthonormal to the existing nonzero columns so the left factor always has
// orthonormal columns even when the matrix is rank deficient.
void complete_orthonormal(Matrix& u, const std::vector<bool>& is_zero) {
  const std::size_t n = u.rows();
  const std::size_t k = u.cols();
  std::size_t basis_try = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (!is_zero[j]) continue;
    bool placed = false;
    while (!placed && basis_try < n) {
      std::vector<Complex> cand(n, Complex{0.0, 0.0});
      cand[basis_try++] = Complex{1.0, 0.0};
      // Two rounds of classical Gram-Schmidt for numerical safety.
      for (int round = 0; round < 2; ++round) {
        for (std::size_t jj = 0; jj < k; ++jj) {
          if (jj == j || (is_zero[jj] && jj > j)) continue;
          Complex proj{0.0, 0.0};
          for (std::size_t i = 0; i < n; ++i) proj += std::conj(u(i, jj)) * cand[i];
          for (std::size_t i = 0; i < n; ++i) cand[i] -= proj * u(i, jj);
        }
      }
      const double nrm = norm2(cand);
      if (nrm > 1e-6) {
        for (std::size_t i = 0; i < n; ++i) u(i, j) = cand[i] / nrm;
        placed = true;
      }
    }
    if (!placed)
      throw numerical_error("svd: failed to complete orthonormal basis", 0.0);
  }
}

}  // namespace

SvdResult svd(const Matrix& m, double tol) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t k = std::min(rows, cols);

  if (k == 0) {
    return SvdResult{Matrix(rows, 0), std::vector<double>{}, Matrix(cols, 0)};
  }
  if (!m.all_finite()) throw std::invalid_argument("svd: matrix has non-finite entries");

  // The one-sided iteration orthogonalizes columns, so work on the side
  // with at least as many rows as columns and swap the factors back.
  if (rows < cols) {
    SvdResult s = svd(adjoint(m), tol);
    return SvdResult{std::move(s.right), std::move(s.singulars), std::move(s.left)};
  }

  Matrix w = m;                      // working copy, columns converge to sigma_j * u_j
  Matrix v = Matrix::identity(cols); // accumulates the right singular vectors

  const double scale = frobenius_norm(m);
  bool converged = (scale == 0.0);
  double worst_off = 0.0;

  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    worst_off = 0.0;
    for (std::size_t p = 0; p + 1 < cols; ++p)
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double a = col_sqnorm(w, p);
        const double b = col_sqnorm(w, q);
        const Complex g = col_dot(w, p, q);
        const double absg = std::abs(g);
        if (absg <= kOrthEps * std::sqrt(a * b) || absg == 0.0) continue;
        converged = false;
        worst_off = std::max(worst_off, absg);

        // Reduce the complex pair to the real Jacobi rotation via the phase of g.
        const Complex pc = std::conj(g / absg);
        const double tau = (b - a) / (2.0 * absg);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sr = t * c;

        rotate_cols(w, p, q, c, sr, pc);
        rotate_cols(v, p, q, c, sr, pc);
      }
  }

  if (!converged)
    throw numerical_error("svd: Jacobi sweeps did not converge", worst_off);

  // Extract singular values and normalize the left factor.
  std::vector<double> sig(cols);
  for (std::size_t j = 0; j < cols; ++j) sig[j] = std::sqrt(col_sqnorm(w, j));

  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&sig](std::size_t x, std::size_t y) { return sig[x] > sig[y]; });

  Matrix u(rows, k);
  Matrix right(cols, k);
  std::vector<double> singulars(k);
  std::vector<bool> is_zero(k, false);
  const double zero_cut = scale * 1e-15;
  for (std::size_t jj = 0; jj < k; ++jj) {
    const std::size_t src = order[jj];
    singulars[jj] = sig[src];
    if (sig[src] <= zero_cut) {
      is_zero[jj] = true;
      singulars[jj] = sig[src];  // keep the tiny value; u column filled below
      for (std::size_t i = 0; i < cols; ++i) right(i, jj) = v(i, src);
      continue;
    }
    for (std::size_t i = 0; i < rows; ++i) u(i, jj) = w(i, src) / sig[src];
    for (std::size_t i = 0; i < cols; ++i) right(i, jj) = v(i, src);
  }
  complete_orthonormal(u, is_zero);

  SvdResult result{std::move(u), std::move(singulars), std::move(right)};

  const Matrix rebuilt = reconstruct(result);
  const double residual = frobenius_norm(rebuilt - m);
  if (residual > tol * std::max(1.0, scale))
    throw numerical_error("svd: reconstruction residual too large", residual);

  return result;
}

double spectral_norm(const Matrix& m, double tol) {
  SvdResult s = svd(m, tol);
  return s.singulars.empty() ? 0.0 : s.singulars.front();
}

double nuclear_norm(const Matrix& m, double tol) {
  SvdResult s = svd(m, tol);
  return std::accumulate(s.singulars.begin(), s.singulars.end(), 0.0);
}

Matrix reconstruct(const SvdResult& s) {
  const std::size_t k = s.singulars.size();
  Matrix scaled = s.left;  // rows x k
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, j) *= s.singulars[j];
  return matmul(scaled, adjoint(s.right));
}

}  // namespace starban::num
