#include "starban/rng.hpp"

#include <stdexcept>

namespace starban::num {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
  return m;
}

Matrix random_unitary(Rng& rng, std::size_t n) {
  if (n == 0) return Matrix(0, 0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix g = random_matrix(rng, n, n);
    bool ok = true;
    // Modified Gram-Schmidt on columns.
    for (std::size_t j = 0; j < n && ok; ++j) {
      for (std::size_t p = 0; p < j; ++p) {
        Complex proj{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(g(i, p)) * g(i, j);
        for (std::size_t i = 0; i < n; ++i) g(i, j) -= proj * g(i, p);
      }
      double nrm = 0.0;
      for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, j));
      nrm = std::sqrt(nrm);
      if (nrm < 1e-8) {
        ok = false;
        break;
      }
      for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm;
    }
    if (ok) return g;
  }
  throw std::runtime_error("random_unitary: degenerate Gaussian sample");
}

}  // namespace starban::num
