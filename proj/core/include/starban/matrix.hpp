#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace starban::num {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense complex matrix, row-major storage. Zero-row / zero-column shapes are
/// first-class; they carry morphisms that touch the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Complex>& entries() noexcept { return entries_; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  std::vector<Complex> column(std::size_t j) const;
  std::vector<Complex> row(std::size_t i) const;

  bool all_finite() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Standard product; throws std::invalid_argument on inner-dimension mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(Complex s, const Matrix& a);

Matrix adjoint(const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix conjugate(const Matrix& a);

/// Kronecker product with the repo-wide index convention: the left factor is
/// the major index on both rows and columns.
Matrix kron(const Matrix& a, const Matrix& b);

/// sqrt of the sum of squared entry moduli; 0 for empty shapes.
double frobenius_norm(const Matrix& a);

double max_abs_diff(const Matrix& a, const Matrix& b);

std::vector<Complex> apply(const Matrix& a, const std::vector<Complex>& v);

double norm2(const std::vector<Complex>& v);
Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b);  // conj-linear in a

}  // namespace starban::num
