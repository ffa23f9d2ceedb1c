#include "starban/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace starban::num {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("Matrix: entry count does not match rows*cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
  return m;
}

std::vector<Complex> Matrix::column(std::size_t j) const {
  std::vector<Complex> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<Complex> Matrix::row(std::size_t i) const {
  std::vector<Complex> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

bool Matrix::all_finite() const {
  for (const Complex& z : entries_)
    if (!is_finite(z)) return false;
  return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: inner dimensions do not match");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix add: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] += b.entries()[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sub: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] -= b.entries()[i];
  return out;
}

Matrix scale(Complex s, const Matrix& a) {
  Matrix out = a;
  for (Complex& z : out.entries()) z *= s;
  return out;
}

Matrix adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix conjugate(const Matrix& a) {
  Matrix out = a;
  for (Complex& z : out.entries()) z = std::conj(z);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex f = a(ia, ja);
      if (f == Complex{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return out;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

std::vector<Complex> apply(const Matrix& a, const std::vector<Complex>& v) {
  if (v.size() != a.cols())
    throw std::invalid_argument("apply: vector length does not match matrix columns");
  std::vector<Complex> out(a.rows(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: length mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace starban::num
