#include "starban/tensornorms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "starban/rng.hpp"
#include "starban/svd.hpp"

namespace starban::tensornorms {

using num::Complex;
using num::Matrix;

TensorElement make_element(Matrix coeffs) {
  TensorElement t;
  t.n = coeffs.rows();
  t.m = coeffs.cols();
  t.coeffs = std::move(coeffs);
  return t;
}

double hilbert_norm(const TensorElement& t) { return num::frobenius_norm(t.coeffs); }

double injective_norm(const TensorElement& t, double tol) {
  return num::spectral_norm(t.coeffs, tol);
}

Complex dual_pairing(const Matrix& t, const Matrix& w) {
  if (t.rows() != w.rows() || t.cols() != w.cols())
    throw std::invalid_argument("dual_pairing: shape mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < t.entries().size(); ++i)
    s += t.entries()[i] * std::conj(w.entries()[i]);
  return s;
}

NormCertificate projective_norm(const TensorElement& t, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("projective_norm: tol must be positive");
  num::SvdResult s = num::svd(t.coeffs, std::min(tol, 1e-12));

  NormCertificate cert;
  double total = 0.0;
  for (double sv : s.singulars) total += sv;
  cert.value = total;

  // Upper witness: t = sum_i (s_i u_i) (tensor) conj(v_i), with cost sum
  // equal to the sum of singular values.
  for (std::size_t i = 0; i < s.singulars.size(); ++i) {
    if (s.singulars[i] <= 0.0) continue;
    ElementaryPair pair;
    pair.left.resize(t.n);
    pair.right.resize(t.m);
    for (std::size_t a = 0; a < t.n; ++a) pair.left[a] = s.singulars[i] * s.left(a, i);
    for (std::size_t b = 0; b < t.m; ++b) pair.right[b] = std::conj(s.right(b, i));
    cert.upper_witness.push_back(std::move(pair));
  }

  // Lower witness: W = U V^H has injective norm exactly one (or is empty in
  // the degenerate case) and pairs with t to the sum of singular values.
  cert.lower_witness = matmul(s.left, num::adjoint(s.right));

  const double upper = upper_witness_cost(cert);
  const double lower = std::abs(dual_pairing(t.coeffs, cert.lower_witness));
  cert.gap = upper - lower;
  return cert;
}

double upper_witness_cost(const NormCertificate& c) {
  double total = 0.0;
  for (const ElementaryPair& p : c.upper_witness)
    total += num::norm2(p.left) * num::norm2(p.right);
  return total;
}

double upper_witness_residual(const NormCertificate& c, const TensorElement& t) {
  Matrix rebuilt(t.n, t.m);
  for (const ElementaryPair& p : c.upper_witness) {
    if (p.left.size() != t.n || p.right.size() != t.m)
      throw std::invalid_argument("upper_witness_residual: witness shape mismatch");
    for (std::size_t a = 0; a < t.n; ++a)
      for (std::size_t b = 0; b < t.m; ++b) rebuilt(a, b) += p.left[a] * p.right[b];
  }
  return num::frobenius_norm(rebuilt - t.coeffs);
}

CorrectionWitness correction_witness(std::size_t n, std::size_t m) {
  if (n < 2 || m < 2)
    throw std::invalid_argument(
        "correction_witness: both dimensions must be at least 2 (rank-1 regime has no gap)");
  const std::size_t d = std::min(n, m);
  Matrix coeffs(n, m);
  for (std::size_t i = 0; i < d; ++i) coeffs(i, i) = Complex{1.0, 0.0};

  CorrectionWitness w;
  w.element = make_element(std::move(coeffs));
  w.projective = projective_norm(w.element);
  w.hilbert = hilbert_norm(w.element);
  w.injective = injective_norm(w.element);
  w.ratio = w.projective.value / w.hilbert;
  w.strict_contraction = w.ratio > 1.0 + 1e-9;
  w.note =
      "The canonical map l2(" + std::to_string(n) + ") (tensor) l2(" + std::to_string(m) +
      ") -> l2(" + std::to_string(n * m) +
      ") sends this element of projective norm " + std::to_string(w.projective.value) +
      " to a vector of norm " + std::to_string(w.hilbert) +
      ": a strict contraction on it, so the map is not an isometric isomorphism. "
      "The shrink factor grows as the square root of the embedded dimension, "
      "so no uniform two-sided bound exists across dimensions.";
  return w;
}

DirectionReport contraction_direction_check(std::size_t samples, std::size_t maxdim,
                                            std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("contraction_direction_check: samples must be at least 1");
  if (maxdim < 1)
    throw std::invalid_argument("contraction_direction_check: maxdim must be at least 1");

  DirectionReport report;
  report.samples = samples;
  double min_ph = std::numeric_limits<double>::infinity();
  double min_hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    num::Rng rng(seed + i);
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(maxdim));
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(maxdim));
    TensorElement t = make_element(num::random_matrix(rng, n, m));
    const double proj = projective_norm(t).value;
    const double hil = hilbert_norm(t);
    const double inj = injective_norm(t);
    if (proj < hil - 1e-12 || hil < inj - 1e-12) ++report.violations;
    if (hil > 0.0) min_ph = std::min(min_ph, proj / hil);
    if (inj > 0.0) min_hi = std::min(min_hi, hil / inj);
  }
  report.min_ratio_projective_hilbert = min_ph;
  report.min_ratio_hilbert_injective = min_hi;
  return report;
}

}  // namespace starban::tensornorms
