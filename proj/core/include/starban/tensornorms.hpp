#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starban/matrix.hpp"

namespace starban::tensornorms {

// Element sum_{i,j} coeffs(i,j) e_i (tensor) e_j of l2(n) (tensor) l2(m).
struct TensorElement {
  std::size_t n = 0;
  std::size_t m = 0;
  num::Matrix coeffs;  // n x m
};

TensorElement make_element(num::Matrix coeffs);

struct ElementaryPair {
  std::vector<num::Complex> left;   // in l2(n)
  std::vector<num::Complex> right;  // in l2(m)
};

// Two-sided bracket for the projective norm. The upper witness is an exact
// decomposition into elementary tensors whose cost sum equals `value` from
// above; the lower witness is a dual matrix of injective norm one whose
// pairing with the element reaches `value` from below.
struct NormCertificate {
  double value = 0.0;
  std::vector<ElementaryPair> upper_witness;
  num::Matrix lower_witness;
  double gap = 0.0;  // upper bound minus lower bound
};

// Norm of the image in l2(n*m): the Frobenius norm of the coefficients.
double hilbert_norm(const TensorElement& t);

NormCertificate projective_norm(const TensorElement& t, double tol = 1e-9);

double injective_norm(const TensorElement& t, double tol = 1e-9);

// Cost sum of the upper witness and reconstruction residual against t.
double upper_witness_cost(const NormCertificate& c);
double upper_witness_residual(const NormCertificate& c, const TensorElement& t);

// Pairing sum_{i,j} t(i,j) * conj(w(i,j)) used by the lower witness.
num::Complex dual_pairing(const num::Matrix& t, const num::Matrix& w);

struct CorrectionWitness {
  TensorElement element;
  NormCertificate projective;
  double hilbert = 0.0;
  double injective = 0.0;
  double ratio = 0.0;  // projective / hilbert
  bool strict_contraction = false;
  std::string note;
};

// Embedded identity of dimension min(n, m), exhibiting ratio sqrt(min(n, m)):
// the canonical map l2(n) (tensor) l2(m) -> l2(n*m) strictly shrinks it.
CorrectionWitness correction_witness(std::size_t n, std::size_t m);

struct DirectionReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double min_ratio_projective_hilbert = 0.0;
  double min_ratio_hilbert_injective = 0.0;
};

// Seeded random tensors, asserting projective >= hilbert >= injective
// within 1e-12 slack; the run itself is the oracle.
DirectionReport contraction_direction_check(std::size_t samples, std::size_t maxdim,
                                            std::uint64_t seed);

}  // namespace starban::tensornorms
