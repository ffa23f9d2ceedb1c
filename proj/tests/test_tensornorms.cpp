#include <cmath>

#include "decomp_oracle.hpp"
#include "doctest.h"
#include "starban/matrix.hpp"
#include "starban/rng.hpp"
#include "starban/svd.hpp"
#include "starban/tensornorms.hpp"

using namespace starban;
using namespace starban::tensornorms;
using num::Complex;
using num::Matrix;

TEST_CASE("pinned norm values") {
  TensorElement id2 = make_element(Matrix::identity(2));
  CHECK(hilbert_norm(id2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(injective_norm(id2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(projective_norm(id2).value == doctest::Approx(2.0).epsilon(1e-12));

  Matrix d(2, 2);
  d(0, 0) = Complex{3.0, 0.0};
  d(1, 1) = Complex{4.0, 0.0};
  TensorElement td = make_element(d);
  CHECK(hilbert_norm(td) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(injective_norm(td) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(projective_norm(td).value == doctest::Approx(7.0).epsilon(1e-12));

  Matrix e11(2, 2);
  e11(0, 0) = Complex{1.0, 0.0};
  TensorElement te = make_element(e11);
  CHECK(hilbert_norm(te) == doctest::Approx(1.0));
  CHECK(injective_norm(te) == doctest::Approx(1.0));
  CHECK(projective_norm(te).value == doctest::Approx(1.0));
}

TEST_CASE("certificate sandwich on seeded inputs up to 8x8") {
  num::Rng rng(92);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 8.0);
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 8.0);
    TensorElement t = make_element(num::random_matrix(rng, n, m));
    NormCertificate cert = projective_norm(t);

    const double upper = upper_witness_cost(cert);
    const double lower = std::abs(dual_pairing(t.coeffs, cert.lower_witness));
    const double scale = 1.0 + cert.value;
    CHECK(lower <= cert.value + 1e-9 * scale);
    CHECK(cert.value <= upper + 1e-9 * scale);
    CHECK(cert.gap >= -1e-12 * scale);
    CHECK(cert.gap <= 1e-9 * scale);

    CHECK(upper_witness_residual(cert, t) <= 1e-9 * std::max(1.0, hilbert_norm(t)));
    CHECK(num::spectral_norm(cert.lower_witness) <= 1.0 + 1e-9);
    CHECK(lower == doctest::Approx(cert.value).epsilon(1e-9));
  }
}

TEST_CASE("elementary tensors collapse all three norms") {
  num::Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 5.0);
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 5.0);
    Matrix x = num::random_matrix(rng, n, 1);
    Matrix y = num::random_matrix(rng, 1, m);
    TensorElement t = make_element(matmul(x, y));
    const double expected = num::frobenius_norm(x) * num::frobenius_norm(y);
    CHECK(projective_norm(t).value == doctest::Approx(expected).epsilon(1e-9));
    CHECK(hilbert_norm(t) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(injective_norm(t) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("one-dimensional factor forces projective equal to hilbert") {
  num::Rng rng(27);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 6.0);
    TensorElement t = make_element(num::random_matrix(rng, n, 1));
    CHECK(projective_norm(t).value == doctest::Approx(hilbert_norm(t)).epsilon(1e-12));
  }
}

TEST_CASE("embedded identity ratio is sqrt(d)") {
  for (std::size_t d = 2; d <= 8; ++d) {
    Matrix coeffs(d, d);
    for (std::size_t i = 0; i < d; ++i) coeffs(i, i) = Complex{1.0, 0.0};
    TensorElement t = make_element(std::move(coeffs));
    const double ratio = projective_norm(t).value / hilbert_norm(t);
    CHECK(ratio == doctest::Approx(std::sqrt(static_cast<double>(d))).epsilon(1e-9));
  }
}

TEST_CASE("unitary invariance of the three norms") {
  num::Rng rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 4.0);
    TensorElement t = make_element(num::random_matrix(rng, n, n));
    Matrix u = num::random_unitary(rng, n);
    Matrix v = num::random_unitary(rng, n);
    TensorElement moved = make_element(matmul(u, matmul(t.coeffs, v)));
    CHECK(projective_norm(moved).value ==
          doctest::Approx(projective_norm(t).value).epsilon(1e-9));
    CHECK(hilbert_norm(moved) == doctest::Approx(hilbert_norm(t)).epsilon(1e-9));
    CHECK(injective_norm(moved) == doctest::Approx(injective_norm(t)).epsilon(1e-9));
  }
}

TEST_CASE("independent decomposition search brackets the certified value") {
  // Reduced restart budget here; the full-strength run lives in the
  // acceptance binary.
  num::Rng rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    const std::size_t m = trial == 1 ? 3 : 2;
    TensorElement t = make_element(num::random_matrix(rng, 2, m));
    const double certified = projective_norm(t).value;
    const double found = oracle::decomposition_search_min(t.coeffs, 800, 55 + trial);
    CHECK(found >= certified - 1e-9);
    CHECK(found <= certified + 1e-3);
  }
}

TEST_CASE("correction witness quantifies the norm gap") {
  CorrectionWitness w = correction_witness(2, 2);
  CHECK(w.ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(w.strict_contraction);
  CHECK(w.projective.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(w.hilbert == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  CorrectionWitness w33 = correction_witness(3, 3);
  CHECK(w33.ratio == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));

  CorrectionWitness w25 = correction_witness(2, 5);
  CHECK(w25.ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(w25.element.n == 2);
  CHECK(w25.element.m == 5);

  CHECK_THROWS_AS(correction_witness(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(correction_witness(3, 0), std::invalid_argument);
}

TEST_CASE("contraction direction check on seeded tensors") {
  DirectionReport r = contraction_direction_check(200, 6, 1234);
  CHECK(r.samples == 200);
  CHECK(r.violations == 0);
  CHECK(r.min_ratio_projective_hilbert >= 1.0 - 1e-12);
  CHECK(r.min_ratio_hilbert_injective >= 1.0 - 1e-12);
}

TEST_CASE("degenerate and zero elements") {
  TensorElement zero = make_element(Matrix(3, 2));
  NormCertificate cert = projective_norm(zero);
  CHECK(cert.value == 0.0);
  CHECK(upper_witness_residual(cert, zero) == 0.0);
  CHECK(num::spectral_norm(cert.lower_witness) <= 1.0 + 1e-9);

  TensorElement empty = make_element(Matrix(0, 4));
  CHECK(projective_norm(empty).value == 0.0);
  CHECK(hilbert_norm(empty) == 0.0);
  CHECK(injective_norm(empty) == 0.0);
}
