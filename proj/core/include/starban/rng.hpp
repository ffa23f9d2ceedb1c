#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "starban/matrix.hpp"

namespace starban::num {

// Deterministic random source. All distribution logic is written out here
// because std::uniform_real_distribution and std::normal_distribution are
// not guaranteed to produce identical streams across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform on [0, 1) with 53 bits of mantissa.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; caches the second output.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex{re, im};
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

// Haar-ish unitary: complex Gaussian matrix followed by Gram-Schmidt.
Matrix random_unitary(Rng& rng, std::size_t n);

}  // namespace starban::num
