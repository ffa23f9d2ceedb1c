#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "starban/matrix.hpp"
#include "starban/rng.hpp"

namespace starban::spaces {

// Finite-dimensional Banach space built from the scalar field by three
// direct-sum constructions and duality. The three sums share the same
// underlying coordinate space and differ only in how child norms combine:
// SumL1 adds them, SumL2 takes the Euclidean combination, ProdSup the max.
enum class Kind { Scalar, L2, SumL1, SumL2, ProdSup, Dual };

struct SpaceExpr {
  Kind kind = Kind::Scalar;
  std::size_t n = 0;                // dimension parameter, used by L2 only
  std::vector<SpaceExpr> children;  // combinators; Dual holds exactly one

  friend bool operator==(const SpaceExpr&, const SpaceExpr&) = default;
};

SpaceExpr scalar();
SpaceExpr l2(std::size_t n);
SpaceExpr sum1(std::vector<SpaceExpr> children);
SpaceExpr sum2(std::vector<SpaceExpr> children);
SpaceExpr sup(std::vector<SpaceExpr> children);
SpaceExpr dual(SpaceExpr inner);

std::size_t dim(const SpaceExpr& s);

// Coordinates are ordered by depth-first traversal of the expression tree.
struct Vector {
  SpaceExpr space;
  std::vector<num::Complex> coords;
};

Vector make_vector(SpaceExpr space, std::vector<num::Complex> coords);

double norm(const SpaceExpr& s, const std::vector<num::Complex>& coords);
double norm(const SpaceExpr& s, const Vector& v);

// Structural dual: SumL1 and ProdSup exchange, SumL2 and L2 are self-dual,
// an explicit Dual node cancels (finite dimension).
SpaceExpr dual_space(const SpaceExpr& s);

// True when the norm of s provably equals the Euclidean norm of the
// coordinate vector; conservative (may return false on exotic but
// Euclidean expressions).
bool is_l2_type(const SpaceExpr& s);

std::string to_string(const SpaceExpr& s);

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Text grammar: C | l2(n) | sum1(e,...) | sum2(e,...) | sup(e,...) | dual(e).
// Whitespace-insensitive.
SpaceExpr parse_space(const std::string& text);

// Bilinear duality pairing sum_i v_i * w_i (no conjugation); w lives in the
// dual space, sharing the coordinate layout.
num::Complex pairing(const std::vector<num::Complex>& v,
                     const std::vector<num::Complex>& w);

struct OperatorNormEstimate {
  double value = 0.0;  // certified lower bound on the true operator norm
  Vector witness;      // unit dom-norm vector achieving `value`
};

// Lower-bound estimate of the operator norm of map : dom -> cod. Exact
// (via SVD) when both spaces carry the Euclidean norm; otherwise the max of
// `restarts` coordinate-ascent climbs from seeded random starts.
OperatorNormEstimate operator_norm_estimate(const num::Matrix& map,
                                            const SpaceExpr& dom,
                                            const SpaceExpr& cod,
                                            std::size_t restarts = 64,
                                            std::uint64_t seed = 0);

struct ContractionReport {
  bool contraction = false;
  double estimate = 0.0;
  Vector witness;  // violation witness when contraction is false
};

ContractionReport is_contraction(const num::Matrix& map, const SpaceExpr& dom,
                                 const SpaceExpr& cod, double tol = 1e-9,
                                 std::size_t restarts = 64, std::uint64_t seed = 0);

// Random expression of total dimension in [1, max_dim]; used by the law
// suites to sample the grammar.
SpaceExpr random_space(num::Rng& rng, std::size_t max_dim, int max_depth = 4);

}  // namespace starban::spaces
