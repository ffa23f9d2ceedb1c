#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace starban::starcomp {

// Object of the completed category: a finite-dimensional space Fin(n) or the
// single adjoined infinite object. Fin(0) is the zero object, Fin(1) the
// tensor unit. Everything in this module is exact integer or rational
// arithmetic; no floating point.
struct CompletedObj {
  bool infinite = false;
  std::uint64_t dim = 0;  // meaningful only when infinite is false

  static CompletedObj fin(std::uint64_t n) { return CompletedObj{false, n}; }
  static CompletedObj inf() { return CompletedObj{true, 0}; }

  friend bool operator==(const CompletedObj& a, const CompletedObj& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || a.dim == b.dim;
  }
};

std::string to_string(const CompletedObj& a);

// Tensor on objects: finite dimensions multiply, the infinite object absorbs
// every nonzero partner, and the zero object annihilates even the infinite
// one.
CompletedObj tensor_obj(const CompletedObj& a, const CompletedObj& b);

// Duality: finite nonzero objects are self-dual; the zero object and the
// infinite object are swapped.
CompletedObj dual_obj(const CompletedObj& a);

// Derived connective par(a, b) = dual(tensor(dual(a), dual(b))).
CompletedObj par_obj(const CompletedObj& a, const CompletedObj& b);

// Cardinality model of a hom-set: a complex vector space of some dimension,
// or a bare one-element set. VectDim(0) and Singleton both describe a
// one-element hom-set; they differ only in how they print.
struct HomCard {
  bool singleton = false;
  std::uint64_t vect_dim = 0;  // meaningful only when singleton is false

  static HomCard vect(std::uint64_t d) { return HomCard{false, d}; }
  static HomCard single() { return HomCard{true, 0}; }
};

// Equality as element counts: VectDim(0) and Singleton agree.
bool same_card(const HomCard& a, const HomCard& b);

std::string to_string(const HomCard& a);

// Hom-sets between finite objects form matrix spaces; any hom touching the
// infinite object is a singleton.
HomCard hom_card(const CompletedObj& a, const CompletedObj& b);

struct LawCheck {
  std::string law;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> failing_cases;  // at most 20 retained
};

struct LawSuiteReport {
  std::vector<LawCheck> laws;
  std::size_t total_checks() const;
  std::size_t total_failures() const;
  bool passed() const { return total_failures() == 0; }
};

// Exhaustive law suite over the objects {Fin(0), ..., Fin(max_fin), Inf}:
// tensor commutativity and associativity, unit Fin(1), dual involution,
// de Morgan, and the cardinality form of the star-autonomy bijection
// hom(a (x) b, c) = hom(a, (b (x) c*)*) over all triples.
// Requires max_fin >= 2.
LawSuiteReport law_suite_completion(std::uint64_t max_fin);

// Exact rational with positive denominator, kept normalized by gcd.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational inverse() const;  // throws std::domain_error on zero

  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::string to_string(const Rational& q);

// The multiplicative positive reals with zero and infinity adjoined,
// restricted to rational points so every law check is exact.
struct PosRealObj {
  enum class Kind { Zero, Pos, Infty };
  Kind kind = Kind::Zero;
  Rational q;  // meaningful only when kind is Pos

  static PosRealObj zero() { return PosRealObj{Kind::Zero, Rational(1, 1)}; }
  static PosRealObj pos(const Rational& value);  // requires value > 0
  static PosRealObj infty() { return PosRealObj{Kind::Infty, Rational(1, 1)}; }

  friend bool operator==(const PosRealObj& a, const PosRealObj& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::Pos || a.q == b.q;
  }
};

std::string to_string(const PosRealObj& a);

// Tensor is rational multiplication; zero absorbs everything, including
// infinity, while infinity absorbs every nonzero partner.
PosRealObj posreal_tensor(const PosRealObj& a, const PosRealObj& b);

// Dual is the reciprocal, swapping zero and infinity.
PosRealObj posreal_dual(const PosRealObj& a);

PosRealObj posreal_par(const PosRealObj& a, const PosRealObj& b);

// Commutativity, associativity, unit Pos(1), involution, and de Morgan over
// the given grid, exactly. The grid must contain Zero, Pos(1), and Infty.
LawSuiteReport law_suite_posreal(const std::vector<PosRealObj>& grid);

// {0, 1/4, 1/2, 1, 2, 4, infinity}
std::vector<PosRealObj> default_posreal_grid();

}  // namespace starban::starcomp
