#include "starban/starcomp.hpp"

#include <numeric>
#include <stdexcept>

namespace starban::starcomp {

std::string to_string(const CompletedObj& a) {
  if (a.infinite) return "inf";
  return "fin:" + std::to_string(a.dim);
}

CompletedObj tensor_obj(const CompletedObj& a, const CompletedObj& b) {
  if (!a.infinite && !b.infinite) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a.dim, b.dim, &out))
      throw std::overflow_error("tensor_obj: dimension overflow");
    return CompletedObj::fin(out);
  }
  if (!a.infinite && a.dim == 0) return CompletedObj::fin(0);
  if (!b.infinite && b.dim == 0) return CompletedObj::fin(0);
  return CompletedObj::inf();
}

CompletedObj dual_obj(const CompletedObj& a) {
  if (a.infinite) return CompletedObj::fin(0);
  if (a.dim == 0) return CompletedObj::inf();
  return a;
}

CompletedObj par_obj(const CompletedObj& a, const CompletedObj& b) {
  return dual_obj(tensor_obj(dual_obj(a), dual_obj(b)));
}

bool same_card(const HomCard& a, const HomCard& b) {
  const bool a_single = a.singleton || a.vect_dim == 0;
  const bool b_single = b.singleton || b.vect_dim == 0;
  if (a_single || b_single) return a_single == b_single;
  return a.vect_dim == b.vect_dim;
}

std::string to_string(const HomCard& a) {
  if (a.singleton) return "singleton";
  return "vect:" + std::to_string(a.vect_dim);
}

HomCard hom_card(const CompletedObj& a, const CompletedObj& b) {
  if (a.infinite || b.infinite) return HomCard::single();
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a.dim, b.dim, &out))
    throw std::overflow_error("hom_card: dimension overflow");
  return HomCard::vect(out);
}

std::size_t LawSuiteReport::total_checks() const {
  std::size_t n = 0;
  for (const LawCheck& law : laws) n += law.checks;
  return n;
}

std::size_t LawSuiteReport::total_failures() const {
  std::size_t n = 0;
  for (const LawCheck& law : laws) n += law.failures;
  return n;
}

namespace {

void record(LawCheck& law, bool ok, const std::string& detail) {
  ++law.checks;
  if (!ok) {
    ++law.failures;
    if (law.failing_cases.size() < 20) law.failing_cases.push_back(detail);
  }
}

}  // namespace

LawSuiteReport law_suite_completion(std::uint64_t max_fin) {
  if (max_fin < 2)
    throw std::invalid_argument("law_suite_completion: max_fin must be at least 2");

  std::vector<CompletedObj> objs;
  for (std::uint64_t n = 0; n <= max_fin; ++n) objs.push_back(CompletedObj::fin(n));
  objs.push_back(CompletedObj::inf());

  LawCheck comm{"tensor commutativity"};
  LawCheck assoc{"tensor associativity"};
  LawCheck unit{"tensor unit"};
  LawCheck invol{"dual involution"};
  LawCheck demorgan{"de Morgan"};
  LawCheck bijection{"star-autonomy cardinality bijection"};

  const CompletedObj one = CompletedObj::fin(1);
  for (const CompletedObj& a : objs) {
    record(unit,
           tensor_obj(one, a) == a && tensor_obj(a, one) == a,
           "unit at " + to_string(a));
    record(invol, dual_obj(dual_obj(a)) == a, "involution at " + to_string(a));
    for (const CompletedObj& b : objs) {
      record(comm, tensor_obj(a, b) == tensor_obj(b, a),
             to_string(a) + ", " + to_string(b));
      record(demorgan,
             dual_obj(tensor_obj(a, b)) == par_obj(dual_obj(a), dual_obj(b)),
             to_string(a) + ", " + to_string(b));
      for (const CompletedObj& c : objs) {
        const std::string triple =
            to_string(a) + ", " + to_string(b) + ", " + to_string(c);
        record(assoc,
               tensor_obj(tensor_obj(a, b), c) == tensor_obj(a, tensor_obj(b, c)),
               triple);
        const HomCard lhs = hom_card(tensor_obj(a, b), c);
        const HomCard rhs = hom_card(a, dual_obj(tensor_obj(b, dual_obj(c))));
        record(bijection, same_card(lhs, rhs), triple);
      }
    }
  }

  LawSuiteReport report;
  report.laws = {comm, assoc, unit, invol, demorgan, bijection};
  return report;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);  // den >= 1, so g >= 1
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce before multiplying to keep intermediate products small;
  // denominators are at least one, so both gcds are nonzero.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const std::int64_t n1 = a.num_ / g1;
  const std::int64_t d2 = b.den_ / g1;
  const std::int64_t n2 = b.num_ / g2;
  const std::int64_t d1 = a.den_ / g2;
  std::int64_t num = 0, den = 0;
  if (__builtin_mul_overflow(n1, n2, &num) || __builtin_mul_overflow(d1, d2, &den))
    throw std::overflow_error("Rational: product overflow");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.den() == 1) return std::to_string(q.num());
  return std::to_string(q.num()) + "/" + std::to_string(q.den());
}

PosRealObj PosRealObj::pos(const Rational& value) {
  if (value.num() <= 0)
    throw std::invalid_argument("PosRealObj: Pos requires a positive rational");
  return PosRealObj{Kind::Pos, value};
}

std::string to_string(const PosRealObj& a) {
  switch (a.kind) {
    case PosRealObj::Kind::Zero:
      return "0";
    case PosRealObj::Kind::Infty:
      return "inf";
    default:
      return to_string(a.q);
  }
}

PosRealObj posreal_tensor(const PosRealObj& a, const PosRealObj& b) {
  using Kind = PosRealObj::Kind;
  if (a.kind == Kind::Zero || b.kind == Kind::Zero) return PosRealObj::zero();
  if (a.kind == Kind::Infty || b.kind == Kind::Infty) return PosRealObj::infty();
  return PosRealObj::pos(a.q * b.q);
}

PosRealObj posreal_dual(const PosRealObj& a) {
  using Kind = PosRealObj::Kind;
  switch (a.kind) {
    case Kind::Zero:
      return PosRealObj::infty();
    case Kind::Infty:
      return PosRealObj::zero();
    default:
      return PosRealObj::pos(a.q.inverse());
  }
}

PosRealObj posreal_par(const PosRealObj& a, const PosRealObj& b) {
  return posreal_dual(posreal_tensor(posreal_dual(a), posreal_dual(b)));
}

LawSuiteReport law_suite_posreal(const std::vector<PosRealObj>& grid) {
  bool has_zero = false, has_one = false, has_inf = false;
  const PosRealObj one = PosRealObj::pos(Rational(1, 1));
  for (const PosRealObj& a : grid) {
    if (a == PosRealObj::zero()) has_zero = true;
    if (a == one) has_one = true;
    if (a == PosRealObj::infty()) has_inf = true;
  }
  if (!has_zero || !has_one || !has_inf)
    throw std::invalid_argument(
        "law_suite_posreal: grid must contain Zero, Pos(1), and Infty");

  LawCheck comm{"tensor commutativity"};
  LawCheck assoc{"tensor associativity"};
  LawCheck unit{"tensor unit"};
  LawCheck invol{"dual involution"};
  LawCheck demorgan{"de Morgan"};

  for (const PosRealObj& a : grid) {
    record(unit,
           posreal_tensor(one, a) == a && posreal_tensor(a, one) == a,
           "unit at " + to_string(a));
    record(invol, posreal_dual(posreal_dual(a)) == a,
           "involution at " + to_string(a));
    for (const PosRealObj& b : grid) {
      record(comm, posreal_tensor(a, b) == posreal_tensor(b, a),
             to_string(a) + ", " + to_string(b));
      record(demorgan,
             posreal_dual(posreal_tensor(a, b)) ==
                 posreal_par(posreal_dual(a), posreal_dual(b)),
             to_string(a) + ", " + to_string(b));
      for (const PosRealObj& c : grid)
        record(assoc,
               posreal_tensor(posreal_tensor(a, b), c) ==
                   posreal_tensor(a, posreal_tensor(b, c)),
               to_string(a) + ", " + to_string(b) + ", " + to_string(c));
    }
  }

  LawSuiteReport report;
  report.laws = {comm, assoc, unit, invol, demorgan};
  return report;
}

std::vector<PosRealObj> default_posreal_grid() {
  return {PosRealObj::zero(),          PosRealObj::pos(Rational(1, 4)),
          PosRealObj::pos(Rational(1, 2)), PosRealObj::pos(Rational(1, 1)),
          PosRealObj::pos(Rational(2, 1)), PosRealObj::pos(Rational(4, 1)),
          PosRealObj::infty()};
}

}  // namespace starban::starcomp
