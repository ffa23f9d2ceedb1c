#include "starban/spaces.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "starban/svd.hpp"

namespace starban::spaces {

using num::Complex;
using num::Matrix;

SpaceExpr scalar() { return SpaceExpr{Kind::Scalar, 0, {}}; }
SpaceExpr l2(std::size_t n) { return SpaceExpr{Kind::L2, n, {}}; }
SpaceExpr sum1(std::vector<SpaceExpr> c) { return SpaceExpr{Kind::SumL1, 0, std::move(c)}; }
SpaceExpr sum2(std::vector<SpaceExpr> c) { return SpaceExpr{Kind::SumL2, 0, std::move(c)}; }
SpaceExpr sup(std::vector<SpaceExpr> c) { return SpaceExpr{Kind::ProdSup, 0, std::move(c)}; }
SpaceExpr dual(SpaceExpr inner) {
  return SpaceExpr{Kind::Dual, 0, std::vector<SpaceExpr>{std::move(inner)}};
}

std::size_t dim(const SpaceExpr& s) {
  switch (s.kind) {
    case Kind::Scalar:
      return 1;
    case Kind::L2:
      return s.n;
    case Kind::Dual:
      return dim(s.children.front());
    case Kind::SumL1:
    case Kind::SumL2:
    case Kind::ProdSup: {
      std::size_t total = 0;
      for (const SpaceExpr& c : s.children) total += dim(c);
      return total;
    }
  }
  return 0;
}

Vector make_vector(SpaceExpr space, std::vector<Complex> coords) {
  if (coords.size() != dim(space))
    throw std::invalid_argument("make_vector: coordinate count does not match dimension");
  return Vector{std::move(space), std::move(coords)};
}

namespace {

double norm_rec(const SpaceExpr& s, const Complex*& cursor) {
  switch (s.kind) {
    case Kind::Scalar:
      return std::abs(*cursor++);
    case Kind::L2: {
      double acc = 0.0;
      for (std::size_t i = 0; i < s.n; ++i) acc += std::norm(*cursor++);
      return std::sqrt(acc);
    }
    case Kind::SumL1: {
      double acc = 0.0;
      for (const SpaceExpr& c : s.children) acc += norm_rec(c, cursor);
      return acc;
    }
    case Kind::SumL2: {
      double acc = 0.0;
      for (const SpaceExpr& c : s.children) {
        const double t = norm_rec(c, cursor);
        acc += t * t;
      }
      return std::sqrt(acc);
    }
    case Kind::ProdSup: {
      double acc = 0.0;
      for (const SpaceExpr& c : s.children) acc = std::max(acc, norm_rec(c, cursor));
      return acc;
    }
    case Kind::Dual: {
      const SpaceExpr d = dual_space(s.children.front());
      return norm_rec(d, cursor);
    }
  }
  return 0.0;
}

}  // namespace

double norm(const SpaceExpr& s, const std::vector<Complex>& coords) {
  if (coords.size() != dim(s))
    throw std::invalid_argument("norm: coordinate count does not match space dimension");
  const Complex* cursor = coords.data();
  return norm_rec(s, cursor);
}

double norm(const SpaceExpr& s, const Vector& v) {
  if (dim(v.space) != dim(s))
    throw std::invalid_argument("norm: vector space does not match the given space");
  return norm(s, v.coords);
}

SpaceExpr dual_space(const SpaceExpr& s) {
  switch (s.kind) {
    case Kind::Scalar:
    case Kind::L2:
      return s;
    case Kind::Dual:
      return s.children.front();
    case Kind::SumL1:
    case Kind::SumL2:
    case Kind::ProdSup: {
      std::vector<SpaceExpr> dc;
      dc.reserve(s.children.size());
      for (const SpaceExpr& c : s.children) dc.push_back(dual_space(c));
      Kind k = s.kind == Kind::SumL1   ? Kind::ProdSup
               : s.kind == Kind::ProdSup ? Kind::SumL1
                                         : Kind::SumL2;
      return SpaceExpr{k, 0, std::move(dc)};
    }
  }
  return s;
}

bool is_l2_type(const SpaceExpr& s) {
  switch (s.kind) {
    case Kind::Scalar:
    case Kind::L2:
      return true;
    case Kind::Dual:
      return is_l2_type(dual_space(s.children.front()));
    case Kind::SumL2: {
      for (const SpaceExpr& c : s.children)
        if (!is_l2_type(c)) return false;
      return true;
    }
    case Kind::SumL1:
    case Kind::ProdSup: {
      // With at most one child of positive dimension, all three combiners
      // coincide with that child's norm.
      std::size_t live = 0;
      for (const SpaceExpr& c : s.children) {
        if (dim(c) == 0) continue;
        ++live;
        if (live > 1 || !is_l2_type(c)) return false;
      }
      return true;
    }
  }
  return false;
}

std::string to_string(const SpaceExpr& s) {
  auto join = [](const char* head, const std::vector<SpaceExpr>& cs) {
    std::string out = head;
    out += '(';
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) out += ',';
      out += to_string(cs[i]);
    }
    out += ')';
    return out;
  };
  switch (s.kind) {
    case Kind::Scalar:
      return "C";
    case Kind::L2:
      return "l2(" + std::to_string(s.n) + ")";
    case Kind::SumL1:
      return join("sum1", s.children);
    case Kind::SumL2:
      return join("sum2", s.children);
    case Kind::ProdSup:
      return join("sup", s.children);
    case Kind::Dual:
      return join("dual", s.children);
  }
  return "";
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  SpaceExpr run() {
    SpaceExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool try_consume(const std::string& word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ch)
      throw parse_error(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw parse_error("expected a number", pos_);
    return value;
  }

  std::vector<SpaceExpr> child_list() {
    expect('(');
    std::vector<SpaceExpr> out;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return out;
    }
    out.push_back(expr());
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        out.push_back(expr());
        continue;
      }
      expect(')');
      return out;
    }
  }

  SpaceExpr expr() {
    skip_ws();
    // Longest keywords first so sum1/sum2 are not shadowed by a shorter match.
    if (try_consume("sum1")) return sum1(child_list());
    if (try_consume("sum2")) return sum2(child_list());
    if (try_consume("sup")) return sup(child_list());
    if (try_consume("dual")) {
      expect('(');
      SpaceExpr inner = expr();
      expect(')');
      return dual(std::move(inner));
    }
    if (try_consume("l2")) {
      expect('(');
      const std::size_t n = number();
      expect(')');
      return l2(n);
    }
    if (try_consume("C")) return scalar();
    throw parse_error("expected a space expression", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpaceExpr parse_space(const std::string& text) { return Parser(text).run(); }

Complex pairing(const std::vector<Complex>& v, const std::vector<Complex>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("pairing: length mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

namespace {

constexpr double kTiny = 1e-300;

struct ClimbResult {
  double ratio = 0.0;
  std::vector<Complex> v;
};

// Coordinate ascent on ratio(v) = norm(cod, map v) / norm(dom, v). The image
// vector is kept incrementally updated; each move perturbs one coordinate.
ClimbResult hill_climb(const Matrix& map, const SpaceExpr& dom, const SpaceExpr& cod,
                       std::vector<Complex> v) {
  const std::size_t n = v.size();
  double dn = norm(dom, v);
  if (dn < kTiny) return {0.0, std::move(v)};
  for (Complex& z : v) z /= dn;

  std::vector<Complex> w = num::apply(map, v);
  double best = norm(cod, w) / norm(dom, v);

  std::vector<Complex> w_try(w.size());
  double step = 1.0;
  int passes = 0;
  while (step > 1e-10 && passes < 400) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = step * std::max(1.0, std::abs(v[i]));
      const Complex cands[7] = {v[i] + d,
                                v[i] - d,
                                v[i] + Complex{0.0, d},
                                v[i] - Complex{0.0, d},
                                Complex{0.0, 0.0},
                                v[i] * (1.0 + step),
                                v[i] * (1.0 - step)};
      for (const Complex& cand : cands) {
        if (cand == v[i]) continue;
        const Complex delta = cand - v[i];
        const Complex saved = v[i];
        v[i] = cand;
        const double dn_try = norm(dom, v);
        v[i] = saved;
        if (dn_try < kTiny) continue;
        for (std::size_t r = 0; r < w.size(); ++r) w_try[r] = w[r] + delta * map(r, i);
        const double ratio = norm(cod, w_try) / dn_try;
        if (ratio > best * (1.0 + 1e-14)) {
          // The incremental image accumulates cancellation error across
          // accepted moves, so confirm the improvement against a freshly
          // computed image before taking it.
          v[i] = cand;
          std::vector<Complex> w_exact = num::apply(map, v);
          const double exact_ratio = norm(cod, w_exact) / dn_try;
          if (exact_ratio > best * (1.0 + 1e-14)) {
            best = exact_ratio;
            w = std::move(w_exact);
            improved = true;
          } else {
            v[i] = saved;
          }
        }
      }
    }
    ++passes;
    if (!improved) step *= 0.5;
  }
  return {best, std::move(v)};
}

}  // namespace

OperatorNormEstimate operator_norm_estimate(const Matrix& map, const SpaceExpr& dom,
                                            const SpaceExpr& cod, std::size_t restarts,
                                            std::uint64_t seed) {
  const std::size_t dd = dim(dom);
  const std::size_t dc = dim(cod);
  if (map.cols() != dd || map.rows() != dc)
    throw std::invalid_argument("operator_norm_estimate: matrix shape does not match spaces");
  if (restarts == 0)
    throw std::invalid_argument("operator_norm_estimate: restarts must be at least 1");

  if (dd == 0 || dc == 0)
    return OperatorNormEstimate{0.0, Vector{dom, std::vector<Complex>(dd)}};

  if (is_l2_type(dom) && is_l2_type(cod)) {
    num::SvdResult s = num::svd(map);
    std::vector<Complex> witness(dd, Complex{0.0, 0.0});
    double value = 0.0;
    if (!s.singulars.empty()) {
      value = s.singulars.front();
      witness = s.right.column(0);
    }
    return OperatorNormEstimate{value, Vector{dom, std::move(witness)}};
  }

  double best = 0.0;
  std::vector<Complex> best_v(dd, Complex{0.0, 0.0});
  for (std::size_t r = 0; r < restarts; ++r) {
    num::Rng rng(seed + r);
    std::vector<Complex> start(dd);
    for (Complex& z : start) z = rng.complex_gaussian();
    ClimbResult res = hill_climb(map, dom, cod, std::move(start));
    if (res.ratio > best) {
      best = res.ratio;
      best_v = std::move(res.v);
    }
  }
  const double dn = norm(dom, best_v);
  if (dn > kTiny)
    for (Complex& z : best_v) z /= dn;
  return OperatorNormEstimate{best, Vector{dom, std::move(best_v)}};
}

ContractionReport is_contraction(const Matrix& map, const SpaceExpr& dom,
                                 const SpaceExpr& cod, double tol, std::size_t restarts,
                                 std::uint64_t seed) {
  OperatorNormEstimate est = operator_norm_estimate(map, dom, cod, restarts, seed);
  ContractionReport report;
  report.estimate = est.value;
  report.contraction = est.value <= 1.0 + tol;
  if (!report.contraction) report.witness = std::move(est.witness);
  return report;
}

SpaceExpr random_space(num::Rng& rng, std::size_t max_dim, int max_depth) {
  if (max_dim == 0) return l2(0);
  if (max_depth <= 0 || max_dim == 1) {
    if (max_dim == 1) return rng.uniform() < 0.5 ? scalar() : l2(1);
    return l2(1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_dim)));
  }
  const double pick = rng.uniform();
  if (pick < 0.15) return scalar();
  if (pick < 0.35)
    return l2(1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_dim)));
  if (pick < 0.45) return dual(random_space(rng, max_dim, max_depth - 1));
  const double which = rng.uniform();
  const std::size_t parts = 2 + static_cast<std::size_t>(rng.uniform() * 2.0);
  std::vector<SpaceExpr> children;
  std::size_t budget = max_dim;
  for (std::size_t i = 0; i < parts && budget > 0; ++i) {
    const std::size_t share =
        (i + 1 == parts) ? budget
                         : 1 + static_cast<std::size_t>(rng.uniform() *
                                                        static_cast<double>(budget - 1));
    children.push_back(random_space(rng, share, max_depth - 1));
    budget -= dim(children.back());
  }
  if (which < 1.0 / 3.0) return sum1(std::move(children));
  if (which < 2.0 / 3.0) return sum2(std::move(children));
  return sup(std::move(children));
}

}  // namespace starban::spaces
