#include "starban/bancat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "starban/rng.hpp"
#include "starban/svd.hpp"

namespace starban::bancat {

using num::Complex;
using num::Matrix;
using spaces::SpaceExpr;

namespace {

void require_l2_triple(const SpaceExpr& a, const SpaceExpr& b, const SpaceExpr& c) {
  if (!spaces::is_l2_type(a) || !spaces::is_l2_type(b) || !spaces::is_l2_type(c))
    throw std::invalid_argument("bancat: expressions must carry the Euclidean norm");
}

std::vector<Complex> random_unit(num::Rng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  double s = 0.0;
  while (s < 1e-12) {
    for (Complex& z : v) z = rng.complex_gaussian();
    s = num::norm2(v);
  }
  for (Complex& z : v) z /= s;
  return v;
}

}  // namespace

Morphism curry(const SpaceExpr& a, const SpaceExpr& b, const SpaceExpr& c,
               const Matrix& f) {
  require_l2_triple(a, b, c);
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  const std::size_t dc = dim(c);
  if (f.rows() != dc || f.cols() != da * db)
    throw std::invalid_argument("curry: matrix shape does not match A (x) B -> C");
  Matrix g(db * dc, da);
  for (std::size_t ci = 0; ci < dc; ++ci)
    for (std::size_t ai = 0; ai < da; ++ai)
      for (std::size_t bi = 0; bi < db; ++bi)
        g(ci * db + bi, ai) = f(ci, ai * db + bi);
  return Morphism{a, spaces::l2(db * dc), std::move(g)};
}

Matrix uncurry(const SpaceExpr& a, const SpaceExpr& b, const SpaceExpr& c,
               const Matrix& g) {
  require_l2_triple(a, b, c);
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  const std::size_t dc = dim(c);
  if (g.rows() != db * dc || g.cols() != da)
    throw std::invalid_argument("uncurry: matrix shape does not match A -> [B, C]");
  Matrix f(dc, da * db);
  for (std::size_t ci = 0; ci < dc; ++ci)
    for (std::size_t ai = 0; ai < da; ++ai)
      for (std::size_t bi = 0; bi < db; ++bi)
        f(ci, ai * db + bi) = g(ci * db + bi, ai);
  return f;
}

Morphism star_autonomy_map(const SpaceExpr& a, const SpaceExpr& b, const SpaceExpr& c,
                           const Matrix& f) {
  require_l2_triple(a, b, c);
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  const std::size_t dc = dim(c);
  if (f.rows() != dc || f.cols() != da * db)
    throw std::invalid_argument("star_autonomy_map: matrix shape does not match A (x) B -> C");
  Matrix h(db * dc, da);
  for (std::size_t ci = 0; ci < dc; ++ci)
    for (std::size_t ai = 0; ai < da; ++ai)
      for (std::size_t bi = 0; bi < db; ++bi)
        h(bi * dc + ci, ai) = f(ci, ai * db + bi);
  return Morphism{a, spaces::dual(spaces::l2(db * dc)), std::move(h)};
}

Matrix star_autonomy_inv(const SpaceExpr& a, const SpaceExpr& b, const SpaceExpr& c,
                         const Matrix& h) {
  require_l2_triple(a, b, c);
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  const std::size_t dc = dim(c);
  if (h.rows() != db * dc || h.cols() != da)
    throw std::invalid_argument("star_autonomy_inv: matrix shape does not match A -> (B (x) C*)*");
  Matrix f(dc, da * db);
  for (std::size_t ci = 0; ci < dc; ++ci)
    for (std::size_t ai = 0; ai < da; ++ai)
      for (std::size_t bi = 0; bi < db; ++bi)
        f(ci, ai * db + bi) = h(bi * dc + ci, ai);
  return f;
}

double star_autonomy_naturality_gap(const SpaceExpr& a_prime, const SpaceExpr& a,
                                    const SpaceExpr& b, const SpaceExpr& c,
                                    const Matrix& f, const Matrix& g) {
  require_l2_triple(a, b, c);
  const std::size_t db = dim(b);
  if (g.rows() != dim(a) || g.cols() != dim(a_prime))
    throw std::invalid_argument("star_autonomy_naturality_gap: g must map A' to A");
  // Path one: transport f along g (x) id_B first, then apply the bijection.
  const Matrix pulled = matmul(f, num::kron(g, Matrix::identity(db)));
  const Matrix path1 = star_autonomy_map(a_prime, b, c, pulled).map;
  // Path two: apply the bijection first, then precompose with g.
  const Matrix path2 = matmul(star_autonomy_map(a, b, c, f).map, g);
  return num::max_abs_diff(path1, path2);
}

namespace {

// Shared access pattern for the bilinear form T[c, a, b].
struct RawView {
  const Matrix* f;  // dimC x (dimA * dimB)
  std::size_t da, db, dc;
  Complex at(std::size_t c, std::size_t a, std::size_t b) const {
    return (*f)(c, a * db + b);
  }
};

struct CurriedView {
  const Matrix* g;  // (dimB * dimC) x dimA
  std::size_t da, db, dc;
  Complex at(std::size_t c, std::size_t a, std::size_t b) const {
    return (*g)(c * db + b, a);
  }
};

struct Ascent {
  double value = 0.0;
  std::vector<Complex> a, b;
};

// Alternating exact maximization on the raw layout: with one side fixed the
// other side's optimum is the top singular pair of the induced matrix.
Ascent raw_ascend(const RawView& view, std::vector<Complex> a) {
  Ascent best;
  best.a = a;
  best.b.assign(view.db, Complex{0.0, 0.0});
  double value = 0.0;
  std::vector<Complex> b(view.db);
  for (int iter = 0; iter < 200; ++iter) {
    // Fix a: maximize over b via the top right singular vector of M_a.
    Matrix ma(view.dc, view.db);
    for (std::size_t c = 0; c < view.dc; ++c)
      for (std::size_t j = 0; j < view.db; ++j) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < view.da; ++i) acc += view.at(c, i, j) * a[i];
        ma(c, j) = acc;
      }
    num::SvdResult sa = num::svd(ma);
    if (sa.singulars.empty() || sa.singulars.front() < 1e-300) break;
    b = sa.right.column(0);

    // Fix b: maximize over a via the top right singular vector of N_b.
    Matrix nb(view.dc, view.da);
    for (std::size_t c = 0; c < view.dc; ++c)
      for (std::size_t i = 0; i < view.da; ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < view.db; ++j) acc += view.at(c, i, j) * b[j];
        nb(c, i) = acc;
      }
    num::SvdResult sb = num::svd(nb);
    if (sb.singulars.empty()) break;
    const double next = sb.singulars.front();
    a = sb.right.column(0);
    if (next <= value * (1.0 + 1e-14)) {
      value = std::max(value, next);
      break;
    }
    value = next;
  }
  best.value = value;
  best.a = std::move(a);
  best.b = std::move(b);
  return best;
}

// Trilinear power iteration on the curried layout; no SVD anywhere.
Ascent hopm_ascend(const CurriedView& view, std::vector<Complex> a,
                   std::vector<Complex> b) {
  double value = 0.0;
  std::vector<Complex> u(view.dc);
  for (int iter = 0; iter < 500; ++iter) {
    // u <- f(a (x) b), normalized.
    for (std::size_t c = 0; c < view.dc; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t i = 0; i < view.da; ++i)
        for (std::size_t j = 0; j < view.db; ++j) acc += view.at(c, i, j) * a[i] * b[j];
      u[c] = acc;
    }
    const double un = num::norm2(u);
    if (un < 1e-300) break;
    for (Complex& z : u) z /= un;

    // b <- M_a^H u, normalized (exact maximizer for fixed a, u).
    std::vector<Complex> nb(view.db, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < view.db; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < view.dc; ++c)
        for (std::size_t i = 0; i < view.da; ++i)
          acc += std::conj(view.at(c, i, j) * a[i]) * u[c];
      nb[j] = acc;
    }
    const double bn = num::norm2(nb);
    if (bn < 1e-300) break;
    for (Complex& z : nb) z /= bn;
    b = std::move(nb);

    // a_i <- conj(u^H S_i b), normalized.
    std::vector<Complex> na(view.da, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < view.da; ++i) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < view.dc; ++c)
        for (std::size_t j = 0; j < view.db; ++j)
          acc += std::conj(u[c]) * view.at(c, i, j) * b[j];
      na[i] = std::conj(acc);
    }
    const double an = num::norm2(na);
    if (an < 1e-300) break;
    for (Complex& z : na) z /= an;
    a = std::move(na);

    // Current value: || f(a (x) b) ||.
    double vv = 0.0;
    for (std::size_t c = 0; c < view.dc; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t i = 0; i < view.da; ++i)
        for (std::size_t j = 0; j < view.db; ++j) acc += view.at(c, i, j) * a[i] * b[j];
      vv += std::norm(acc);
    }
    vv = std::sqrt(vv);
    if (vv <= value * (1.0 + 1e-15)) {
      value = std::max(value, vv);
      break;
    }
    value = vv;
  }
  return Ascent{value, std::move(a), std::move(b)};
}

}  // namespace

double bilinear_sup_norm(const Matrix& f, std::size_t dim_a, std::size_t dim_b,
                         std::size_t restarts, std::uint64_t seed) {
  if (f.cols() != dim_a * dim_b)
    throw std::invalid_argument("bilinear_sup_norm: column count does not match dims");
  const std::size_t dim_c = f.rows();
  if (dim_a == 0 || dim_b == 0 || dim_c == 0) return 0.0;
  const RawView view{&f, dim_a, dim_b, dim_c};
  double best = 0.0;
  for (std::size_t r = 0; r < restarts; ++r) {
    num::Rng rng(seed + r);
    best = std::max(best, raw_ascend(view, random_unit(rng, dim_a)).value);
  }
  return best;
}

double curried_sup_norm(const Matrix& g, std::size_t dim_a, std::size_t dim_b,
                        std::size_t restarts, std::uint64_t seed) {
  if (g.cols() != dim_a)
    throw std::invalid_argument("curried_sup_norm: column count does not match dim A");
  if (dim_b == 0 || g.rows() % std::max<std::size_t>(dim_b, 1) != 0) {
    if (dim_b == 0) return 0.0;
    throw std::invalid_argument("curried_sup_norm: row count does not split by dim B");
  }
  const std::size_t dim_c = g.rows() / dim_b;
  if (dim_a == 0 || dim_c == 0) return 0.0;
  const CurriedView view{&g, dim_a, dim_b, dim_c};
  double best = 0.0;
  for (std::size_t r = 0; r < restarts; ++r) {
    num::Rng rng(seed + r);
    std::vector<Complex> a = random_unit(rng, dim_a);
    std::vector<Complex> b = random_unit(rng, dim_b);
    best = std::max(best, hopm_ascend(view, std::move(a), std::move(b)).value);
  }
  return best;
}

BilinearNormPair bilinear_norm_both_routes(const SpaceExpr& a, const SpaceExpr& b,
                                           const SpaceExpr& c, const Matrix& f,
                                           std::size_t restarts, std::uint64_t seed) {
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  const std::size_t dc = dim(c);
  const Matrix g = curry(a, b, c, f).map;

  BilinearNormPair pair;
  if (da == 0 || db == 0 || dc == 0) return pair;

  const RawView raw{&f, da, db, dc};
  const CurriedView cur{&g, da, db, dc};

  Ascent best_raw, best_cur;
  for (std::size_t r = 0; r < restarts; ++r) {
    num::Rng rng(seed + r);
    Ascent cand = raw_ascend(raw, random_unit(rng, da));
    if (cand.value > best_raw.value) best_raw = std::move(cand);

    num::Rng rng2(seed + 1000003 + r);
    Ascent cand2 = hopm_ascend(cur, random_unit(rng2, da), random_unit(rng2, db));
    if (cand2.value > best_cur.value) best_cur = std::move(cand2);
  }

  // Different local maxima: swap witnesses and let each route re-ascend
  // with its own update rule.
  if (std::abs(best_raw.value - best_cur.value) > 1e-10) {
    Ascent raw_again = raw_ascend(raw, best_cur.a);
    if (raw_again.value > best_raw.value) best_raw = std::move(raw_again);
    Ascent cur_again = hopm_ascend(cur, best_raw.a, best_raw.b);
    if (cur_again.value > best_cur.value) best_cur = std::move(cur_again);
  }

  pair.raw_route = best_raw.value;
  pair.curried_route = best_cur.value;
  return pair;
}

ScalarSumReport scalar_sum_map(std::size_t n, const SpaceExpr& b, std::size_t samples,
                               std::uint64_t seed) {
  if (!spaces::is_l2_type(b))
    throw std::invalid_argument("scalar_sum_map: B must carry the Euclidean norm");
  const std::size_t db = dim(b);
  const SpaceExpr scalars = spaces::sum1(std::vector<SpaceExpr>(n, spaces::scalar()));
  const SpaceExpr target = spaces::sum1(std::vector<SpaceExpr>(n, b));

  ScalarSumReport report;
  report.n = n;
  report.samples = samples;
  if (n == 0 || db == 0) {
    report.contraction = true;
    return report;
  }

  num::Rng rng(seed);
  auto image_of = [&](const std::vector<Complex>& x, const std::vector<Complex>& v) {
    std::vector<Complex> img(n * db);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < db; ++j) img[i * db + j] = x[i] * v[j];
    return img;
  };

  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Complex> x(n), v(db);
    for (Complex& z : x) z = rng.complex_gaussian();
    for (Complex& z : v) z = rng.complex_gaussian();
    const double cost = spaces::norm(scalars, x) * spaces::norm(b, v);
    if (cost < 1e-12) continue;
    const double out = spaces::norm(target, image_of(x, v));
    report.max_elementary_ratio = std::max(report.max_elementary_ratio, out / cost);
  }

  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t terms = 1 + static_cast<std::size_t>(rng.uniform() * 3.0);
    std::vector<Complex> total(n * db, Complex{0.0, 0.0});
    double cost = 0.0;
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<Complex> x(n), v(db);
      for (Complex& z : x) z = rng.complex_gaussian();
      for (Complex& z : v) z = rng.complex_gaussian();
      cost += spaces::norm(scalars, x) * spaces::norm(b, v);
      std::vector<Complex> img = image_of(x, v);
      for (std::size_t i = 0; i < total.size(); ++i) total[i] += img[i];
    }
    if (cost < 1e-12) continue;
    const double out = spaces::norm(target, total);
    report.max_decomposition_ratio = std::max(report.max_decomposition_ratio, out / cost);
  }

  report.contraction = report.max_elementary_ratio <= 1.0 + 1e-12 &&
                       report.max_decomposition_ratio <= 1.0 + 1e-12;
  return report;
}

PointConditionReport point_condition_check(
    const SpaceExpr& b, const std::vector<std::vector<Complex>>& points) {
  const std::size_t db = dim(b);
  const std::size_t n = points.size();
  for (const auto& p : points)
    if (p.size() != db)
      throw std::invalid_argument("point_condition_check: point dimension mismatch");

  PointConditionReport report;
  report.n = n;

  std::vector<Complex> total(db, Complex{0.0, 0.0});
  Matrix m(db, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      m(j, i) = points[i][j];
      total[j] += points[i][j];
    }
  const double sum_norm = spaces::norm(b, total);
  report.sum_norm_sq = sum_norm * sum_norm;
  report.sum_condition = report.sum_norm_sq <= static_cast<double>(n) + 1e-9;

  if (n == 0) {
    report.map_norm = 0.0;
    report.map_contraction = true;
    report.necessary_direction_ok = true;
    return report;
  }

  report.map_norm = spaces::operator_norm_estimate(m, spaces::l2(n), b).value;
  report.map_contraction = report.map_norm <= 1.0 + 1e-9;
  report.necessary_direction_ok = !report.map_contraction || report.sum_condition;
  return report;
}

ConverseSearchReport point_condition_converse_search(const SpaceExpr& b, std::size_t n,
                                                     std::size_t trials,
                                                     std::uint64_t seed) {
  const std::size_t db = dim(b);
  ConverseSearchReport report;
  report.trials = trials;
  if (n == 0 || db == 0) return report;

  for (std::size_t t = 0; t < trials; ++t) {
    num::Rng rng(seed + t);
    std::vector<std::vector<Complex>> pts(n, std::vector<Complex>(db));
    std::vector<Complex> total(db, Complex{0.0, 0.0});
    for (auto& p : pts)
      for (std::size_t j = 0; j < db; ++j) {
        p[j] = rng.complex_gaussian();
        total[j] += p[j];
      }
    // Rescale so the sum condition holds with margin, then test the map.
    const double sum_norm = spaces::norm(b, total);
    if (sum_norm > 1e-12) {
      const double scale = 0.999 * std::sqrt(static_cast<double>(n)) / sum_norm;
      if (scale < 1.0)
        for (auto& p : pts)
          for (Complex& z : p) z *= scale;
    }
    PointConditionReport check = point_condition_check(b, pts);
    if (check.sum_condition && check.map_norm > 1.0 + 1e-9) {
      report.counterexample_found = true;
      report.witness_points = std::move(pts);
      report.witness_sum_norm_sq = check.sum_norm_sq;
      report.witness_map_norm = check.map_norm;
      return report;
    }
  }
  return report;
}

namespace {

std::size_t vec_index(std::size_t row, std::size_t col, std::size_t cols) {
  return row * cols + col;
}

}  // namespace

BiproductReport biproduct_check(const SpaceExpr& a, const SpaceExpr& b,
                                const SpaceExpr& c, std::uint64_t seed) {
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  const std::size_t dc = dim(c);
  const std::size_t dbc = db + dc;

  BiproductReport report;
  report.hom_a_bc = da * dbc;
  report.hom_a_b = da * db;
  report.hom_a_c = da * dc;
  report.hom_ab_c = (da + db) * dc;
  report.dims_add = report.hom_a_bc == report.hom_a_b + report.hom_a_c &&
                    report.hom_ab_c == da * dc + db * dc;

  // Pairing isomorphism Hom(A,B) (+) Hom(A,C) -> Hom(A, B (+) C), built on
  // explicit vectorized bases together with its inverse; both composites
  // must be exact permutation identities.
  {
    const std::size_t src_dim = da * db + da * dc;
    const std::size_t dst_dim = da * dbc;
    Matrix fwd(dst_dim, src_dim);
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t col = 0; col < da; ++col)
        fwd(vec_index(r, col, da), vec_index(r, col, da)) = Complex{1.0, 0.0};
    for (std::size_t r = 0; r < dc; ++r)
      for (std::size_t col = 0; col < da; ++col)
        fwd(vec_index(db + r, col, da), da * db + vec_index(r, col, da)) =
            Complex{1.0, 0.0};
    const Matrix bwd = num::transpose(fwd);
    report.pairing_iso_exact =
        src_dim == dst_dim &&
        matmul(fwd, bwd) == Matrix::identity(dst_dim) &&
        matmul(bwd, fwd) == Matrix::identity(src_dim);
  }

  // Copairing isomorphism Hom(A (+) B, C) -> Hom(A, C) (+) Hom(B, C) via
  // restriction along the injections; inverse concatenates columns.
  {
    num::Rng rng(seed);
    Matrix full = num::random_matrix(rng, dc, da + db);
    Matrix ua(dc, da), ub(dc, db);
    for (std::size_t r = 0; r < dc; ++r) {
      for (std::size_t j = 0; j < da; ++j) ua(r, j) = full(r, j);
      for (std::size_t j = 0; j < db; ++j) ub(r, j) = full(r, da + j);
    }
    Matrix rebuilt(dc, da + db);
    for (std::size_t r = 0; r < dc; ++r) {
      for (std::size_t j = 0; j < da; ++j) rebuilt(r, j) = ua(r, j);
      for (std::size_t j = 0; j < db; ++j) rebuilt(r, da + j) = ub(r, j);
    }
    report.copairing_iso_exact = rebuilt == full;
  }

  // Injection and projection identities for B (+) C, checked exactly.
  {
    Matrix ib(dbc, db), ic(dbc, dc), pb(db, dbc), pc(dc, dbc);
    for (std::size_t j = 0; j < db; ++j) {
      ib(j, j) = Complex{1.0, 0.0};
      pb(j, j) = Complex{1.0, 0.0};
    }
    for (std::size_t j = 0; j < dc; ++j) {
      ic(db + j, j) = Complex{1.0, 0.0};
      pc(j, db + j) = Complex{1.0, 0.0};
    }
    const bool diag = matmul(pb, ib) == Matrix::identity(db) &&
                      matmul(pc, ic) == Matrix::identity(dc);
    const bool off = num::frobenius_norm(matmul(pb, ic)) == 0.0 &&
                     num::frobenius_norm(matmul(pc, ib)) == 0.0;
    const bool resolution =
        matmul(ib, pb) + matmul(ic, pc) == Matrix::identity(dbc);
    report.identities_exact = diag && off && resolution;
  }

  report.passed = report.dims_add && report.pairing_iso_exact &&
                  report.copairing_iso_exact && report.identities_exact;
  return report;
}

TailColimitReport tail_colimit_check(const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  TailColimitReport report;
  report.errors.resize(n + 1);
  // Suffix sums keep monotonicity exact in floating point.
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] + std::norm(x[k]);
  for (std::size_t k = 0; k <= n; ++k) report.errors[k] = std::sqrt(suffix[k]);
  report.monotone = true;
  for (std::size_t k = 0; k + 1 <= n; ++k)
    if (report.errors[k] < report.errors[k + 1]) report.monotone = false;
  report.final_zero = report.errors[n] == 0.0;
  report.passed = report.monotone && report.final_zero;
  return report;
}

DoubleDualReport double_dual_eval(const SpaceExpr& v, std::uint64_t seed) {
  const std::size_t d = dim(v);
  DoubleDualReport report;
  report.dim = d;

  // Column j holds the coordinates of evaluation at the j-th basis vector:
  // its value on the i-th coordinate functional is the bilinear pairing of
  // the two basis vectors.
  Matrix eval(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Complex> ej(d, Complex{0.0, 0.0});
    ej[j] = Complex{1.0, 0.0};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Complex> ei(d, Complex{0.0, 0.0});
      ei[i] = Complex{1.0, 0.0};
      eval(i, j) = spaces::pairing(ej, ei);
    }
  }
  report.matrix_is_identity = eval == Matrix::identity(d);
  report.surjective = report.matrix_is_identity;
  report.injective = report.matrix_is_identity;

  const SpaceExpr ddv = spaces::dual_space(spaces::dual_space(v));
  report.norms_match = true;
  num::Rng rng(seed);
  for (int k = 0; k < 50; ++k) {
    std::vector<Complex> coords(d);
    for (Complex& z : coords) z = rng.complex_gaussian();
    const double nv = spaces::norm(v, coords);
    const double nvv = spaces::norm(ddv, coords);
    if (std::abs(nv - nvv) > 1e-12 * (1.0 + nv)) report.norms_match = false;
  }
  report.passed = report.matrix_is_identity && report.norms_match;
  return report;
}

}  // namespace starban::bancat
