#include <cmath>
#include <vector>

#include "doctest.h"
#include "starban/matrix.hpp"
#include "starban/rng.hpp"
#include "starban/spaces.hpp"

using namespace starban;
using namespace starban::spaces;
using num::Complex;

namespace {

std::vector<Complex> random_coords(num::Rng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (Complex& z : v) z = rng.complex_gaussian();
  return v;
}

// Pool of expressions exercising every construct at small dimension.
std::vector<SpaceExpr> expression_pool() {
  return {
      scalar(),
      l2(0),
      l2(1),
      l2(3),
      l2(6),
      sum1({scalar(), scalar()}),
      sum2({scalar(), scalar()}),
      sup({scalar(), scalar()}),
      sum1({l2(2), sum2({scalar(), scalar()})}),
      sum2({sum1({scalar(), scalar()}), l2(2), scalar()}),
      sup({l2(3), sum1({scalar(), scalar()})}),
      dual(sum1({scalar(), l2(2)})),
      dual(dual(sup({scalar(), scalar(), l2(2)}))),
      sum1({sup({scalar(), scalar()}), dual(sum1({scalar(), scalar()}))}),
      sum2({l2(0), l2(3)}),
      sup({l2(1)}),
      sum1({l2(2)}),
  };
}

}  // namespace

TEST_CASE("dimension arithmetic") {
  CHECK(dim(scalar()) == 1);
  CHECK(dim(sum1({scalar(), l2(3)})) == 4);
  CHECK(dim(dual(sup({scalar(), scalar()}))) == 2);
  CHECK(dim(l2(0)) == 0);
  CHECK(dim(sum2({})) == 0);
}

TEST_CASE("norms on pinned vectors") {
  const std::vector<Complex> v{Complex{3.0, 0.0}, Complex{4.0, 0.0}};
  CHECK(norm(sum1({scalar(), scalar()}), v) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(norm(sum2({scalar(), scalar()}), v) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(norm(sup({scalar(), scalar()}), v) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(norm(l2(2), v) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(norm(dual(sum1({scalar(), scalar()})), v) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(norm(dual(sup({scalar(), scalar()})), v) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK_THROWS_AS(norm(l2(3), v), std::invalid_argument);
}

TEST_CASE("dual space rewrites") {
  CHECK(dual_space(sum1({scalar(), scalar()})) == sup({scalar(), scalar()}));
  CHECK(dual_space(sup({scalar(), scalar()})) == sum1({scalar(), scalar()}));
  CHECK(dual_space(l2(5)) == l2(5));
  CHECK(dual_space(scalar()) == scalar());
  CHECK(dual_space(dual(sup({l2(2)}))) == sup({l2(2)}));
  CHECK(dual_space(sum2({sum1({scalar()}), l2(1)})) == sum2({sup({scalar()}), l2(1)}));
}

TEST_CASE("dual_space is an involution on dual-free expressions") {
  num::Rng rng(404);
  for (int i = 0; i < 100; ++i) {
    SpaceExpr s = random_space(rng, 6);
    SpaceExpr dd = dual_space(dual_space(s));
    // Dual nodes inside s are eliminated by the rewrite, so compare norms
    // (the involution holds on the nose only for dual-free expressions).
    std::vector<Complex> v = random_coords(rng, dim(s));
    CHECK(norm(dd, v) == doctest::Approx(norm(s, v)).epsilon(1e-12));
  }
  for (const SpaceExpr& s : expression_pool()) {
    if (to_string(s).find("dual") != std::string::npos) continue;
    CHECK(dual_space(dual_space(s)) == s);
  }
}

TEST_CASE("norm axioms on the pool and random expressions") {
  num::Rng rng(777);
  std::vector<SpaceExpr> pool = expression_pool();
  for (int i = 0; i < 12; ++i) pool.push_back(random_space(rng, 6));

  for (const SpaceExpr& s : pool) {
    const std::size_t d = dim(s);
    if (d == 0) continue;
    for (int k = 0; k < 200; ++k) {
      std::vector<Complex> v = random_coords(rng, d);
      std::vector<Complex> w = random_coords(rng, d);
      const Complex lambda = rng.complex_gaussian();

      const double nv = norm(s, v);
      const double nw = norm(s, w);

      std::vector<Complex> lv(d), vw(d);
      for (std::size_t j = 0; j < d; ++j) {
        lv[j] = lambda * v[j];
        vw[j] = v[j] + w[j];
      }
      CHECK(norm(s, lv) ==
            doctest::Approx(std::abs(lambda) * nv).epsilon(1e-12).scale(1.0 + nv));
      CHECK(norm(s, vw) <= nv + nw + 1e-12 * (1.0 + nv + nw));
      CHECK(nv >= 0.0);
    }
    std::vector<Complex> zero(d, Complex{0.0, 0.0});
    CHECK(norm(s, zero) == 0.0);
  }
}

TEST_CASE("pointwise contraction chain across the three sums") {
  num::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t parts = 2 + static_cast<std::size_t>(rng.uniform() * 3.0);
    std::vector<SpaceExpr> children;
    for (std::size_t i = 0; i < parts; ++i)
      children.push_back(rng.uniform() < 0.5 ? scalar()
                                             : l2(1 + static_cast<std::size_t>(rng.uniform() * 2.0)));
    SpaceExpr s1 = sum1(children);
    SpaceExpr s2 = sum2(children);
    SpaceExpr sp = sup(children);
    std::vector<Complex> v = random_coords(rng, dim(s1));
    const double n1 = norm(s1, v);
    const double n2 = norm(s2, v);
    const double np = norm(sp, v);
    CHECK(n1 >= n2 - 1e-12);
    CHECK(n2 >= np - 1e-12);
  }
}

TEST_CASE("duality pairing bound") {
  num::Rng rng(58);
  std::vector<SpaceExpr> pool = expression_pool();
  for (int i = 0; i < 10; ++i) pool.push_back(random_space(rng, 6));
  for (const SpaceExpr& s : pool) {
    const std::size_t d = dim(s);
    if (d == 0) continue;
    const SpaceExpr ds = dual_space(s);
    for (int k = 0; k < 50; ++k) {
      std::vector<Complex> v = random_coords(rng, d);
      std::vector<Complex> w = random_coords(rng, d);
      const double bound = norm(s, v) * norm(ds, w);
      CHECK(std::abs(pairing(v, w)) <= bound + 1e-12 * (1.0 + bound));
    }
  }
}

TEST_CASE("grammar round-trip and parse errors") {
  for (const SpaceExpr& s : expression_pool()) {
    CHECK(parse_space(to_string(s)) == s);
  }
  CHECK(parse_space("  sum1( C ,dual(sup( l2( 2 ) , C)) )") ==
        sum1({scalar(), dual(sup({l2(2), scalar()}))}));
  CHECK(parse_space("sum2()") == sum2({}));

  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_space(text);
    } catch (const parse_error& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of("sum1(C,]") == 7);
  CHECK(position_of("l2(x)") == 3);
  CHECK(position_of("sum3(C)") == 0);
  CHECK(position_of("C C") == 2);
  CHECK(position_of("dual(C") == 6);
}

TEST_CASE("operator norm: exact cases and pinned mixed-norm cases") {
  const SpaceExpr s11 = sum1({scalar(), scalar()});
  const SpaceExpr s22 = sum2({scalar(), scalar()});
  const SpaceExpr spp = sup({scalar(), scalar()});
  const num::Matrix id2 = num::Matrix::identity(2);

  CHECK(operator_norm_estimate(id2, l2(2), l2(2)).value == doctest::Approx(1.0));
  CHECK(operator_norm_estimate(num::scale(Complex{2.0, 0.0}, id2), l2(2), l2(2)).value ==
        doctest::Approx(2.0));
  CHECK(operator_norm_estimate(id2, s11, s22, 16, 5).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(operator_norm_estimate(id2, spp, s11, 16, 5).value ==
        doctest::Approx(2.0).epsilon(1e-9));

  CHECK_THROWS_AS(operator_norm_estimate(id2, l2(3), l2(2)), std::invalid_argument);
  CHECK_THROWS_AS(operator_norm_estimate(id2, l2(2), l2(2), 0), std::invalid_argument);
}

TEST_CASE("operator norm estimates never exceed a dense sphere scan") {
  num::Rng rng(9001);
  const SpaceExpr dom = sum1({scalar(), scalar()});
  const SpaceExpr cod = sup({scalar(), scalar()});
  for (int trial = 0; trial < 5; ++trial) {
    num::Matrix m = random_matrix(rng, 2, 2);
    const double est = operator_norm_estimate(m, dom, cod, 24, 17 + trial).value;
    double scan = 0.0;
    for (int k = 0; k < 20000; ++k) {
      std::vector<Complex> v = random_coords(rng, 2);
      const double dn = norm(dom, v);
      if (dn < 1e-12) continue;
      scan = std::max(scan, norm(cod, num::apply(m, v)) / dn);
    }
    CHECK(est >= scan - 1e-9);
  }
}

TEST_CASE("contraction checks across the sum chain") {
  const SpaceExpr s11 = sum1({scalar(), scalar()});
  const SpaceExpr s22 = sum2({scalar(), scalar()});
  const SpaceExpr spp = sup({scalar(), scalar()});
  const num::Matrix id2 = num::Matrix::identity(2);

  CHECK(is_contraction(id2, s11, s22).contraction);
  CHECK(is_contraction(id2, s22, spp).contraction);
  CHECK(is_contraction(id2, s11, spp).contraction);

  ContractionReport rev = is_contraction(id2, spp, s11);
  CHECK_FALSE(rev.contraction);
  CHECK(rev.estimate == doctest::Approx(2.0).epsilon(1e-9));
  // The witness certifies the violation: ratio above 1 at the witness.
  const double wd = norm(spp, rev.witness.coords);
  const double wc = norm(s11, num::apply(id2, rev.witness.coords));
  CHECK(wc / wd == doctest::Approx(rev.estimate).epsilon(1e-9));
}

TEST_CASE("is_l2_type recognizes Euclidean expressions") {
  CHECK(is_l2_type(scalar()));
  CHECK(is_l2_type(l2(4)));
  CHECK(is_l2_type(sum2({l2(2), scalar()})));
  CHECK(is_l2_type(dual(sum2({l2(2), scalar()}))));
  CHECK(is_l2_type(sum1({l2(3)})));
  CHECK(is_l2_type(sup({l2(0), l2(3)})));
  CHECK_FALSE(is_l2_type(sum1({scalar(), scalar()})));
  CHECK_FALSE(is_l2_type(sup({scalar(), l2(2)})));
}
