#include <doctest.h>

#include "support/fixtures.hpp"
#include "trilie/bialgebra.hpp"
#include "trilie/errors.hpp"
#include "trilie/representation.hpp"

using namespace trilie;

namespace {

struct Setup {
  ThreeLieAlgebra base;
  InvolutiveDerivation g;
  ThreeLieAlgebra b1;
};

Setup example_setup() {
  Setup s;
  s.base = fixtures::example4();
  s.g = InvolutiveDerivation::eigen_split(s.base, fixtures::example4_involution());
  s.b1 = semidirect_product(s.base, coadjoint_rep(s.base));
  return s;
}

Setup abelian_setup(int n, int minus_count) {
  Setup s;
  s.base = ThreeLieAlgebra::abelian(n);
  Vec d(static_cast<size_t>(n), Rational(1));
  for (int i = n - minus_count; i < n; ++i) d[static_cast<size_t>(i)] = Rational(-1);
  s.g = InvolutiveDerivation::eigen_split(s.base, Mat::diagonal(d));
  s.b1 = semidirect_product(s.base, coadjoint_rep(s.base));
  return s;
}

}  // namespace

TEST_CASE("dbar lists the eigenvalue-weighted dual pairs") {
  Setup s = example_setup();
  Tensor2 d = dbar(s.b1, s.g);
  // x1* (x) x1 + x2* (x) x2 + x3* (x) x3 - x4* (x) x4
  REQUIRE(d.terms.size() == 4);
  CHECK(d.terms.at({4, 0}) == Rational(1));
  CHECK(d.terms.at({5, 1}) == Rational(1));
  CHECK(d.terms.at({6, 2}) == Rational(1));
  CHECK(d.terms.at({7, 3}) == Rational(-1));
}

TEST_CASE("dbar for plus and minus identity involutions") {
  Setup plus = abelian_setup(2, 0);
  Tensor2 dplus = dbar(plus.b1, plus.g);
  CHECK(dplus.terms.at({2, 0}) == Rational(1));
  CHECK(dplus.terms.at({3, 1}) == Rational(1));

  Setup minus = abelian_setup(2, 2);
  Tensor2 dminus = dbar(minus.b1, minus.g);
  CHECK(dminus.terms.at({2, 0}) == Rational(-1));
  CHECK(dminus.terms.at({3, 1}) == Rational(-1));
}

TEST_CASE("r-matrix is skew and has the expected coefficients") {
  Setup s = example_setup();
  Tensor2 r = r_matrix(s.b1, s.g);
  CHECK(r.terms.permuted({1, 0}) == -r.terms);
  CHECK(r.terms.at({4, 0}) == Rational(1));
  CHECK(r.terms.at({0, 4}) == Rational(-1));
  CHECK(r.terms.at({7, 3}) == Rational(-1));
  CHECK(r.terms.at({3, 7}) == Rational(1));
}

TEST_CASE("r-matrix of the zero-dimensional algebra is empty") {
  Setup s = abelian_setup(0, 0);
  CHECK(r_matrix(s.b1, s.g).terms.is_zero());
}

TEST_CASE("the induced r-matrix solves the ternary Yang-Baxter equation") {
  for (const Setup& s : {example_setup(), abelian_setup(3, 1)}) {
    Tensor2 r = r_matrix(s.b1, s.g);
    CHECK(cybe_bracket(r).is_zero());
  }
  // second graded seed, adapted first
  ThreeLieAlgebra nil = fixtures::nilpotent4();
  InvolutiveDerivation gn = InvolutiveDerivation::eigen_split(nil, fixtures::nilpotent4_involution());
  auto [adapted, p] = adapted_basis(nil, gn);
  InvolutiveDerivation g2 = InvolutiveDerivation::eigen_split(
      adapted, Mat::diagonal(Vec{Rational(1), Rational(1), Rational(1), Rational(-1)}));
  ThreeLieAlgebra b1 = semidirect_product(adapted, coadjoint_rep(adapted));
  CHECK(cybe_bracket(r_matrix(b1, g2)).is_zero());
}

TEST_CASE("a planted tensor on an abelian double space is a trivial solution") {
  Setup s = abelian_setup(2, 1);
  Tensor2 r;
  r.ambient = s.b1;
  r.terms.add({0, 1}, Rational(1));
  CHECK(cybe_bracket(r).is_zero());  // every bracket in the expansion vanishes
}

TEST_CASE("the zero tensor is a solution") {
  Setup s = example_setup();
  Tensor2 r;
  r.ambient = s.b1;
  CHECK(cybe_bracket(r).is_zero());
}

TEST_CASE("comultiplication: defining sums agree with the closed form") {
  Setup s = example_setup();
  Comultiplication c = delta_from_r(s.b1, s.g);  // throws on any disagreement
  CHECK(c.dim() == 8);

  // Structural relations between the three addends.
  for (int t = 0; t < 8; ++t) {
    CHECK(c.delta2(t) == c.delta1(t).permuted({2, 0, 1}));
    CHECK(c.delta3(t) == c.delta1(t).permuted({1, 2, 0}));
  }
}

TEST_CASE("comultiplication of an abelian algebra vanishes") {
  Setup s = abelian_setup(3, 2);
  Comultiplication c = delta_from_r(s.b1, s.g);
  for (int t = 0; t < 6; ++t) CHECK(c.delta(t).is_zero());
}

TEST_CASE("dual-index comultiplications only hit dual-dual-dual keys") {
  Setup s = example_setup();
  Comultiplication c = delta_from_r(s.b1, s.g);
  for (int t = 4; t < 8; ++t) {
    Tensor3Terms d = c.delta(t);
    for (const auto& [key, coef] : d.terms()) {
      CHECK(key[0] >= 4);
      CHECK(key[1] >= 4);
      CHECK(key[2] >= 4);
    }
  }
}

TEST_CASE("the total comultiplication tensor is totally skew") {
  Setup s = example_setup();
  Comultiplication c = delta_from_r(s.b1, s.g);
  for (int t = 0; t < 8; ++t) {
    Tensor3Terms d = c.delta(t);
    CHECK(swap12(d) == -d);
    CHECK(swap13(d) == -d);
    CHECK(swap23(d) == -d);
  }
}

TEST_CASE("local cocycle conditions hold for the induced comultiplication") {
  Setup s = example_setup();
  Comultiplication c = delta_from_r(s.b1, s.g);
  CHECK(check_local_cocycle(c, s.b1).ok);
}

TEST_CASE("zero comultiplication is a cocycle") {
  Setup s = example_setup();
  std::vector<Tensor3Terms> zeros(8);
  Comultiplication c(s.b1, 4, 3, zeros);
  CHECK(check_local_cocycle(c, s.b1).ok);
}

TEST_CASE("a perturbed comultiplication is caught with a witness") {
  Setup s = example_setup();
  Comultiplication good = delta_from_r(s.b1, s.g);
  std::vector<Tensor3Terms> d1;
  for (int t = 0; t < 8; ++t) d1.push_back(good.delta1(t));
  d1[0].add({4, 5, 6}, Rational(1, 3));
  Comultiplication bad(s.b1, 4, 3, d1);
  CocycleReport report = check_local_cocycle(bad, s.b1);
  CHECK_FALSE(report.ok);
  CHECK(report.component >= 1);
}

TEST_CASE("dual algebra of the worked example") {
  Setup s = example_setup();
  Comultiplication c = delta_from_r(s.b1, s.g);
  ThreeLieAlgebra b2 = dual_algebra(c);  // verifies FI, closed form, round-trip
  CHECK(b2.dim() == 8);

  // delta*(y2, y4, y3) = y1
  CHECK(b2.bracket_basis(1, 3, 2) == unit_vec(8, 0));
  // delta*(y1, y2, y3) = 0: all indices in the plus block
  CHECK(is_zero(b2.bracket_basis(0, 1, 2)));
  // delta*(y_a*, y_b*, y_c*) = 0 always
  for (int a = 4; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int cc = b + 1; cc < 8; ++cc) CHECK(is_zero(b2.bracket_basis(a, b, cc)));
}

TEST_CASE("dual algebra of an abelian setup is abelian") {
  Setup s = abelian_setup(3, 1);
  Comultiplication c = delta_from_r(s.b1, s.g);
  ThreeLieAlgebra b2 = dual_algebra(c);
  CHECK(b2.constants().empty());
}
