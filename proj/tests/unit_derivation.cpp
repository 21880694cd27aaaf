#include <doctest.h>

#include "support/fixtures.hpp"
#include "trilie/errors.hpp"

using namespace trilie;

TEST_CASE("derivation law on the worked example") {
  ThreeLieAlgebra a = fixtures::example4();
  CHECK(is_derivation(a, fixtures::example4_involution()).ok);
  CHECK(is_derivation(a, Mat::zero(4, 4)).ok);

  // 2*I fails: the left side scales once, the right side three times.
  Mat twice = Mat::identity(4).scaled(Rational(2));
  DerivationReport bad = is_derivation(a, twice);
  CHECK_FALSE(bad.ok);
}

TEST_CASE("eigen split of the worked example") {
  ThreeLieAlgebra a = fixtures::example4();
  InvolutiveDerivation g = InvolutiveDerivation::eigen_split(a, fixtures::example4_involution());
  CHECK(g.s() == 3);
  CHECK(g.plus_space() == Subspace::span(4, {unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)}));
  CHECK(g.minus_space() == Subspace::span(4, {unit_vec(4, 3)}));
  CHECK(g.is_adapted());
}

TEST_CASE("eigen split degenerate involutions") {
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(4);
  InvolutiveDerivation plus = InvolutiveDerivation::eigen_split(ab, Mat::identity(4));
  CHECK(plus.s() == 4);
  CHECK(plus.minus_space().is_zero());

  InvolutiveDerivation minus = InvolutiveDerivation::eigen_split(ab, -Mat::identity(4));
  CHECK(minus.s() == 0);
  CHECK(minus.plus_space().is_zero());
}

TEST_CASE("eigen split rejections distinguish the two preconditions") {
  ThreeLieAlgebra a = fixtures::example4();
  Mat not_involutive = Mat::identity(4).scaled(Rational(2));
  try {
    InvolutiveDerivation::eigen_split(a, not_involutive);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvolutive);
  }

  // Involutive but not a derivation: negate x2 only.
  Vec d(4, Rational(1));
  d[1] = Rational(-1);
  try {
    InvolutiveDerivation::eigen_split(a, Mat::diagonal(d));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDerivation);
  }
}

TEST_CASE("projectors behind the split are idempotent and complementary") {
  ThreeLieAlgebra a = fixtures::nilpotent4();
  Mat dm = fixtures::nilpotent4_involution();
  InvolutiveDerivation g = InvolutiveDerivation::eigen_split(a, dm);
  const Rational half(1, 2);
  Mat p = (dm + Mat::identity(4)).scaled(half);
  Mat q = (Mat::identity(4) - dm).scaled(half);
  CHECK(p * p == p);
  CHECK(q * q == q);
  CHECK(p + q == Mat::identity(4));
  CHECK(g.plus_space().dim() + g.minus_space().dim() == 4);
}

TEST_CASE("grading inclusions hold for valid splits") {
  ThreeLieAlgebra a = fixtures::example4();
  InvolutiveDerivation g = InvolutiveDerivation::eigen_split(a, fixtures::example4_involution());
  CHECK(check_grading(g, a).ok);

  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(5);
  Vec d(5, Rational(1));
  d[0] = Rational(-1);
  d[3] = Rational(-1);
  InvolutiveDerivation gab = InvolutiveDerivation::eigen_split(ab, Mat::diagonal(d));
  CHECK(check_grading(gab, ab).ok);
}

TEST_CASE("grading check flags a non-derivation involution") {
  // diag(1,-1,1,-1) squares to I but fails the derivation law on the worked
  // example; packaging it unchecked must surface a violated inclusion.
  ThreeLieAlgebra a = fixtures::example4();
  Vec d(4, Rational(1));
  d[1] = Rational(-1);
  d[3] = Rational(-1);
  Subspace plus = Subspace::span(4, {unit_vec(4, 0), unit_vec(4, 2)});
  Subspace minus = Subspace::span(4, {unit_vec(4, 1), unit_vec(4, 3)});
  InvolutiveDerivation g = InvolutiveDerivation::from_parts_unchecked(Mat::diagonal(d), plus, minus);
  GradingReport report = check_grading(g, a);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.violated.empty());
}

TEST_CASE("adapted basis is the identity on an already adapted algebra") {
  ThreeLieAlgebra a = fixtures::example4();
  InvolutiveDerivation g = InvolutiveDerivation::eigen_split(a, fixtures::example4_involution());
  auto [alg2, p] = adapted_basis(a, g);
  CHECK(p == Mat::identity(4));
  CHECK(alg2 == a);
}

TEST_CASE("adapted basis reorders a shuffled algebra") {
  // Same structure as the worked example but with x4 listed first.
  ThreeLieAlgebra a(4);
  // order (x4, x1, x2, x3): [x2,x3,x4] = x1 -> [e3, e4?,...] translate indices:
  // x4 -> e0, x1 -> e1, x2 -> e2, x3 -> e3
  a.set_bracket(2, 3, 0, unit_vec(4, 1));  // [x2,x3,x4] = x1
  a.set_bracket(1, 3, 0, unit_vec(4, 2));  // [x1,x3,x4] = x2
  Vec d(4, Rational(1));
  d[0] = Rational(-1);
  InvolutiveDerivation g = InvolutiveDerivation::eigen_split(a, Mat::diagonal(d));
  CHECK_FALSE(g.is_adapted());
  auto [alg2, p] = adapted_basis(a, g);
  InvolutiveDerivation g2 = InvolutiveDerivation::eigen_split(
      alg2, Mat::diagonal(Vec{Rational(1), Rational(1), Rational(1), Rational(-1)}));
  CHECK(g2.is_adapted());
  CHECK(check_grading(g2, alg2).ok);
  // The change of basis is an isomorphism onto the original algebra.
  CHECK(check_homomorphism(p, alg2, a).ok);
  // And the transported algebra is the worked example again.
  CHECK(alg2 == fixtures::example4());
}

TEST_CASE("adapted basis eigenvector ordering on an abelian algebra") {
  ThreeLieAlgebra ab = ThreeLieAlgebra::abelian(3);
  Vec d(3, Rational(1));
  d[0] = Rational(-1);
  InvolutiveDerivation g = InvolutiveDerivation::eigen_split(ab, Mat::diagonal(d));
  auto [alg2, p] = adapted_basis(ab, g);
  // New order (x2, x3, x1): columns of p are the new basis in old coordinates.
  CHECK(p.col(0) == unit_vec(3, 1));
  CHECK(p.col(1) == unit_vec(3, 2));
  CHECK(p.col(2) == unit_vec(3, 0));
}

TEST_CASE("split of a non-adapted seed and transport") {
  ThreeLieAlgebra a = fixtures::nilpotent4();
  InvolutiveDerivation g = InvolutiveDerivation::eigen_split(a, fixtures::nilpotent4_involution());
  CHECK(g.s() == 3);
  CHECK_FALSE(g.is_adapted());
  auto [alg2, p] = adapted_basis(a, g);
  CHECK(check_homomorphism(p, alg2, a).ok);
  // New order (x1, x2, x4, x3): the bracket becomes [e1,e2,e4] = e3.
  CHECK(alg2.bracket_basis(0, 1, 3) == unit_vec(4, 2));
}
