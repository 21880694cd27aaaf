#include <doctest.h>

#include "trilie/errors.hpp"
#include "trilie/linalg.hpp"
#include "trilie/rational.hpp"
#include "trilie/subspace.hpp"

using namespace trilie;

TEST_CASE("rational canonical form") {
  Rational r(2, 4);
  CHECK(r.num() == 1);
  CHECK(r.den() == 2);
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse grammar") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+3/9") == Rational(1, 3));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
  CHECK_THROWS_AS(Rational::parse("a"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse("1 "), Error);
}

TEST_CASE("rational exactness properties") {
  // (a+b)-b = a and (a*b)/b = a over a spread of values including big ones.
  std::vector<Rational> pool;
  for (long p = -6; p <= 6; ++p)
    for (long q = 1; q <= 5; ++q) pool.emplace_back(p, q);
  pool.push_back(Rational::parse("123456789123456789/987654321987654323"));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("rref identity and zero") {
  RrefResult id = rref(Mat::identity(3));
  CHECK(id.reduced == Mat::identity(3));
  CHECK(id.pivots == std::vector<int>{0, 1, 2});

  RrefResult z = rref(Mat::zero(2, 4));
  CHECK(z.reduced == Mat::zero(2, 4));
  CHECK(z.pivots.empty());
}

TEST_CASE("rref dependent rows") {
  // Hand Gaussian elimination: [[1,2],[2,4]] -> [[1,2],[0,0]], pivot column 0.
  Mat m(2, 2);
  m(0, 0) = 1; m(0, 1) = 2;
  m(1, 0) = 2; m(1, 1) = 4;
  RrefResult rr = rref(m);
  Mat expected(2, 2);
  expected(0, 0) = 1; expected(0, 1) = 2;
  CHECK(rr.reduced == expected);
  CHECK(rr.pivots == std::vector<int>{0});
}

TEST_CASE("rref is idempotent") {
  Mat m(3, 4);
  int v = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) {
      ++v;
      m(r, c) = Rational((v * 7 % 11) - 5, 1 + (v % 3));
    }
  RrefResult once = rref(m);
  RrefResult twice = rref(once.reduced);
  CHECK(once.reduced == twice.reduced);
  CHECK(once.pivots == twice.pivots);
}

TEST_CASE("solve and inverse") {
  Mat m(2, 2);
  m(0, 0) = 1; m(0, 1) = 2;
  m(1, 0) = 3; m(1, 1) = 5;
  Vec b{Rational(1), Rational(2)};
  Vec x = solve(m, b);
  CHECK(m.apply(x) == b);
  Mat inv = inverse(m);
  CHECK(m * inv == Mat::identity(2));
  Mat sing(2, 2);
  sing(0, 0) = 1; sing(0, 1) = 2;
  sing(1, 0) = 2; sing(1, 1) = 4;
  CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("subspace span canonicalization") {
  // {e1, 2 e1} in dim 3 spans one dimension.
  Subspace s = Subspace::span(3, {unit_vec(3, 0), scaled(unit_vec(3, 0), Rational(2))});
  CHECK(s.dim() == 1);

  CHECK(Subspace::span(3, {}).is_zero());

  // {e1+e2, e2} has the canonical basis {e1, e2}.
  Vec v = unit_vec(3, 0);
  v[1] = Rational(1);
  Subspace t = Subspace::span(3, {v, unit_vec(3, 1)});
  CHECK(t.dim() == 2);
  CHECK(t.basis()[0] == unit_vec(3, 0));
  CHECK(t.basis()[1] == unit_vec(3, 1));
}

TEST_CASE("subspace span is idempotent") {
  std::vector<Vec> gens;
  for (int i = 0; i < 4; ++i) {
    Vec v(5);
    for (int j = 0; j < 5; ++j) v[static_cast<size_t>(j)] = Rational((i + 2) * (j + 1) % 7 - 3, 2);
    gens.push_back(v);
  }
  Subspace s = Subspace::span(5, gens);
  Subspace again = Subspace::span(5, s.basis());
  CHECK(s == again);
}

TEST_CASE("subspace membership and inclusion") {
  Subspace s = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)});
  Vec v = unit_vec(3, 0);
  v[1] = Rational(-7, 3);
  CHECK(s.contains(v));
  CHECK_FALSE(s.contains(unit_vec(3, 2)));
  CHECK(s.includes(Subspace::span(3, {v})));
  CHECK(Subspace::full(3).includes(s));
  CHECK_FALSE(s.includes(Subspace::full(3)));
  CHECK_THROWS_AS(Subspace::span(3, {unit_vec(2, 0)}), Error);
}
