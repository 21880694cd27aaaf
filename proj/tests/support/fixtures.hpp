#pragma once

#include "trilie/algebra.hpp"
#include "trilie/derivation.hpp"

namespace trilie::fixtures {

// The 4-dimensional algebra with [x2,x3,x4] = x1 and [x1,x3,x4] = x2, together with
// the involution fixing x1..x3 and negating x4. Used as the primary worked input.
inline ThreeLieAlgebra example4() {
  ThreeLieAlgebra a(4);
  Vec e1 = unit_vec(4, 0);
  Vec e2 = unit_vec(4, 1);
  a.set_bracket(1, 2, 3, e1);  // [x2,x3,x4] = x1
  a.set_bracket(0, 2, 3, e2);  // [x1,x3,x4] = x2
  return a;
}

inline Mat example4_involution() {
  Vec d(4, Rational(1));
  d[3] = Rational(-1);
  return Mat::diagonal(d);
}

// [x1,x2,x3] = x4 with the involution negating x3; a second valid graded seed.
inline ThreeLieAlgebra nilpotent4() {
  ThreeLieAlgebra a(4);
  a.set_bracket(0, 1, 2, unit_vec(4, 3));
  return a;
}

inline Mat nilpotent4_involution() {
  Vec d(4, Rational(1));
  d[2] = Rational(-1);
  return Mat::diagonal(d);
}

}  // namespace trilie::fixtures
