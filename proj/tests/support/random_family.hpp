#pragma once

#include <random>
#include <vector>

#include "support/fixtures.hpp"
#include "trilie/derivation.hpp"
#include "trilie/linalg.hpp"

namespace trilie::fixtures {

// A graded input: an algebra in adapted form (plus block first) with the diagonal
// involution determined by s.
struct GradedInput {
  ThreeLieAlgebra algebra;
  int s = 0;
  Mat involution() const {
    Vec d(static_cast<size_t>(algebra.dim()), Rational(1));
    for (int i = s; i < algebra.dim(); ++i) d[static_cast<size_t>(i)] = Rational(-1);
    return Mat::diagonal(d);
  }
  InvolutiveDerivation grading() const {
    return InvolutiveDerivation::eigen_split(algebra, involution());
  }
};

// Transport along an invertible block map that preserves both eigenspaces; the
// diagonal involution survives unchanged, so the result is graded again.
inline GradedInput conjugate(const GradedInput& in, const Mat& q) {
  const int n = in.algebra.dim();
  Mat q_inv = inverse(q);
  ThreeLieAlgebra out(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec value = in.algebra.bracket(q.col(a), q.col(b), q.col(c));
        out.set_bracket(a, b, c, q_inv.apply(value));
      }
  return {std::move(out), in.s};
}

// Invertible map preserving both eigenblocks: upper-triangular with a few small
// integer couplings inside each block and diagonal scalings with small
// denominators. Sparse on purpose, so transported tables stay sparse.
inline Mat random_block_unimodular(std::mt19937_64& rng, int n, int s) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> scale_pick(0, 4);
  Mat q = Mat::identity(n);
  auto couple = [&](int lo, int hi) {
    if (hi - lo < 2) return;
    std::uniform_int_distribution<int> pos(lo, hi - 1);
    for (int k = 0; k < 2; ++k) {
      int r = pos(rng), c = pos(rng);
      if (r == c) continue;
      if (r > c) std::swap(r, c);
      q(r, c) = Rational(entry(rng));
    }
  };
  couple(0, s);
  couple(s, n);
  const Rational scales[5] = {Rational(1), Rational(1, 2), Rational(2), Rational(1, 3), Rational(3)};
  for (int i = 0; i < n; ++i) q(i, i) = scales[scale_pick(rng)];
  return q;
}

// Adapted form of the nilpotent seed: [e1,e2,e4] = e3 with s = 3.
inline GradedInput nilpotent4_adapted() {
  ThreeLieAlgebra a(4);
  a.set_bracket(0, 1, 3, unit_vec(4, 2));
  return {std::move(a), 3};
}

inline GradedInput example4_graded() { return {example4(), 3}; }

// Direct sum of a graded input with a split abelian block, reordered so the plus
// parts come first.
inline GradedInput padded(const GradedInput& in, int abelian_plus, int abelian_minus) {
  const int n = in.algebra.dim();
  const int m = abelian_plus + abelian_minus;
  ThreeLieAlgebra sum = direct_sum(in.algebra, ThreeLieAlgebra::abelian(m));
  // order: plus block of `in`, abelian plus block, minus block of `in`, abelian minus
  std::vector<int> new_from_old(static_cast<size_t>(n + m));
  for (int i = 0; i < in.s; ++i) new_from_old[static_cast<size_t>(i)] = i;
  for (int i = in.s; i < n; ++i) new_from_old[static_cast<size_t>(i)] = abelian_plus + i;
  for (int i = 0; i < abelian_plus; ++i) new_from_old[static_cast<size_t>(n + i)] = in.s + i;
  for (int i = 0; i < abelian_minus; ++i)
    new_from_old[static_cast<size_t>(n + abelian_plus + i)] = n + abelian_plus + i;
  ThreeLieAlgebra moved(n + m);
  for (const auto& [key, gamma] : sum.constants()) {
    Vec coeffs = zero_vec(n + m);
    for (int k = 0; k < n + m; ++k)
      coeffs[static_cast<size_t>(new_from_old[static_cast<size_t>(k)])] = gamma[static_cast<size_t>(k)];
    moved.set_bracket(new_from_old[static_cast<size_t>(key[0])], new_from_old[static_cast<size_t>(key[1])],
                      new_from_old[static_cast<size_t>(key[2])], coeffs);
  }
  return {std::move(moved), in.s + abelian_plus};
}

// Deterministic family of valid graded inputs built from the seeds by padding and
// eigenspace-preserving transport. Every member passes the identity and grading
// checks by construction (and the suites re-verify that).
inline std::vector<GradedInput> random_graded_family(int count, unsigned seed_base = 20240811) {
  std::vector<GradedInput> family;
  std::vector<GradedInput> seeds;
  seeds.push_back(example4_graded());
  seeds.push_back(nilpotent4_adapted());
  seeds.push_back(padded(example4_graded(), 1, 0));
  seeds.push_back(padded(example4_graded(), 0, 1));
  seeds.push_back(padded(nilpotent4_adapted(), 1, 1));
  seeds.push_back(GradedInput{ThreeLieAlgebra::abelian(4), 2});
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed_base + static_cast<unsigned>(i));
    const GradedInput& seed = seeds[static_cast<size_t>(i) % seeds.size()];
    Mat q = random_block_unimodular(rng, seed.algebra.dim(), seed.s);
    family.push_back(conjugate(seed, q));
  }
  return family;
}

}  // namespace trilie::fixtures
