#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/derivation.hpp"

namespace trilie {

struct RepReport {
  bool ok = true;
  int axiom = 0;  // 1 or 2
  std::array<int, 4> witness{};
  std::string describe() const;
};

/// A linear action rho: wedge^2 A -> gl(V) given by one matrix per basis pair (a<b),
/// extended skew in the pair.
class Representation {
public:
  Representation() : space_dim_(0) {}
  Representation(ThreeLieAlgebra base, int space_dim, std::vector<std::string> space_labels = {});

  const ThreeLieAlgebra& base() const { return base_; }
  int space_dim() const { return space_dim_; }
  const std::vector<std::string>& space_labels() const { return space_labels_; }

  void set_action(int a, int b, const Mat& m);
  Mat action(int a, int b) const;                       // signed lookup
  Vec act(int a, int b, const Vec& v) const;            // rho(x_a, x_b) v
  Vec act_vec(const Vec& u, const Vec& v, const Vec& w) const;  // rho(u, v) w, bilinear in (u,v)

  /// Stored canonical actions (keys a<b, zero matrices omitted).
  const std::map<std::array<int, 2>, Mat>& actions() const { return action_; }

private:
  ThreeLieAlgebra base_;
  int space_dim_;
  std::vector<std::string> space_labels_;
  std::map<std::array<int, 2>, Mat> action_;  // keys a<b, zero matrices omitted
};

/// Verifies both representation axioms exhaustively on basis tuples.
RepReport check_representation(const Representation& rep);

Representation adjoint_rep(const ThreeLieAlgebra& alg);

/// Dual of the adjoint: every action matrix is the negative transpose of the
/// corresponding adjoint action matrix.
Representation coadjoint_rep(const ThreeLieAlgebra& alg);

/// Semidirect product on A + V with V abelian and A acting through rep.
/// Checks the representation axioms first and verifies the fundamental identity
/// of the result before returning.
ThreeLieAlgebra semidirect_product(const ThreeLieAlgebra& alg, const Representation& rep);

/// Same construction without the final FI verification (the caller asserts it).
ThreeLieAlgebra semidirect_product_unverified(const ThreeLieAlgebra& alg, const Representation& rep);

/// Structure constants of A x| A* emitted directly from the graded case table,
/// indexed x_1..x_n, x_1*..x_n*. Requires an adapted basis. The generic coadjoint
/// semidirect product must reproduce this table entry-exact.
ThreeLieAlgebra b1_closed_form(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g);

/// Labels x_1..x_n followed by x_1*..x_n*.
std::vector<std::string> dual_extended_labels(const std::vector<std::string>& base);

}  // namespace trilie
