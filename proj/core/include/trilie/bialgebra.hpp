#pragma once

#include <string>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/derivation.hpp"
#include "trilie/tensor.hpp"

namespace trilie {

/// Element of B (x) B for a fixed ambient algebra.
struct Tensor2 {
  ThreeLieAlgebra ambient;
  SparseTensor<2> terms;
};

/// sum_i x_i* (x) D x_i, living in the semidirect product A x| A*.
Tensor2 dbar(const ThreeLieAlgebra& b1, const InvolutiveDerivation& g);

/// Skew solution candidate r = dbar - swap(dbar); swapness is asserted.
Tensor2 r_matrix(const ThreeLieAlgebra& b1, const InvolutiveDerivation& g);

/// The four-term bracket of r with itself; zero exactly when r solves the
/// ternary classical Yang-Baxter equation in the ambient algebra.
Tensor4 cybe_bracket(const Tensor2& r);

/// Comultiplication with the three addends stored separately per basis index.
/// The second and third addends are index rotations of the first.
class Comultiplication {
public:
  Comultiplication() : n_(0), s_(0) {}
  Comultiplication(ThreeLieAlgebra b1, int base_dim, int plus_dim,
                   std::vector<Tensor3Terms> delta1);

  int dim() const { return b1_.dim(); }
  int base_dim() const { return n_; }
  int plus_dim() const { return s_; }
  const ThreeLieAlgebra& ambient() const { return b1_; }

  const Tensor3Terms& delta1(int t) const { return d1_[static_cast<size_t>(t)]; }
  const Tensor3Terms& delta2(int t) const { return d2_[static_cast<size_t>(t)]; }
  const Tensor3Terms& delta3(int t) const { return d3_[static_cast<size_t>(t)]; }
  Tensor3Terms delta(int t) const;

  /// Component maps applied to an arbitrary vector, by linearity.
  Tensor3Terms delta_component(int which, const Vec& v) const;

private:
  ThreeLieAlgebra b1_;
  int n_, s_;
  std::vector<Tensor3Terms> d1_, d2_, d3_;
};

/// Builds the comultiplication induced by r_matrix(g) on b1 two ways - the defining
/// double sum over the terms of r, and the direct structure-constant sums - and
/// throws ClosedFormMismatch naming the basis index if they ever disagree.
Comultiplication delta_from_r(const ThreeLieAlgebra& b1, const InvolutiveDerivation& g);

struct CocycleReport {
  bool ok = true;
  int component = 0;  // 1, 2 or 3
  std::array<int, 3> witness{};
  std::string describe() const;
};

/// Verifies that each addend is a 1-cocycle for its twisted adjoint action:
/// delta_i([x,y,z]) = rho_i(x,y) delta_i(z) + rho_i(y,z) delta_i(x) + rho_i(z,x) delta_i(y),
/// where rho_1 = ad (x) 1 (x) 1, rho_2 = 1 (x) ad (x) 1, rho_3 = 1 (x) 1 (x) ad.
CocycleReport check_local_cocycle(const Comultiplication& c, const ThreeLieAlgebra& b1);

/// The algebra on the dual space: structure constants are the transpose of the
/// comultiplication under the cross pairing <x_i, y_j*> = <x_i*, y_j> = delta_ij.
/// The fundamental identity, the graded closed-form table, and the duality
/// round-trip (rebuilding delta from the result) are all verified.
ThreeLieAlgebra dual_algebra(const Comultiplication& c);

/// Index of the pairing partner inside one 2n block: i <-> i+n (mod 2n).
inline int dual_partner(int index, int n) { return index < n ? index + n : index - n; }

}  // namespace trilie
