#pragma once

#include <array>
#include <string>
#include <utility>

#include "trilie/algebra.hpp"

namespace trilie {

struct DerivationReport {
  bool ok = true;
  std::array<int, 3> witness{};
  Vec lhs, rhs;
  std::string describe() const;
};

/// Checks D[x_a,x_b,x_c] = [Dx_a,x_b,x_c] + [x_a,Dx_b,x_c] + [x_a,x_b,Dx_c] on basis triples.
DerivationReport is_derivation(const ThreeLieAlgebra& alg, const Mat& d);

/// An involutive derivation together with its +1/-1 eigenspace decomposition.
class InvolutiveDerivation {
public:
  InvolutiveDerivation() = default;

  /// Validates d (involutive and a derivation of alg) and computes the eigenspaces
  /// as images of the projectors (I+D)/2 and (I-D)/2. Throws NotInvolutive or
  /// NotDerivation so callers can tell the two precondition failures apart.
  static InvolutiveDerivation eigen_split(const ThreeLieAlgebra& alg, const Mat& d);

  /// Packages the parts without validation. Intended for negative-control tests.
  static InvolutiveDerivation from_parts_unchecked(Mat d, Subspace plus, Subspace minus);

  const Mat& map() const { return d_; }
  const Subspace& plus_space() const { return plus_; }
  const Subspace& minus_space() const { return minus_; }
  int s() const { return plus_.dim(); }
  int ambient() const { return d_.rows(); }

  /// True when the basis is already an eigenbasis ordered plus-block first:
  /// plus = <e_1..e_s>, minus = <e_{s+1}..e_n>.
  bool is_adapted() const;

private:
  Mat d_;
  Subspace plus_, minus_;
};

struct GradingReport {
  bool ok = true;
  std::string violated;          // which inclusion failed
  std::array<int, 3> witness{};  // generator triple indices into the eigenbasis lists
  std::string describe() const;
};

/// Verifies the four bracket inclusions of the grading:
/// [A+,A+,A+] = 0, [A-,A-,A-] = 0, [A+,A+,A-] in A+, [A+,A-,A-] in A-.
GradingReport check_grading(const InvolutiveDerivation& g, const ThreeLieAlgebra& alg);

/// Returns an isomorphic algebra whose first s basis vectors span the +1 eigenspace
/// and the remaining ones the -1 eigenspace, together with the change-of-basis map P
/// (columns are the new basis in old coordinates, so P: new -> old is an isomorphism).
std::pair<ThreeLieAlgebra, Mat> adapted_basis(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g);

}  // namespace trilie
