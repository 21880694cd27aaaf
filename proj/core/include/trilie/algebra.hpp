#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trilie/linalg.hpp"
#include "trilie/subspace.hpp"

namespace trilie {

struct FiReport {
  bool ok = true;
  std::array<int, 5> witness{};  // lexicographically first violating 5-tuple (0-based)
  Vec residual;
  long tuples_checked = 0;
  std::string describe() const;
};

struct HomReport {
  bool ok = true;
  std::array<int, 3> witness{};
  std::string describe() const;
};

/// Finite-dimensional 3-Lie algebra over the rationals, given by structure constants.
///
/// Only strictly increasing index triples are stored; every other argument order is
/// recovered by the sign of the sorting permutation, so total skew-symmetry is
/// structural. The fundamental identity is checked on demand, never assumed.
class ThreeLieAlgebra {
public:
  ThreeLieAlgebra() : dim_(0) {}
  explicit ThreeLieAlgebra(int dim, std::vector<std::string> labels = {});

  static ThreeLieAlgebra abelian(int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Declares [x_a, x_b, x_c] = sum_k coeffs[k] x_k (0-based, arguments in any order).
  /// The triple is sign-normalized before storage. Re-declaring an unordered triple
  /// is allowed only when consistent after sign adjustment; anything else throws.
  void set_bracket(int a, int b, int c, const Vec& coeffs);

  const std::map<std::array<int, 3>, Vec>& constants() const { return constants_; }

  /// [x_a, x_b, x_c] for basis indices in any order.
  Vec bracket_basis(int a, int b, int c) const;

  /// [x_a, x_b, w] for basis indices a, b and an arbitrary vector w.
  Vec bracket_pv(int a, int b, const Vec& w) const;

  /// Full trilinear bracket.
  Vec bracket(const Vec& u, const Vec& v, const Vec& w) const;

  /// Matrix of ad_{x_a x_b}: column t holds [x_a, x_b, x_t].
  Mat ad_matrix(int a, int b) const;

  /// Exhaustive fundamental-identity scan over pairs (a<b) and triples (c<d<e).
  FiReport check_fundamental_identity() const;

  bool operator==(const ThreeLieAlgebra& o) const {
    return dim_ == o.dim_ && constants_ == o.constants_;
  }

private:
  void check_index(int i) const;

  int dim_;
  std::vector<std::string> labels_;
  std::map<std::array<int, 3>, Vec> constants_;  // keys strictly increasing, values nonzero
};

/// Verifies f[u,v,w] = [fu,fv,fw] on all basis triples of src.
HomReport check_homomorphism(const Mat& f, const ThreeLieAlgebra& src, const ThreeLieAlgebra& dst);

/// Block sum: mixed brackets vanish.
ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b);

std::vector<std::string> default_labels(int dim, const std::string& stem = "x");

}  // namespace trilie
