#pragma once

#include <vector>

#include "trilie/linalg.hpp"

namespace trilie {

/// Linear subspace held as a canonical basis: the nonzero rows of the rref of any
/// generating set. Canonicality makes equality and inclusion syntactic.
class Subspace {
public:
  Subspace() : ambient_(0) {}

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& generators);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool includes(const Subspace& other) const;  // other subseteq this
  Subspace sum(const Subspace& other) const;

  bool is_zero() const { return basis_.empty(); }
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Pivot columns of the canonical basis, in row order.
  std::vector<int> pivots() const;

private:
  int ambient_;
  std::vector<Vec> basis_;
};

}  // namespace trilie
