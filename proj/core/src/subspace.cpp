#include "trilie/subspace.hpp"

#include "trilie/errors.hpp"

namespace trilie {

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (int i = 0; i < ambient; ++i) s.basis_.push_back(unit_vec(ambient, i));
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& generators) {
  Subspace s;
  s.ambient_ = ambient;
  if (generators.empty()) return s;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient)
      throw Error(ErrorKind::ShapeMismatch, "span generator dimension mismatch");
  }
  RrefResult rr = rref(Mat::from_rows(generators));
  for (int r = 0; r < static_cast<int>(rr.pivots.size()); ++r) s.basis_.push_back(rr.reduced.row(r));
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw Error(ErrorKind::ShapeMismatch, "membership test dimension mismatch");
  Vec w = v;
  std::vector<int> piv = pivots();
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Rational& c = w[static_cast<size_t>(piv[i])];
    if (!c.is_zero()) {
      Rational factor = c;  // basis rows have pivot entry 1
      for (size_t j = 0; j < w.size(); ++j) w[j] -= factor * basis_[i][j];
    }
  }
  return trilie::is_zero(w);
}

bool Subspace::includes(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error(ErrorKind::ShapeMismatch, "subspace ambient mismatch");
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error(ErrorKind::ShapeMismatch, "subspace ambient mismatch");
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, gens);
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> piv;
  piv.reserve(basis_.size());
  for (const auto& row : basis_) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) {
        piv.push_back(static_cast<int>(c));
        break;
      }
    }
  }
  return piv;
}

}  // namespace trilie
