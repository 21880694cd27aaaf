#pragma once

#include <array>
#include <map>

#include "trilie/rational.hpp"

namespace trilie {

/// Sparse tensor with R integer indices; zero coefficients are never stored.
template <int R>
class SparseTensor {
public:
  using Key = std::array<int, R>;
  using Terms = std::map<Key, Rational>;

  void add(const Key& key, const Rational& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational at(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  SparseTensor& operator+=(const SparseTensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }

  SparseTensor operator-() const {
    SparseTensor out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }

  /// New tensor with slots rearranged: slot i of the result takes the index
  /// from slot perm[i] of this tensor.
  SparseTensor permuted(const std::array<int, R>& perm) const {
    SparseTensor out;
    for (const auto& [k, c] : terms_) {
      Key nk;
      for (int i = 0; i < R; ++i) nk[static_cast<size_t>(i)] = k[static_cast<size_t>(perm[static_cast<size_t>(i)])];
      out.add(nk, c);
    }
    return out;
  }

  bool operator==(const SparseTensor& o) const { return terms_ == o.terms_; }

private:
  Terms terms_;
};

using Tensor3Terms = SparseTensor<3>;
using Tensor4 = SparseTensor<4>;

inline Tensor3Terms swap12(const Tensor3Terms& t) { return t.permuted({1, 0, 2}); }
inline Tensor3Terms swap13(const Tensor3Terms& t) { return t.permuted({2, 1, 0}); }
inline Tensor3Terms swap23(const Tensor3Terms& t) { return t.permuted({0, 2, 1}); }

}  // namespace trilie
