#pragma once

// Internal: column cache with a pair-adjacency index for Representation actions.
// Every evaluation that fixes at least one basis slot reduces to short signed
// sums of cached columns.

#include <vector>

#include "trilie/representation.hpp"

namespace trilie::internal {

class ActionCache {
public:
  ActionCache(const Representation& rep, int base_dim)
      : space_dim_(rep.space_dim()), adjacency_(static_cast<size_t>(base_dim)) {
    for (const auto& [key, m] : rep.actions()) {
      const int id = static_cast<int>(cols_.size());
      std::vector<Vec> cols;
      for (int c = 0; c < space_dim_; ++c) cols.push_back(m.col(c));
      cols_.push_back(std::move(cols));
      adjacency_[static_cast<size_t>(key[0])].push_back({id, key[1], 1});
      adjacency_[static_cast<size_t>(key[1])].push_back({id, key[0], -1});
    }
  }

  int space_dim() const { return space_dim_; }

  // rho(x_a, x_b) e_w
  Vec act_bb(int a, int b, int w_idx) const {
    for (const auto& e : adjacency_[static_cast<size_t>(a)]) {
      if (e.other != b) continue;
      const Vec& col = cols_[static_cast<size_t>(e.id)][static_cast<size_t>(w_idx)];
      return e.sign > 0 ? col : scaled(col, Rational(-1));
    }
    return zero_vec(space_dim_);
  }

  // rho(x_a, x_b) w
  Vec act_bv(int a, int b, const Vec& w) const {
    Vec out = zero_vec(space_dim_);
    for (const auto& e : adjacency_[static_cast<size_t>(a)]) {
      if (e.other != b) continue;
      const auto& cols = cols_[static_cast<size_t>(e.id)];
      for (size_t j = 0; j < w.size(); ++j)
        if (!w[j].is_zero()) add_scaled(out, cols[j], e.sign > 0 ? w[j] : -w[j]);
      return out;
    }
    return out;
  }

  // rho(u, x_q) e_w, linear in u
  Vec act_vb(const Vec& u, int q, int w_idx) const {
    Vec out = zero_vec(space_dim_);
    for (const auto& e : adjacency_[static_cast<size_t>(q)]) {
      const Rational& coef = u[static_cast<size_t>(e.other)];
      if (coef.is_zero()) continue;
      add_scaled(out, cols_[static_cast<size_t>(e.id)][static_cast<size_t>(w_idx)],
                 e.sign > 0 ? -coef : coef);
    }
    return out;
  }

  // rho(x_p, v) e_w, linear in v
  Vec act_bvb(int p, const Vec& v, int w_idx) const {
    Vec out = zero_vec(space_dim_);
    for (const auto& e : adjacency_[static_cast<size_t>(p)]) {
      const Rational& coef = v[static_cast<size_t>(e.other)];
      if (coef.is_zero()) continue;
      add_scaled(out, cols_[static_cast<size_t>(e.id)][static_cast<size_t>(w_idx)],
                 e.sign > 0 ? coef : -coef);
    }
    return out;
  }

private:
  struct Edge {
    int id;
    int other;
    int sign;
  };
  int space_dim_;
  std::vector<std::vector<Vec>> cols_;
  std::vector<std::vector<Edge>> adjacency_;
};

}  // namespace trilie::internal
