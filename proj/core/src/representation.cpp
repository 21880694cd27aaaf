#include "trilie/representation.hpp"

#include <sstream>

#include "trilie/errors.hpp"

#include "action_cache.hpp"

namespace trilie {

std::string RepReport::describe() const {
  if (ok) return "representation axioms: ok";
  std::ostringstream os;
  os << "representation axiom " << axiom << " fails at (" << witness[0] + 1 << "," << witness[1] + 1
     << "," << witness[2] + 1 << "," << witness[3] + 1 << ")";
  return os.str();
}

Representation::Representation(ThreeLieAlgebra base, int space_dim, std::vector<std::string> space_labels)
    : base_(std::move(base)), space_dim_(space_dim) {
  if (space_dim < 0) throw Error(ErrorKind::ShapeMismatch, "negative module dimension");
  if (space_labels.empty()) space_labels = default_labels(space_dim, "v");
  if (static_cast<int>(space_labels.size()) != space_dim)
    throw Error(ErrorKind::ShapeMismatch, "module label count");
  space_labels_ = std::move(space_labels);
}

void Representation::set_action(int a, int b, const Mat& m) {
  if (a < 0 || b < 0 || a >= base_.dim() || b >= base_.dim())
    throw Error(ErrorKind::IndexRange, "action pair index");
  if (m.rows() != space_dim_ || m.cols() != space_dim_)
    throw Error(ErrorKind::ShapeMismatch, "action matrix shape");
  if (a == b) {
    if (!m.is_zero()) throw Error(ErrorKind::SignConflict, "action of a repeated pair must vanish");
    return;
  }
  Mat canonical = a < b ? m : -m;
  if (a > b) std::swap(a, b);
  if (canonical.is_zero()) {
    action_.erase({a, b});
    return;
  }
  action_[{a, b}] = std::move(canonical);
}

Mat Representation::action(int a, int b) const {
  if (a == b) return Mat::zero(space_dim_, space_dim_);
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = action_.find({a, b});
  if (it == action_.end()) return Mat::zero(space_dim_, space_dim_);
  return flip ? -it->second : it->second;
}

Vec Representation::act(int a, int b, const Vec& v) const {
  if (a == b) return zero_vec(space_dim_);
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = action_.find({a, b});
  if (it == action_.end()) return zero_vec(space_dim_);
  Vec out = it->second.apply(v);
  if (flip)
    for (auto& x : out) x = -x;
  return out;
}

Vec Representation::act_vec(const Vec& u, const Vec& v, const Vec& w) const {
  if (static_cast<int>(u.size()) != base_.dim() || static_cast<int>(v.size()) != base_.dim())
    throw Error(ErrorKind::ShapeMismatch, "action pair dimension");
  Vec out = zero_vec(space_dim_);
  for (const auto& [key, m] : action_) {
    const size_t a = static_cast<size_t>(key[0]);
    const size_t b = static_cast<size_t>(key[1]);
    const bool first = !u[a].is_zero() && !v[b].is_zero();
    const bool second = !u[b].is_zero() && !v[a].is_zero();
    if (!first && !second) continue;
    Rational coef = first ? u[a] * v[b] : Rational(0);
    if (second) coef -= u[b] * v[a];
    if (coef.is_zero()) continue;
    add_scaled(out, m.apply(w), coef);
  }
  return out;
}

RepReport check_representation(const Representation& rep) {
  RepReport report;
  const int n = rep.base().dim();
  const int m = rep.space_dim();
  const ThreeLieAlgebra& alg = rep.base();
  const internal::ActionCache cache(rep, n);

  // Both axioms are verified column by column through the cached actions.

  // Axiom 1: [rho(x1,x2), rho(x3,x4)] = rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4]),
  // skew in both pairs, so (a<b) x (c<d) suffices.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          Vec w1 = alg.bracket_basis(a, b, c);
          Vec w2 = alg.bracket_basis(a, b, d);
          for (int v = 0; v < m; ++v) {
            Vec lhs = cache.act_bv(a, b, cache.act_bb(c, d, v));
            lhs = sub(lhs, cache.act_bv(c, d, cache.act_bb(a, b, v)));
            Vec rhs = cache.act_vb(w1, d, v);  // rho(w1, x_d): w1 in the first slot
            rhs = add(rhs, cache.act_bvb(c, w2, v));
            if (lhs != rhs) {
              report.ok = false;
              report.axiom = 1;
              report.witness = {a, b, c, d};
              return report;
            }
          }
        }

  // Axiom 2: rho([x1,x2,x3],x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4),
  // skew in (x1,x2,x3); x4 runs free.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec w = alg.bracket_basis(a, b, c);
        for (int d = 0; d < n; ++d)
          for (int v = 0; v < m; ++v) {
            Vec lhs = cache.act_vb(w, d, v);
            Vec rhs = cache.act_bv(a, b, cache.act_bb(c, d, v));
            rhs = add(rhs, cache.act_bv(b, c, cache.act_bb(a, d, v)));
            rhs = add(rhs, cache.act_bv(c, a, cache.act_bb(b, d, v)));
            if (lhs != rhs) {
              report.ok = false;
              report.axiom = 2;
              report.witness = {a, b, c, d};
              return report;
            }
          }
      }
  return report;
}

Representation adjoint_rep(const ThreeLieAlgebra& alg) {
  Representation rep(alg, alg.dim(), alg.labels());
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = a + 1; b < alg.dim(); ++b) rep.set_action(a, b, alg.ad_matrix(a, b));
  return rep;
}

std::vector<std::string> dual_extended_labels(const std::vector<std::string>& base) {
  std::vector<std::string> labels = base;
  for (const auto& l : base) labels.push_back(l + "*");
  return labels;
}

Representation coadjoint_rep(const ThreeLieAlgebra& alg) {
  std::vector<std::string> duals;
  for (const auto& l : alg.labels()) duals.push_back(l + "*");
  Representation rep(alg, alg.dim(), duals);
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = a + 1; b < alg.dim(); ++b) rep.set_action(a, b, -alg.ad_matrix(a, b).transposed());
  return rep;
}

ThreeLieAlgebra semidirect_product_unverified(const ThreeLieAlgebra& alg, const Representation& rep) {
  const int n = alg.dim();
  const int m = rep.space_dim();
  std::vector<std::string> labels = alg.labels();
  labels.insert(labels.end(), rep.space_labels().begin(), rep.space_labels().end());
  ThreeLieAlgebra out(n + m, std::move(labels));
  for (const auto& [key, gamma] : alg.constants()) {
    Vec coeffs = zero_vec(n + m);
    for (int k = 0; k < n; ++k) coeffs[static_cast<size_t>(k)] = gamma[static_cast<size_t>(k)];
    out.set_bracket(key[0], key[1], key[2], coeffs);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat act = rep.action(a, b);
      for (int v = 0; v < m; ++v) {
        Vec column = act.col(v);
        if (is_zero(column)) continue;
        Vec coeffs = zero_vec(n + m);
        for (int k = 0; k < m; ++k) coeffs[static_cast<size_t>(n + k)] = column[static_cast<size_t>(k)];
        out.set_bracket(a, b, n + v, coeffs);
      }
    }
  return out;
}

ThreeLieAlgebra semidirect_product(const ThreeLieAlgebra& alg, const Representation& rep) {
  if (!(rep.base() == alg))
    throw Error(ErrorKind::ShapeMismatch, "representation is not over the given algebra");
  RepReport axioms = check_representation(rep);
  if (!axioms.ok) throw Error(ErrorKind::RepresentationAxiom, axioms.describe());
  ThreeLieAlgebra out = semidirect_product_unverified(alg, rep);
  FiReport fi = out.check_fundamental_identity();
  if (!fi.ok) throw Error(ErrorKind::FiViolation, "semidirect product: " + fi.describe());
  return out;
}

ThreeLieAlgebra b1_closed_form(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g) {
  if (!g.is_adapted()) throw Error(ErrorKind::NotAdapted, "closed form requires an adapted basis");
  const int n = alg.dim();
  const int s = g.s();
  ThreeLieAlgebra out(2 * n, dual_extended_labels(alg.labels()));
  auto gamma = [&](int a, int b, int c) { return alg.bracket_basis(a, b, c); };  // full coefficient vector

  // mu(x_a, x_b, x_c): the base bracket, with the graded case split on the k-range.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec gabc = gamma(a, b, c);
        Vec coeffs = zero_vec(2 * n);
        int lo = 0, hi = 0;  // empty by default (cases with structurally zero bracket)
        if (a < s && b < s && c >= s) { lo = 0; hi = s; }
        else if (a < s && b >= s && c >= s) { lo = s; hi = n; }
        for (int k = lo; k < hi; ++k) coeffs[static_cast<size_t>(k)] = gabc[static_cast<size_t>(k)];
        out.set_bracket(a, b, c, coeffs);
      }

  // mu(x_a, x_b, x_c*) = -sum_k Gamma^c_{abk} x_k*, k-range by the graded case.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lo = 0, hi = 0;
        const bool ap = a < s, bp = b < s, cp = c < s;
        if (ap && bp && cp) { lo = s; hi = n; }
        else if (!ap && !bp && !cp) { lo = 0; hi = s; }
        else if (ap && !bp && cp) { lo = 0; hi = s; }
        else if (ap && !bp && !cp) { lo = s; hi = n; }
        // remaining cases (a,b plus with c minus; a,b minus with c plus) vanish
        Vec coeffs = zero_vec(2 * n);
        for (int k = lo; k < hi; ++k) {
          Vec gabk = gamma(a, b, k);
          coeffs[static_cast<size_t>(n + k)] = -gabk[static_cast<size_t>(c)];
        }
        out.set_bracket(a, b, n + c, coeffs);
      }
  // mu with two or three dual arguments is zero: nothing to store.
  return out;
}

}  // namespace trilie
