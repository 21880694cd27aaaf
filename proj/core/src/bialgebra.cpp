#include "trilie/bialgebra.hpp"

#include <sstream>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

void require_adapted(const InvolutiveDerivation& g) {
  if (!g.is_adapted())
    throw Error(ErrorKind::NotAdapted, "construction requires an adapted eigenbasis");
}

}  // namespace

Tensor2 dbar(const ThreeLieAlgebra& b1, const InvolutiveDerivation& g) {
  require_adapted(g);
  const int n = g.ambient();
  if (b1.dim() != 2 * n) throw Error(ErrorKind::ShapeMismatch, "ambient is not the double space");
  Tensor2 out;
  out.ambient = b1;
  for (int i = 0; i < n; ++i) {
    const Rational eps = i < g.s() ? Rational(1) : Rational(-1);
    out.terms.add({n + i, i}, eps);  // x_i* (x) D x_i
  }
  return out;
}

Tensor2 r_matrix(const ThreeLieAlgebra& b1, const InvolutiveDerivation& g) {
  Tensor2 d = dbar(b1, g);
  Tensor2 out;
  out.ambient = d.ambient;
  out.terms = d.terms;
  for (const auto& [key, coef] : d.terms.terms()) out.terms.add({key[1], key[0]}, -coef);
  // skewness is structural here; assert it anyway
  SparseTensor<2> swapped = out.terms.permuted({1, 0});
  if (!(swapped == -out.terms)) throw Error(ErrorKind::Construction, "r-matrix is not skew");
  return out;
}

Tensor4 cybe_bracket(const Tensor2& r) {
  const ThreeLieAlgebra& alg = r.ambient;
  Tensor4 out;
  const auto& terms = r.terms.terms();
  for (const auto& [ka, ca] : terms)
    for (const auto& [kb, cb] : terms)
      for (const auto& [kc, cc] : terms) {
        const Rational coef = ca * cb * cc;
        const int ua = ka[0], va = ka[1];
        const int ub = kb[0], vb = kb[1];
        const int uc = kc[0], vc = kc[1];
        // [u_a,u_b,u_c] (x) v_a (x) v_b (x) v_c
        Vec w = alg.bracket_basis(ua, ub, uc);
        for (int k = 0; k < alg.dim(); ++k)
          if (!w[static_cast<size_t>(k)].is_zero())
            out.add({k, va, vb, vc}, coef * w[static_cast<size_t>(k)]);
        // u_a (x) [v_a,u_b,u_c] (x) v_b (x) v_c
        w = alg.bracket_basis(va, ub, uc);
        for (int k = 0; k < alg.dim(); ++k)
          if (!w[static_cast<size_t>(k)].is_zero())
            out.add({ua, k, vb, vc}, coef * w[static_cast<size_t>(k)]);
        // u_a (x) u_b (x) [v_a,v_b,u_c] (x) v_c
        w = alg.bracket_basis(va, vb, uc);
        for (int k = 0; k < alg.dim(); ++k)
          if (!w[static_cast<size_t>(k)].is_zero())
            out.add({ua, ub, k, vc}, coef * w[static_cast<size_t>(k)]);
        // u_a (x) u_b (x) u_c (x) [v_a,v_b,v_c]
        w = alg.bracket_basis(va, vb, vc);
        for (int k = 0; k < alg.dim(); ++k)
          if (!w[static_cast<size_t>(k)].is_zero())
            out.add({ua, ub, uc, k}, coef * w[static_cast<size_t>(k)]);
      }
  return out;
}

Comultiplication::Comultiplication(ThreeLieAlgebra b1, int base_dim, int plus_dim,
                                   std::vector<Tensor3Terms> delta1)
    : b1_(std::move(b1)), n_(base_dim), s_(plus_dim), d1_(std::move(delta1)) {
  if (static_cast<int>(d1_.size()) != b1_.dim())
    throw Error(ErrorKind::ShapeMismatch, "one tensor per basis index required");
  d2_.reserve(d1_.size());
  d3_.reserve(d1_.size());
  for (const auto& t : d1_) {
    d2_.push_back(t.permuted({2, 0, 1}));  // u(x)v(x)w -> w(x)u(x)v
    d3_.push_back(t.permuted({1, 2, 0}));  // u(x)v(x)w -> v(x)w(x)u
  }
}

Tensor3Terms Comultiplication::delta(int t) const {
  Tensor3Terms out = d1_[static_cast<size_t>(t)];
  out += d2_[static_cast<size_t>(t)];
  out += d3_[static_cast<size_t>(t)];
  return out;
}

Tensor3Terms Comultiplication::delta_component(int which, const Vec& v) const {
  if (static_cast<int>(v.size()) != b1_.dim())
    throw Error(ErrorKind::ShapeMismatch, "comultiplication argument dimension");
  const std::vector<Tensor3Terms>& src = which == 1 ? d1_ : which == 2 ? d2_ : d3_;
  Tensor3Terms out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& [key, coef] : src[k].terms()) out.add(key, coef * v[k]);
  }
  return out;
}

namespace {

// Defining sum: delta_1(x_t) = sum_{alpha,beta} [x_t, u_alpha, u_beta] (x) v_beta (x) v_alpha
// over the terms u (x) v of the r-matrix.
Tensor3Terms delta1_defining(const ThreeLieAlgebra& b1, const Tensor2& r, int t) {
  Tensor3Terms out;
  const auto& terms = r.terms.terms();
  for (const auto& [ka, ca] : terms)
    for (const auto& [kb, cb] : terms) {
      Vec w = b1.bracket_basis(t, ka[0], kb[0]);
      if (is_zero(w)) continue;
      const Rational coef = ca * cb;
      for (int p = 0; p < b1.dim(); ++p)
        if (!w[static_cast<size_t>(p)].is_zero())
          out.add({p, kb[1], ka[1]}, w[static_cast<size_t>(p)] * coef);
    }
  return out;
}

// Closed form of the same tensor, read off the graded structure constants.
Tensor3Terms delta1_closed(const ThreeLieAlgebra& base, int n, int s, int t) {
  Tensor3Terms out;
  auto eps = [&](int i) { return i < s ? Rational(1) : Rational(-1); };
  if (t < n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational ee = eps(i) * eps(j);
        for (int k = 0; k < n; ++k) {
          // -e_i e_j Gamma^i_{tjk} x_k* (x) x_j* (x) x_i
          Rational c1 = base.bracket_basis(t, j, k)[static_cast<size_t>(i)];
          if (!c1.is_zero()) out.add({n + k, n + j, i}, -ee * c1);
          // +e_i e_j Gamma^j_{tik} x_k* (x) x_j (x) x_i*
          Rational c2 = base.bracket_basis(t, i, k)[static_cast<size_t>(j)];
          if (!c2.is_zero()) out.add({n + k, j, n + i}, ee * c2);
          // +e_i e_j Gamma^k_{tij} x_k (x) x_j* (x) x_i*
          Rational c3 = base.bracket_basis(t, i, j)[static_cast<size_t>(k)];
          if (!c3.is_zero()) out.add({k, n + j, n + i}, ee * c3);
        }
      }
  } else {
    const int tp = t - n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational ee = eps(i) * eps(j);
        for (int k = 0; k < n; ++k) {
          // -e_i e_j Gamma^{t'}_{ijk} x_k* (x) x_j* (x) x_i*
          Rational c = base.bracket_basis(i, j, k)[static_cast<size_t>(tp)];
          if (!c.is_zero()) out.add({n + k, n + j, n + i}, -ee * c);
        }
      }
  }
  return out;
}

}  // namespace

Comultiplication delta_from_r(const ThreeLieAlgebra& b1, const InvolutiveDerivation& g) {
  require_adapted(g);
  const int n = g.ambient();
  const int s = g.s();
  if (b1.dim() != 2 * n) throw Error(ErrorKind::ShapeMismatch, "ambient is not the double space");

  // Base-block constants, needed by the closed form.
  ThreeLieAlgebra base(n);
  for (const auto& [key, gamma] : b1.constants()) {
    if (key[2] >= n) continue;  // keys are sorted, so all three lie in the base block
    Vec coeffs(gamma.begin(), gamma.begin() + n);
    base.set_bracket(key[0], key[1], key[2], coeffs);
  }

  Tensor2 r = r_matrix(b1, g);
  std::vector<Tensor3Terms> d1;
  d1.reserve(static_cast<size_t>(2 * n));
  for (int t = 0; t < 2 * n; ++t) {
    Tensor3Terms generic = delta1_defining(b1, r, t);
    Tensor3Terms closed = delta1_closed(base, n, s, t);
    if (!(generic == closed))
      throw Error(ErrorKind::ClosedFormMismatch,
                  "comultiplication closed form disagrees at basis index " + std::to_string(t + 1));
    d1.push_back(std::move(generic));
  }
  return Comultiplication(b1, n, s, std::move(d1));
}

std::string CocycleReport::describe() const {
  if (ok) return "local cocycle conditions: ok";
  std::ostringstream os;
  os << "cocycle condition " << component << " fails at (" << witness[0] + 1 << "," << witness[1] + 1
     << "," << witness[2] + 1 << ")";
  return os.str();
}

namespace {

// (1(x)..(x)ad(x)..(x)1) acting in the given slot.
Tensor3Terms ad_slot(const ThreeLieAlgebra& alg, int a, int b, int slot, const Tensor3Terms& t) {
  Tensor3Terms out;
  for (const auto& [key, coef] : t.terms()) {
    Vec w = alg.bracket_basis(a, b, key[static_cast<size_t>(slot)]);
    for (int k = 0; k < alg.dim(); ++k) {
      if (w[static_cast<size_t>(k)].is_zero()) continue;
      auto nk = key;
      nk[static_cast<size_t>(slot)] = k;
      out.add(nk, coef * w[static_cast<size_t>(k)]);
    }
  }
  return out;
}

}  // namespace

CocycleReport check_local_cocycle(const Comultiplication& c, const ThreeLieAlgebra& b1) {
  CocycleReport report;
  const int dim = b1.dim();
  for (int which = 1; which <= 3; ++which) {
    const int slot = which - 1;
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b)
        for (int z = b + 1; z < dim; ++z) {
          Tensor3Terms lhs = c.delta_component(which, b1.bracket_basis(a, b, z));
          Tensor3Terms rhs = ad_slot(b1, a, b, slot, which == 1 ? c.delta1(z) : which == 2 ? c.delta2(z) : c.delta3(z));
          rhs += ad_slot(b1, b, z, slot, which == 1 ? c.delta1(a) : which == 2 ? c.delta2(a) : c.delta3(a));
          rhs += ad_slot(b1, z, a, slot, which == 1 ? c.delta1(b) : which == 2 ? c.delta2(b) : c.delta3(b));
          if (!(lhs == rhs)) {
            report.ok = false;
            report.component = which;
            report.witness = {a, b, z};
            return report;
          }
        }
  }
  return report;
}

namespace {

std::vector<std::string> dual_y_labels(int n) {
  std::vector<std::string> labels = default_labels(n, "y");
  for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i) + "*");
  return labels;
}

// Graded case table for the dual multiplication, on sorted index triples.
ThreeLieAlgebra dual_closed_form(const ThreeLieAlgebra& base, int n, int s) {
  ThreeLieAlgebra out(2 * n, dual_y_labels(n));
  // delta*(y_a, y_b, y_c): negative of the base bracket, graded k-range.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec gabc = base.bracket_basis(a, b, c);
        int lo = 0, hi = 0;
        if (a < s && b < s && c >= s) { lo = 0; hi = s; }
        else if (a < s && b >= s && c >= s) { lo = s; hi = n; }
        Vec coeffs = zero_vec(2 * n);
        for (int k = lo; k < hi; ++k) coeffs[static_cast<size_t>(k)] = -gabc[static_cast<size_t>(k)];
        out.set_bracket(a, b, c, coeffs);
      }
  // delta*(y_a, y_b, y_c*) = +sum_k Gamma^c_{abk} y_k*, graded k-range.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lo = 0, hi = 0;
        const bool ap = a < s, bp = b < s, cp = c < s;
        if (ap && bp && cp) { lo = s; hi = n; }
        else if (!ap && !bp && !cp) { lo = 0; hi = s; }
        else if (ap && !bp && cp) { lo = 0; hi = s; }
        else if (ap && !bp && !cp) { lo = s; hi = n; }
        Vec coeffs = zero_vec(2 * n);
        for (int k = lo; k < hi; ++k)
          coeffs[static_cast<size_t>(n + k)] = base.bracket_basis(a, b, k)[static_cast<size_t>(c)];
        out.set_bracket(a, b, n + c, coeffs);
      }
  return out;
}

}  // namespace

ThreeLieAlgebra dual_algebra(const Comultiplication& c) {
  const int dim = c.dim();
  const int n = c.base_dim();

  ThreeLieAlgebra out(dim, dual_y_labels(n));
  std::vector<Tensor3Terms> delta_total;
  delta_total.reserve(static_cast<size_t>(dim));
  for (int t = 0; t < dim; ++t) delta_total.push_back(c.delta(t));

  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int cc = b + 1; cc < dim; ++cc) {
        std::array<int, 3> key{dual_partner(a, n), dual_partner(b, n), dual_partner(cc, n)};
        Vec coeffs = zero_vec(dim);
        for (int t = 0; t < dim; ++t)
          coeffs[static_cast<size_t>(dual_partner(t, n))] = delta_total[static_cast<size_t>(t)].at(key);
        out.set_bracket(a, b, cc, coeffs);
      }

  FiReport fi = out.check_fundamental_identity();
  if (!fi.ok) throw Error(ErrorKind::FiViolation, "dual algebra: " + fi.describe());

  // Base-block constants for the closed form.
  ThreeLieAlgebra base(n);
  for (const auto& [key, gamma] : c.ambient().constants()) {
    if (key[2] >= n) continue;
    Vec coeffs(gamma.begin(), gamma.begin() + n);
    base.set_bracket(key[0], key[1], key[2], coeffs);
  }
  ThreeLieAlgebra closed = dual_closed_form(base, n, c.plus_dim());
  if (!(closed == out))
    throw Error(ErrorKind::ClosedFormMismatch, "dual multiplication disagrees with the graded case table");

  // Duality round-trip: transposing the dual constants must reproduce delta exactly.
  for (int t = 0; t < dim; ++t) {
    Tensor3Terms rebuilt;
    for (const auto& [key, gamma] : out.constants()) {
      const Rational& coef = gamma[static_cast<size_t>(dual_partner(t, n))];
      if (coef.is_zero()) continue;
      const int p = dual_partner(key[0], n), q = dual_partner(key[1], n), r = dual_partner(key[2], n);
      rebuilt.add({p, q, r}, coef);
      rebuilt.add({q, r, p}, coef);
      rebuilt.add({r, p, q}, coef);
      rebuilt.add({q, p, r}, -coef);
      rebuilt.add({p, r, q}, -coef);
      rebuilt.add({r, q, p}, -coef);
    }
    if (!(rebuilt == delta_total[static_cast<size_t>(t)]))
      throw Error(ErrorKind::ClosedFormMismatch,
                  "duality round-trip fails at basis index " + std::to_string(t + 1));
  }
  return out;
}

}  // namespace trilie
