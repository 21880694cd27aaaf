#include "trilie/manin.hpp"

#include <map>
#include <sstream>

#include "trilie/errors.hpp"

#include "action_cache.hpp"

namespace trilie {

std::string MatchedPairReport::describe() const {
  if (ok) return "matched pair: ok";
  std::ostringstream os;
  os << "matched pair fails (" << stage << ") at (";
  for (size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i] + 1;
  os << ")";
  return os.str();
}

namespace {

// The conditions must be evaluated against the algebras as passed, so the actions
// are rebound onto them; a perturbed factor then fails the module axioms instead of
// being masked by the representation's stored copy.
Representation rebased(const ThreeLieAlgebra& base, const Representation& rep) {
  Representation out(base, rep.space_dim(), rep.space_labels());
  for (int a = 0; a < base.dim(); ++a)
    for (int b = a + 1; b < base.dim(); ++b) out.set_action(a, b, rep.action(a, b));
  return out;
}

}  // namespace

MatchedPairReport check_matched_pair(const ThreeLieAlgebra& a1, const ThreeLieAlgebra& a2,
                                     const Representation& rho_in, const Representation& chi_in) {
  MatchedPairReport report;
  if (rho_in.space_dim() != a2.dim() || chi_in.space_dim() != a1.dim() ||
      rho_in.base().dim() != a1.dim() || chi_in.base().dim() != a2.dim())
    throw Error(ErrorKind::ShapeMismatch, "matched pair representation spaces");
  Representation rho = rebased(a1, rho_in);
  Representation chi = rebased(a2, chi_in);

  auto fail = [&](std::string stage, std::vector<int> witness) {
    report.ok = false;
    report.stage = std::move(stage);
    report.witness = std::move(witness);
    return report;
  };

  RepReport r1 = check_representation(rho);
  if (!r1.ok)
    return fail("rho module axiom " + std::to_string(r1.axiom),
                {r1.witness[0], r1.witness[1], r1.witness[2], r1.witness[3]});
  RepReport r2 = check_representation(chi);
  if (!r2.ok)
    return fail("chi module axiom " + std::to_string(r2.axiom),
                {r2.witness[0], r2.witness[1], r2.witness[2], r2.witness[3]});

  const int n1 = a1.dim(), n2 = a2.dim();
  for (int a = 0; a < n1; ++a)
    for (int b = a + 1; b < n1; ++b) {
      DerivationReport d = is_derivation(a2, rho.action(a, b));
      if (!d.ok) return fail("rho image not a derivation", {a, b, d.witness[0], d.witness[1], d.witness[2]});
    }
  for (int a = 0; a < n2; ++a)
    for (int b = a + 1; b < n2; ++b) {
      DerivationReport d = is_derivation(a1, chi.action(a, b));
      if (!d.ok) return fail("chi image not a derivation", {a, b, d.witness[0], d.witness[1], d.witness[2]});
    }

  const internal::ActionCache rc(rho, n1);  // rho: pairs of a1 acting on a2 coordinates
  const internal::ActionCache cc(chi, n2);  // chi: pairs of a2 acting on a1 coordinates

  // Mixed identity A: ad_{x1 x2} chi(a1,a2) x3 - chi(a1,a2) ad_{x1 x2} x3
  //                 = chi(rho(x1,x2) a1, a2) x3 + chi(a1, rho(x1,x2) a2) x3.
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = x1 + 1; x2 < n1; ++x2)
      for (int p = 0; p < n2; ++p) {
        Vec rho_p = rc.act_bb(x1, x2, p);
        for (int q = p + 1; q < n2; ++q)
          for (int x3 = 0; x3 < n1; ++x3) {
            Vec lhs = a1.bracket_pv(x1, x2, cc.act_bb(p, q, x3));
            lhs = sub(lhs, cc.act_bv(p, q, a1.bracket_basis(x1, x2, x3)));
            Vec rhs = cc.act_vb(rho_p, q, x3);
            rhs = add(rhs, cc.act_bvb(p, rc.act_bb(x1, x2, q), x3));
            if (lhs != rhs) return fail("mixed identity A", {x1, x2, p, q, x3});
          }
      }

  // Mixed identity B: the same with the roles of the two algebras exchanged.
  for (int p = 0; p < n2; ++p)
    for (int q = p + 1; q < n2; ++q)
      for (int x1 = 0; x1 < n1; ++x1) {
        Vec chi_x1 = cc.act_bb(p, q, x1);
        for (int x2 = x1 + 1; x2 < n1; ++x2)
          for (int r = 0; r < n2; ++r) {
            Vec lhs = a2.bracket_pv(p, q, rc.act_bb(x1, x2, r));
            lhs = sub(lhs, rc.act_bv(x1, x2, a2.bracket_basis(p, q, r)));
            Vec rhs = rc.act_vb(chi_x1, x2, r);
            rhs = add(rhs, rc.act_bvb(x1, cc.act_bb(p, q, x2), r));
            if (lhs != rhs) return fail("mixed identity B", {p, q, x1, x2, r});
          }
      }

  // Mixed identity C: ad_{x1 x2} chi(a1,a2) x3 = chi(rho(x1,x2) a1, a2) x3
  //                   - chi(a1, rho(x3,x1) a2) x2 - chi(a1, rho(x2,x3) a2) x1.
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = x1 + 1; x2 < n1; ++x2)
      for (int x3 = 0; x3 < n1; ++x3)
        for (int p = 0; p < n2; ++p) {
          Vec rho_p = rc.act_bb(x1, x2, p);
          for (int q = 0; q < n2; ++q) {
            Vec lhs = a1.bracket_pv(x1, x2, cc.act_bb(p, q, x3));
            Vec rhs = cc.act_vb(rho_p, q, x3);
            rhs = sub(rhs, cc.act_bvb(p, rc.act_bb(x3, x1, q), x2));
            rhs = sub(rhs, cc.act_bvb(p, rc.act_bb(x2, x3, q), x1));
            if (lhs != rhs) return fail("mixed identity C", {x1, x2, x3, p, q});
          }
        }

  // Mixed identity D: the dual statement of C.
  for (int p = 0; p < n2; ++p)
    for (int q = p + 1; q < n2; ++q)
      for (int r = 0; r < n2; ++r)
        for (int x1 = 0; x1 < n1; ++x1) {
          Vec chi_x1 = cc.act_bb(p, q, x1);
          for (int x2 = 0; x2 < n1; ++x2) {
            Vec lhs = a2.bracket_pv(p, q, rc.act_bb(x1, x2, r));
            Vec rhs = rc.act_vb(chi_x1, x2, r);
            rhs = sub(rhs, rc.act_bvb(x1, cc.act_bb(r, p, x2), q));
            rhs = sub(rhs, rc.act_bvb(x1, cc.act_bb(q, r, x2), p));
            if (lhs != rhs) return fail("mixed identity D", {p, q, r, x1, x2});
          }
        }

  return report;
}

// ---------------------------------------------------------------------------
// Factored graded constraint families.

namespace {

struct Atom {
  Rational coef;
  int idx;
  bool dual;
};

// mu of three atoms in the double space A x| A*, expanded directly through the base
// structure constants:
//   no dual:   sum_k Gamma^k_{abc} x_k
//   one dual:  -(sign) sum_k Gamma^t_{pqk} x_k*   after moving the dual argument last
//   otherwise: zero
std::vector<Atom> mu_atoms(const ThreeLieAlgebra& base, const Atom& a, const Atom& b, const Atom& c) {
  std::vector<Atom> out;
  Rational coef = a.coef * b.coef * c.coef;
  if (coef.is_zero()) return out;
  int duals = (a.dual ? 1 : 0) + (b.dual ? 1 : 0) + (c.dual ? 1 : 0);
  if (duals >= 2) return out;
  const int n = base.dim();
  if (duals == 0) {
    Vec w = base.bracket_basis(a.idx, b.idx, c.idx);
    for (int k = 0; k < n; ++k)
      if (!w[static_cast<size_t>(k)].is_zero()) out.push_back({coef * w[static_cast<size_t>(k)], k, false});
    return out;
  }
  int p, q, t;
  if (c.dual) {
    p = a.idx; q = b.idx; t = c.idx;
  } else if (b.dual) {
    p = c.idx; q = a.idx; t = b.idx;  // (a, b*, c) = (c, a, b*) by the cyclic rotation
  } else {
    p = b.idx; q = c.idx; t = a.idx;  // (a*, b, c) = (b, c, a*)
  }
  for (int k = 0; k < n; ++k) {
    Rational g = base.bracket_basis(p, q, k)[static_cast<size_t>(t)];
    if (!g.is_zero()) out.push_back({-coef * g, k, true});
  }
  return out;
}

using Residual = std::map<std::pair<int, bool>, Rational>;

void accumulate(Residual& res, const std::vector<Atom>& atoms, const Rational& scale) {
  for (const auto& atom : atoms) {
    auto key = std::make_pair(atom.idx, atom.dual);
    auto [it, inserted] = res.emplace(key, atom.coef * scale);
    if (!inserted) {
      it->second += atom.coef * scale;
      if (it->second.is_zero()) res.erase(it);
    }
  }
}

// Residual of the fundamental identity for the acting pair (u1,u2) on (w1,w2,w3),
// computed entirely as sums of products of two structure constants.
bool fi_residual_vanishes(const ThreeLieAlgebra& base, const Atom& u1, const Atom& u2, const Atom& w1,
                          const Atom& w2, const Atom& w3) {
  Residual res;
  auto outer = [&](const Atom& f1, const Atom& f2, const std::vector<Atom>& inner, const Rational& sc) {
    for (const auto& atom : inner) accumulate(res, mu_atoms(base, f1, f2, atom), sc);
  };
  outer(u1, u2, mu_atoms(base, w1, w2, w3), Rational(1));
  outer(w2, w3, mu_atoms(base, u1, u2, w1), Rational(-1));  // [mu(u1,u2,w1), w2, w3]
  outer(w3, w1, mu_atoms(base, u1, u2, w2), Rational(-1));  // [w1, mu(u1,u2,w2), w3]
  outer(w1, w2, mu_atoms(base, u1, u2, w3), Rational(-1));
  return res.empty();
}

}  // namespace

std::string JacobiReport::describe() const {
  if (ok) return "graded constraint families: ok (" + std::to_string(families_checked) + " residuals)";
  std::ostringstream os;
  os << "constraint family violated in group " << group << " at values (";
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << witness[static_cast<size_t>(i)] + 1;
  os << "), pair slots (" << pair_first << "," << pair_second << "), dual slot " << star;
  return os.str();
}

JacobiReport check_jacobi_constraints(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g) {
  if (!g.is_adapted()) throw Error(ErrorKind::NotAdapted, "constraint families require an adapted basis");
  JacobiReport report;
  const int n = alg.dim();
  const int s = g.s();

  // Graded value ranges, one per group: {plus-count values, minus-count values}.
  struct Group {
    int plus_count;
    int minus_count;
  };
  // Group 1: three plus values, two minus. Group 2: four plus, one minus.
  // Group 3: three minus, two plus. Group 4: four minus, one plus.
  const Group groups[4] = {{3, 2}, {4, 1}, {2, 3}, {1, 4}};

  std::vector<int> plus_vals, minus_vals;
  for (int i = 0; i < s; ++i) plus_vals.push_back(i);
  for (int i = s; i < n; ++i) minus_vals.push_back(i);

  for (int gi = 0; gi < 4; ++gi) {
    const int np = groups[gi].plus_count;
    const int nm = groups[gi].minus_count;
    // Enumerate np values from the plus range and nm from the minus range,
    // with repetition (the identities hold for every assignment).
    std::vector<int> vals(5);
    std::vector<size_t> counter(5, 0);
    const long plus_total = static_cast<long>(plus_vals.size());
    const long minus_total = static_cast<long>(minus_vals.size());
    if ((np > 0 && plus_total == 0) || (nm > 0 && minus_total == 0)) continue;
    long combos = 1;
    for (int i = 0; i < np; ++i) combos *= plus_total;
    for (int i = 0; i < nm; ++i) combos *= minus_total;
    for (long idx = 0; idx < combos; ++idx) {
      long rem = idx;
      for (int i = 0; i < np; ++i) {
        vals[static_cast<size_t>(i)] = plus_vals[static_cast<size_t>(rem % plus_total)];
        rem /= plus_total;
      }
      for (int i = 0; i < nm; ++i) {
        vals[static_cast<size_t>(np + i)] = minus_vals[static_cast<size_t>(rem % minus_total)];
        rem /= minus_total;
      }
      // Every split into acting pair + triple, every dual position (or none).
      for (int p1 = 0; p1 < 5; ++p1)
        for (int p2 = p1 + 1; p2 < 5; ++p2)
          for (int star = -1; star < 5; ++star) {
            std::array<Atom, 5> atoms;
            for (int i = 0; i < 5; ++i)
              atoms[static_cast<size_t>(i)] = {Rational(1), vals[static_cast<size_t>(i)], i == star};
            std::vector<Atom> triple;
            for (int i = 0; i < 5; ++i)
              if (i != p1 && i != p2) triple.push_back(atoms[static_cast<size_t>(i)]);
            ++report.families_checked;
            if (!fi_residual_vanishes(alg, atoms[static_cast<size_t>(p1)], atoms[static_cast<size_t>(p2)],
                                      triple[0], triple[1], triple[2])) {
              report.ok = false;
              report.group = gi + 1;
              for (int i = 0; i < 5; ++i) report.witness[static_cast<size_t>(i)] = vals[static_cast<size_t>(i)];
              report.pair_first = p1;
              report.pair_second = p2;
              report.star = star;
              return report;
            }
          }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Semidirect tables on the 4n-dimensional space.

namespace {

std::vector<std::string> quadruple_labels(const std::vector<std::string>& base) {
  std::vector<std::string> labels = dual_extended_labels(base);
  const int n = static_cast<int>(base.size());
  for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i) + "*");
  return labels;
}

// Coadjoint action of `alg` on its dual, written in partner coordinates:
// the basis vector with index p of the module pairs off the algebra basis
// vector with index partner(p).
Representation coadjoint_on_partner(const ThreeLieAlgebra& alg, int n,
                                    std::vector<std::string> module_labels) {
  const int dim = alg.dim();
  Representation rep(alg, dim, std::move(module_labels));
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      Mat ad = alg.ad_matrix(a, b);
      Mat m(dim, dim);
      for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q) {
          const Rational& entry = ad(dual_partner(p, n), q);
          if (!entry.is_zero()) m(dual_partner(q, n), p) = -entry;
        }
      rep.set_action(a, b, m);
    }
  return rep;
}

enum class Range { None, Plus, Minus };

void fill_range(int& lo, int& hi, Range r, int s, int n) {
  switch (r) {
    case Range::None: lo = 0; hi = 0; break;
    case Range::Plus: lo = 0; hi = s; break;
    case Range::Minus: lo = s; hi = n; break;
  }
}

// Case tables for the mixed brackets, keyed by the grading pattern of (a, b, t):
// bit 2 = a in the plus block, bit 1 = b, bit 0 = t.
struct MixedCase {
  Range range;
  int sign;  // applied to the structure constant
};

// [x_a, x_b, y_t] -> sign * sum_k Gamma^k_{abt} y_k over the k-range.
MixedCase xxy_case(bool ap, bool bp, bool tp) {
  if (ap && bp && !tp) return {Range::Plus, 1};
  if (ap && tp && !bp) return {Range::Plus, 1};
  if (tp && !ap && !bp) return {Range::Minus, 1};
  if (ap && !bp && !tp) return {Range::Minus, 1};
  return {Range::None, 1};
}

// [x_a, x_b, y_t*] -> sign * sum_k Gamma^t_{abk} y_k* over the k-range.
MixedCase xxy_star_case(bool ap, bool bp, bool tp) {
  if (ap && bp && tp) return {Range::Minus, -1};
  if (!ap && !bp && !tp) return {Range::Plus, -1};
  if (ap && tp && !bp) return {Range::Plus, -1};
  if (ap && !bp && !tp) return {Range::Minus, -1};
  return {Range::None, 1};
}

// [x_a*, x_b, y_t] -> sign * sum_k Gamma^a_{bkt} y_k* over the k-range.
MixedCase xstar_xy_case(bool ap, bool bp, bool tp) {
  if (ap && bp && tp) return {Range::Minus, 1};
  if (!ap && !bp && !tp) return {Range::Plus, 1};
  if (ap && bp && !tp) return {Range::Plus, 1};
  if (ap && tp && !bp) return {Range::Plus, 1};
  if (tp && !ap && !bp) return {Range::Minus, 1};
  if (bp && !ap && !tp) return {Range::Minus, 1};
  return {Range::None, 1};
}

// The closed-form bracket-1 table: the double-space bracket on the X block plus the
// graded case formulas for [X, X, Y].
ThreeLieAlgebra bracket1_closed(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g,
                                const ThreeLieAlgebra& b1_table) {
  const int n = alg.dim();
  const int s = g.s();
  const int N = 4 * n;
  ThreeLieAlgebra out(N, quadruple_labels(alg.labels()));

  for (const auto& [key, gamma] : b1_table.constants()) {
    Vec coeffs = zero_vec(N);
    for (int k = 0; k < 2 * n; ++k) coeffs[static_cast<size_t>(k)] = gamma[static_cast<size_t>(k)];
    out.set_bracket(key[0], key[1], key[2], coeffs);
  }

  auto gamma_of = [&](int a, int b, int c) { return alg.bracket_basis(a, b, c); };

  // [x_a, x_b, y_t], a < b
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int t = 0; t < n; ++t) {
        MixedCase mc = xxy_case(a < s, b < s, t < s);
        int lo = 0, hi = 0;
        fill_range(lo, hi, mc.range, s, n);
        Vec coeffs = zero_vec(N);
        Vec gabt = gamma_of(a, b, t);
        for (int k = lo; k < hi; ++k)
          coeffs[static_cast<size_t>(2 * n + k)] = Rational(mc.sign) * gabt[static_cast<size_t>(k)];
        out.set_bracket(a, b, 2 * n + t, coeffs);
      }

  // [x_a, x_b, y_t*], a < b
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int t = 0; t < n; ++t) {
        MixedCase mc = xxy_star_case(a < s, b < s, t < s);
        int lo = 0, hi = 0;
        fill_range(lo, hi, mc.range, s, n);
        Vec coeffs = zero_vec(N);
        for (int k = lo; k < hi; ++k)
          coeffs[static_cast<size_t>(3 * n + k)] =
              Rational(mc.sign) * gamma_of(a, b, k)[static_cast<size_t>(t)];
        out.set_bracket(a, b, 3 * n + t, coeffs);
      }

  // [x_a*, x_b, y_t], all a, b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int t = 0; t < n; ++t) {
        MixedCase mc = xstar_xy_case(a < s, b < s, t < s);
        int lo = 0, hi = 0;
        fill_range(lo, hi, mc.range, s, n);
        Vec coeffs = zero_vec(N);
        for (int k = lo; k < hi; ++k)
          coeffs[static_cast<size_t>(3 * n + k)] =
              Rational(mc.sign) * gamma_of(b, k, t)[static_cast<size_t>(a)];
        out.set_bracket(n + a, b, 2 * n + t, coeffs);
      }
  // [x_a*, x_b, y_t*], [x_a*, x_b*, .], [X, Y, Y] and everything in the Y block vanish.
  return out;
}

// The closed-form bracket-2 table: the dual-space bracket on the Y block plus the
// graded case formulas for [Y, Y, X].
ThreeLieAlgebra bracket2_closed(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g,
                                const ThreeLieAlgebra& b2_table) {
  const int n = alg.dim();
  const int s = g.s();
  const int N = 4 * n;
  ThreeLieAlgebra out(N, quadruple_labels(alg.labels()));

  for (const auto& [key, gamma] : b2_table.constants()) {
    Vec coeffs = zero_vec(N);
    for (int k = 0; k < 2 * n; ++k) coeffs[static_cast<size_t>(2 * n + k)] = gamma[static_cast<size_t>(k)];
    out.set_bracket(2 * n + key[0], 2 * n + key[1], 2 * n + key[2], coeffs);
  }

  auto gamma_of = [&](int a, int b, int c) { return alg.bracket_basis(a, b, c); };

  // [y_a, y_b, x_t] = -sign-mirrored [x_a, x_b, y_t] case, landing in the X block.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int t = 0; t < n; ++t) {
        MixedCase mc = xxy_case(a < s, b < s, t < s);
        int lo = 0, hi = 0;
        fill_range(lo, hi, mc.range, s, n);
        Vec coeffs = zero_vec(N);
        Vec gabt = gamma_of(a, b, t);
        for (int k = lo; k < hi; ++k)
          coeffs[static_cast<size_t>(k)] = Rational(-mc.sign) * gabt[static_cast<size_t>(k)];
        out.set_bracket(2 * n + a, 2 * n + b, t, coeffs);
      }

  // [y_a, y_b, x_t*] = -sign-mirrored [x_a, x_b, y_t*].
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int t = 0; t < n; ++t) {
        MixedCase mc = xxy_star_case(a < s, b < s, t < s);
        int lo = 0, hi = 0;
        fill_range(lo, hi, mc.range, s, n);
        Vec coeffs = zero_vec(N);
        for (int k = lo; k < hi; ++k)
          coeffs[static_cast<size_t>(n + k)] =
              Rational(-mc.sign) * gamma_of(a, b, k)[static_cast<size_t>(t)];
        out.set_bracket(2 * n + a, 2 * n + b, n + t, coeffs);
      }

  // [y_a*, y_b, x_t] = -sign-mirrored [x_a*, x_b, y_t].
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int t = 0; t < n; ++t) {
        MixedCase mc = xstar_xy_case(a < s, b < s, t < s);
        int lo = 0, hi = 0;
        fill_range(lo, hi, mc.range, s, n);
        Vec coeffs = zero_vec(N);
        for (int k = lo; k < hi; ++k)
          coeffs[static_cast<size_t>(n + k)] =
              Rational(-mc.sign) * gamma_of(b, k, t)[static_cast<size_t>(a)];
        out.set_bracket(3 * n + a, 2 * n + b, t, coeffs);
      }
  return out;
}

}  // namespace

ThreeLieAlgebra reindex(const ThreeLieAlgebra& alg, const std::vector<int>& new_from_old,
                        std::vector<std::string> labels) {
  ThreeLieAlgebra out(alg.dim(), std::move(labels));
  for (const auto& [key, gamma] : alg.constants()) {
    Vec coeffs = zero_vec(alg.dim());
    for (int k = 0; k < alg.dim(); ++k)
      coeffs[static_cast<size_t>(new_from_old[static_cast<size_t>(k)])] = gamma[static_cast<size_t>(k)];
    out.set_bracket(new_from_old[static_cast<size_t>(key[0])], new_from_old[static_cast<size_t>(key[1])],
                    new_from_old[static_cast<size_t>(key[2])], coeffs);
  }
  return out;
}

SemidirectTables semidirect_closed_forms(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g) {
  if (!g.is_adapted()) throw Error(ErrorKind::NotAdapted, "closed forms require an adapted basis");
  const int n = alg.dim();

  SemidirectTables tables;
  tables.b1 = semidirect_product(alg, coadjoint_rep(alg));
  {
    ThreeLieAlgebra closed = b1_closed_form(alg, g);
    if (!(closed == tables.b1))
      throw Error(ErrorKind::ClosedFormMismatch, "double-space table disagrees with the graded cases");
  }
  Comultiplication delta = delta_from_r(tables.b1, g);
  tables.b2 = dual_algebra(delta);

  std::vector<std::string> y_labels(tables.b2.labels());
  tables.adelta = coadjoint_on_partner(tables.b1, n, y_labels);
  tables.apsi = coadjoint_on_partner(tables.b2, n, tables.b1.labels());

  // Generic route: both tables as coadjoint semidirect products.
  ThreeLieAlgebra bracket1_generic = semidirect_product_unverified(tables.b1, tables.adelta);
  bracket1_generic.set_labels(quadruple_labels(alg.labels()));

  ThreeLieAlgebra bracket2_yfirst = semidirect_product_unverified(tables.b2, tables.apsi);
  std::vector<int> to_xfirst(static_cast<size_t>(4 * n));
  for (int i = 0; i < 2 * n; ++i) to_xfirst[static_cast<size_t>(i)] = 2 * n + i;       // Y block
  for (int i = 0; i < 2 * n; ++i) to_xfirst[static_cast<size_t>(2 * n + i)] = i;      // X block
  ThreeLieAlgebra bracket2_generic = reindex(bracket2_yfirst, to_xfirst, quadruple_labels(alg.labels()));

  ThreeLieAlgebra b1c = bracket1_closed(alg, g, tables.b1);
  if (!(b1c == bracket1_generic))
    throw Error(ErrorKind::ClosedFormMismatch, "first 4n-dimensional table disagrees with the graded cases");
  ThreeLieAlgebra b2c = bracket2_closed(alg, g, tables.b2);
  if (!(b2c == bracket2_generic))
    throw Error(ErrorKind::ClosedFormMismatch, "second 4n-dimensional table disagrees with the graded cases");

  tables.bracket1 = std::move(bracket1_generic);
  tables.bracket2 = std::move(bracket2_generic);
  return tables;
}

std::string DerImageReport::describe() const {
  if (ok) return "coadjoint images are derivations: ok";
  std::ostringstream os;
  os << which << " image at pair (" << pair[0] + 1 << "," << pair[1] + 1 << ") is not a derivation: "
     << detail;
  return os.str();
}

DerImageReport check_derivation_images(const SemidirectTables& tables) {
  DerImageReport report;
  const int dim = tables.b1.dim();
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      DerivationReport d = is_derivation(tables.b2, tables.adelta.action(a, b));
      if (!d.ok) {
        report.ok = false;
        report.which = "adelta";
        report.pair = {a, b};
        report.detail = d.describe();
        return report;
      }
    }
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      DerivationReport d = is_derivation(tables.b1, tables.apsi.action(a, b));
      if (!d.ok) {
        report.ok = false;
        report.which = "apsi";
        report.pair = {a, b};
        report.detail = d.describe();
        return report;
      }
    }
  return report;
}

DerImageReport check_derivation_images(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g) {
  return check_derivation_images(semidirect_closed_forms(alg, g));
}

Rational PairingForm::eval(const Vec& u, const Vec& v) const {
  Vec mv = matrix.apply(v);
  Rational out;
  for (size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && !mv[i].is_zero()) out += u[i] * mv[i];
  return out;
}

ManinPipeline run_pipeline(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g,
                           const PipelineOptions& opts) {
  ManinPipeline p;

  // Adapt the basis if needed; the grading of the adapted algebra is diagonal.
  if (g.is_adapted()) {
    p.base = alg;
    p.grading = g;
    p.adapt_map = Mat::identity(alg.dim());
  } else {
    auto [adapted, map] = adapted_basis(alg, g);
    const int n = alg.dim();
    Vec diag(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) diag[static_cast<size_t>(i)] = i < g.s() ? Rational(1) : Rational(-1);
    p.base = std::move(adapted);
    p.grading = InvolutiveDerivation::eigen_split(p.base, Mat::diagonal(diag));
    p.adapt_map = std::move(map);
  }

  GradingReport grading_ok = check_grading(p.grading, p.base);
  if (!grading_ok.ok) throw Error(ErrorKind::Construction, "grading: " + grading_ok.describe());

  p.tables = semidirect_closed_forms(p.base, p.grading);
  p.b1 = p.tables.b1;
  p.b2 = p.tables.b2;

  p.r = r_matrix(p.b1, p.grading);
  p.cybe = cybe_bracket(p.r);
  if (!p.cybe.is_zero())
    throw Error(ErrorKind::Construction, "r-matrix does not solve the ternary Yang-Baxter equation");

  p.delta = delta_from_r(p.b1, p.grading);
  if (opts.check_cocycle) {
    CocycleReport c = check_local_cocycle(p.delta, p.b1);
    if (!c.ok) throw Error(ErrorKind::Construction, c.describe());
  }

  const int n = p.base.dim();
  const int N = 4 * n;

  // Total bracket: the union of the two tables. Their nonzero supports are disjoint,
  // so any key collision would be a construction error surfaced by set_bracket.
  ThreeLieAlgebra total(N, p.tables.bracket1.labels());
  for (const auto& [key, gamma] : p.tables.bracket1.constants()) total.set_bracket(key[0], key[1], key[2], gamma);
  for (const auto& [key, gamma] : p.tables.bracket2.constants()) total.set_bracket(key[0], key[1], key[2], gamma);

  // Pairing: <X_p, Y_q> = 1 exactly when q is the partner index of p.
  Mat form(N, N);
  for (int pidx = 0; pidx < 2 * n; ++pidx) {
    int q = dual_partner(pidx, n);
    form(pidx, 2 * n + q) = Rational(1);
    form(2 * n + q, pidx) = Rational(1);
  }

  // Isotropy and the subalgebra/containment conditions, straight off the table.
  for (const auto& [key, gamma] : total.constants()) {
    const bool in_x = key[2] < 2 * n;            // keys sorted: all three in the X block
    const bool in_y = key[0] >= 2 * n;           // all three in the Y block
    int x_args = 0;
    for (int i = 0; i < 3; ++i) x_args += key[static_cast<size_t>(i)] < 2 * n ? 1 : 0;
    for (int k = 0; k < N; ++k) {
      if (gamma[static_cast<size_t>(k)].is_zero()) continue;
      const bool value_in_x = k < 2 * n;
      if (in_x && !value_in_x)
        throw Error(ErrorKind::Construction, "first factor is not a subalgebra");
      if (in_y && value_in_x)
        throw Error(ErrorKind::Construction, "second factor is not a subalgebra");
      if (x_args == 2 && value_in_x)
        throw Error(ErrorKind::Construction, "[B1,B1,B2] escapes the second factor");
      if (x_args == 1 && !value_in_x)
        throw Error(ErrorKind::Construction, "[B2,B2,B1] escapes the first factor");
    }
  }

  // Restrictions agree with the two factor algebras.
  {
    ThreeLieAlgebra rx(2 * n), ry(2 * n);
    for (const auto& [key, gamma] : total.constants()) {
      if (key[2] < 2 * n) {
        Vec coeffs(gamma.begin(), gamma.begin() + 2 * n);
        rx.set_bracket(key[0], key[1], key[2], coeffs);
      } else if (key[0] >= 2 * n) {
        Vec coeffs(gamma.begin() + 2 * n, gamma.end());
        ry.set_bracket(key[0] - 2 * n, key[1] - 2 * n, key[2] - 2 * n, coeffs);
      }
    }
    if (!(rx == p.b1)) throw Error(ErrorKind::Construction, "restriction to the first factor is wrong");
    if (!(ry == p.b2)) throw Error(ErrorKind::Construction, "restriction to the second factor is wrong");
  }

  // Metric invariance ([u,v,w],z) + (w,[u,v,z]) = 0 on basis tuples. The pairing of a
  // vector against a basis element reads off one coefficient.
  auto paired_index = [&](int d) { return d < 2 * n ? 2 * n + dual_partner(d, n) : dual_partner(d - 2 * n, n); };
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = c; d < N; ++d) {
          const Rational lhs = total.bracket_basis(a, b, c)[static_cast<size_t>(paired_index(d))];
          const Rational rhs = total.bracket_basis(a, b, d)[static_cast<size_t>(paired_index(c))];
          if (!(lhs + rhs).is_zero())
            throw Error(ErrorKind::Construction, "metric invariance fails at (" + std::to_string(a + 1) +
                                                     "," + std::to_string(b + 1) + "," + std::to_string(c + 1) +
                                                     "," + std::to_string(d + 1) + ")");
        }

  if (rank(form) != N) throw Error(ErrorKind::Construction, "pairing form is degenerate");

  if (opts.verify_total_fi) {
    FiReport fi = total.check_fundamental_identity();
    if (!fi.ok) throw Error(ErrorKind::FiViolation, "total algebra: " + fi.describe());
  }

  std::vector<Vec> xgens, ygens;
  for (int i = 0; i < 2 * n; ++i) xgens.push_back(unit_vec(N, i));
  for (int i = 2 * n; i < N; ++i) ygens.push_back(unit_vec(N, i));
  p.triple = ManinTriple{std::move(total), Subspace::span(N, xgens), Subspace::span(N, ygens),
                         PairingForm{std::move(form)}};
  return p;
}

ManinTriple build_manin(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g) {
  return run_pipeline(alg, g).triple;
}

}  // namespace trilie
