#include "trilie/derivation.hpp"

#include <sstream>

#include "trilie/errors.hpp"

namespace trilie {

std::string DerivationReport::describe() const {
  if (ok) return "derivation law: ok";
  std::ostringstream os;
  os << "derivation law fails at (" << witness[0] + 1 << "," << witness[1] + 1 << ","
     << witness[2] + 1 << ")";
  return os.str();
}

DerivationReport is_derivation(const ThreeLieAlgebra& alg, const Mat& d) {
  if (d.rows() != alg.dim() || d.cols() != alg.dim())
    throw Error(ErrorKind::ShapeMismatch, "derivation matrix must be n x n");
  DerivationReport report;
  const int n = alg.dim();
  std::vector<Vec> dcols;
  for (int c = 0; c < n; ++c) dcols.push_back(d.col(c));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        Vec lhs = d.apply(alg.bracket_basis(a, b, c));
        // [Da,b,c] + [a,Db,c] + [a,b,Dc], each rotated to put the image last
        Vec rhs = alg.bracket_pv(b, c, dcols[static_cast<size_t>(a)]);
        rhs = add(rhs, alg.bracket_pv(c, a, dcols[static_cast<size_t>(b)]));
        rhs = add(rhs, alg.bracket_pv(a, b, dcols[static_cast<size_t>(c)]));
        if (lhs != rhs) {
          report.ok = false;
          report.witness = {a, b, c};
          report.lhs = std::move(lhs);
          report.rhs = std::move(rhs);
          return report;
        }
      }
    }
  }
  return report;
}

InvolutiveDerivation InvolutiveDerivation::eigen_split(const ThreeLieAlgebra& alg, const Mat& d) {
  if (d.rows() != alg.dim() || d.cols() != alg.dim())
    throw Error(ErrorKind::ShapeMismatch, "derivation matrix must be n x n");
  const int n = alg.dim();
  if (!(d * d == Mat::identity(n)))
    throw Error(ErrorKind::NotInvolutive, "map squared is not the identity");
  DerivationReport der = is_derivation(alg, d);
  if (!der.ok) throw Error(ErrorKind::NotDerivation, der.describe());

  const Rational half(1, 2);
  Mat plus_proj = (d + Mat::identity(n)).scaled(half);
  Mat minus_proj = (Mat::identity(n) - d).scaled(half);
  std::vector<Vec> plus_cols, minus_cols;
  for (int c = 0; c < n; ++c) {
    plus_cols.push_back(plus_proj.col(c));
    minus_cols.push_back(minus_proj.col(c));
  }
  InvolutiveDerivation g;
  g.d_ = d;
  g.plus_ = Subspace::span(n, plus_cols);
  g.minus_ = Subspace::span(n, minus_cols);
  if (g.plus_.dim() + g.minus_.dim() != n)
    throw Error(ErrorKind::Construction, "eigenspace dimensions do not fill the space");
  return g;
}

InvolutiveDerivation InvolutiveDerivation::from_parts_unchecked(Mat d, Subspace plus, Subspace minus) {
  InvolutiveDerivation g;
  g.d_ = std::move(d);
  g.plus_ = std::move(plus);
  g.minus_ = std::move(minus);
  return g;
}

bool InvolutiveDerivation::is_adapted() const {
  const int n = ambient();
  const int sdim = s();
  for (int i = 0; i < sdim; ++i) {
    if (!plus_.contains(unit_vec(n, i))) return false;
  }
  for (int i = sdim; i < n; ++i) {
    if (!minus_.contains(unit_vec(n, i))) return false;
  }
  return true;
}

std::string GradingReport::describe() const {
  if (ok) return "grading inclusions: ok";
  std::ostringstream os;
  os << "grading violated: " << violated << " at generator triple (" << witness[0] + 1 << ","
     << witness[1] + 1 << "," << witness[2] + 1 << ")";
  return os.str();
}

GradingReport check_grading(const InvolutiveDerivation& g, const ThreeLieAlgebra& alg) {
  GradingReport report;
  const auto& plus = g.plus_space().basis();
  const auto& minus = g.minus_space().basis();
  const Subspace& ap = g.plus_space();
  const Subspace& am = g.minus_space();

  auto scan = [&](const std::vector<Vec>& u, const std::vector<Vec>& v, const std::vector<Vec>& w,
                  const Subspace* target, const char* name) {
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j)
        for (size_t k = 0; k < w.size(); ++k) {
          Vec value = alg.bracket(u[i], v[j], w[k]);
          bool fine = target ? target->contains(value) : is_zero(value);
          if (!fine) {
            report.ok = false;
            report.violated = name;
            report.witness = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
            return false;
          }
        }
    return true;
  };

  if (!scan(plus, plus, plus, nullptr, "[A+,A+,A+] = 0")) return report;
  if (!scan(minus, minus, minus, nullptr, "[A-,A-,A-] = 0")) return report;
  if (!scan(plus, plus, minus, &ap, "[A+,A+,A-] in A+")) return report;
  if (!scan(plus, minus, minus, &am, "[A+,A-,A-] in A-")) return report;
  return report;
}

std::pair<ThreeLieAlgebra, Mat> adapted_basis(const ThreeLieAlgebra& alg, const InvolutiveDerivation& g) {
  const int n = alg.dim();
  std::vector<Vec> new_basis = g.plus_space().basis();
  const auto& minus = g.minus_space().basis();
  new_basis.insert(new_basis.end(), minus.begin(), minus.end());
  Mat p = Mat::from_columns(n, new_basis);
  Mat p_inv = inverse(p);

  ThreeLieAlgebra out(n, default_labels(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec value = alg.bracket(new_basis[static_cast<size_t>(a)], new_basis[static_cast<size_t>(b)],
                                new_basis[static_cast<size_t>(c)]);
        out.set_bracket(a, b, c, p_inv.apply(value));
      }
  return {std::move(out), std::move(p)};
}

}  // namespace trilie
