#include "trilie/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "trilie/errors.hpp"

namespace trilie {

std::vector<std::string> default_labels(int dim, const std::string& stem) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(dim));
  for (int i = 1; i <= dim; ++i) labels.push_back(stem + std::to_string(i));
  return labels;
}

ThreeLieAlgebra::ThreeLieAlgebra(int dim, std::vector<std::string> labels) : dim_(dim) {
  if (dim < 0) throw Error(ErrorKind::ShapeMismatch, "negative dimension");
  if (labels.empty()) labels = default_labels(dim);
  if (static_cast<int>(labels.size()) != dim)
    throw Error(ErrorKind::ShapeMismatch, "label count does not match dimension");
  labels_ = std::move(labels);
}

ThreeLieAlgebra ThreeLieAlgebra::abelian(int dim, std::vector<std::string> labels) {
  return ThreeLieAlgebra(dim, std::move(labels));
}

void ThreeLieAlgebra::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != dim_)
    throw Error(ErrorKind::ShapeMismatch, "label count does not match dimension");
  labels_ = std::move(labels);
}

void ThreeLieAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim_) throw Error(ErrorKind::IndexRange, "basis index " + std::to_string(i));
}

namespace {

// Sorts three indices in place; returns the sign of the permutation, or 0 on a repeat.
int sort_sign(int& a, int& b, int& c) {
  int sign = 1;
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (a == b || b == c) return 0;
  return sign;
}

}  // namespace

void ThreeLieAlgebra::set_bracket(int a, int b, int c, const Vec& coeffs) {
  check_index(a);
  check_index(b);
  check_index(c);
  if (static_cast<int>(coeffs.size()) != dim_)
    throw Error(ErrorKind::ShapeMismatch, "bracket coefficient vector has wrong dimension");
  int sign = sort_sign(a, b, c);
  if (sign == 0) {
    if (!is_zero(coeffs))
      throw Error(ErrorKind::SignConflict,
                  "repeated argument requires a zero bracket: [" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + "]");
    return;
  }
  Vec canonical = sign > 0 ? coeffs : scaled(coeffs, Rational(-1));
  std::array<int, 3> key{a, b, c};
  auto it = constants_.find(key);
  if (it != constants_.end()) {
    if (it->second != canonical)
      throw Error(ErrorKind::SignConflict,
                  "conflicting declarations for unordered triple {" + std::to_string(a + 1) + "," +
                      std::to_string(b + 1) + "," + std::to_string(c + 1) + "}");
    return;
  }
  if (is_zero(canonical)) return;
  constants_.emplace(key, std::move(canonical));
}

Vec ThreeLieAlgebra::bracket_basis(int a, int b, int c) const {
  check_index(a);
  check_index(b);
  check_index(c);
  int sign = sort_sign(a, b, c);
  if (sign == 0) return zero_vec(dim_);
  auto it = constants_.find({a, b, c});
  if (it == constants_.end()) return zero_vec(dim_);
  return sign > 0 ? it->second : scaled(it->second, Rational(-1));
}

Vec ThreeLieAlgebra::bracket_pv(int a, int b, const Vec& w) const {
  if (static_cast<int>(w.size()) != dim_) throw Error(ErrorKind::ShapeMismatch, "bracket argument dimension");
  Vec out = zero_vec(dim_);
  if (a == b) return out;
  for (int k = 0; k < dim_; ++k) {
    const Rational& wk = w[static_cast<size_t>(k)];
    if (wk.is_zero() || k == a || k == b) continue;
    int p = a, q = b, r = k;
    int sign = sort_sign(p, q, r);
    auto it = constants_.find({p, q, r});
    if (it == constants_.end()) continue;
    add_scaled(out, it->second, sign > 0 ? wk : -wk);
  }
  return out;
}

Vec ThreeLieAlgebra::bracket(const Vec& u, const Vec& v, const Vec& w) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_ ||
      static_cast<int>(w.size()) != dim_)
    throw Error(ErrorKind::ShapeMismatch, "bracket argument dimension");
  Vec out = zero_vec(dim_);
  for (const auto& [key, gamma] : constants_) {
    const size_t a = static_cast<size_t>(key[0]);
    const size_t b = static_cast<size_t>(key[1]);
    const size_t c = static_cast<size_t>(key[2]);
    // 3x3 minor of the column matrix (u v w) at rows (a,b,c).
    Rational minor = u[a] * (v[b] * w[c] - v[c] * w[b]) - v[a] * (u[b] * w[c] - u[c] * w[b]) +
                     w[a] * (u[b] * v[c] - u[c] * v[b]);
    if (!minor.is_zero()) add_scaled(out, gamma, minor);
  }
  return out;
}

Mat ThreeLieAlgebra::ad_matrix(int a, int b) const {
  Mat m(dim_, dim_);
  for (int t = 0; t < dim_; ++t) {
    Vec col = bracket_basis(a, b, t);
    for (int r = 0; r < dim_; ++r) m(r, t) = col[static_cast<size_t>(r)];
  }
  return m;
}

FiReport ThreeLieAlgebra::check_fundamental_identity() const {
  FiReport report;
  // Fast membership test: the residual of a tuple is built from four inner
  // brackets; when all four vanish the tuple holds trivially.
  auto stored = [&](int p, int q, int r) {
    int sign = sort_sign(p, q, r);
    return sign != 0 && constants_.count({p, q, r}) > 0;
  };
  for (int a = 0; a < dim_; ++a) {
    for (int b = a + 1; b < dim_; ++b) {
      for (int c = 0; c < dim_; ++c) {
        for (int d = c + 1; d < dim_; ++d) {
          for (int e = d + 1; e < dim_; ++e) {
            ++report.tuples_checked;
            if (!stored(c, d, e) && !stored(a, b, c) && !stored(a, b, d) && !stored(a, b, e))
              continue;
            // [xa,xb,[xc,xd,xe]] - [[xa,xb,xc],xd,xe] - [xc,[xa,xb,xd],xe] - [xc,xd,[xa,xb,xe]]
            Vec residual = bracket_pv(a, b, bracket_basis(c, d, e));
            residual = sub(residual, bracket_pv(d, e, bracket_basis(a, b, c)));
            residual = sub(residual, bracket_pv(e, c, bracket_basis(a, b, d)));
            residual = sub(residual, bracket_pv(c, d, bracket_basis(a, b, e)));
            if (!is_zero(residual)) {
              report.ok = false;
              report.witness = {a, b, c, d, e};
              report.residual = std::move(residual);
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

std::string FiReport::describe() const {
  if (ok) return "fundamental identity: ok (" + std::to_string(tuples_checked) + " tuples)";
  std::ostringstream os;
  os << "fundamental identity violated at (";
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << witness[static_cast<size_t>(i)] + 1;
  os << "), residual [";
  for (size_t i = 0; i < residual.size(); ++i) os << (i ? "," : "") << residual[i].str();
  os << "]";
  return os.str();
}

std::string HomReport::describe() const {
  if (ok) return "homomorphism: ok";
  std::ostringstream os;
  os << "homomorphism fails at basis triple (" << witness[0] + 1 << "," << witness[1] + 1 << ","
     << witness[2] + 1 << ")";
  return os.str();
}

HomReport check_homomorphism(const Mat& f, const ThreeLieAlgebra& src, const ThreeLieAlgebra& dst) {
  if (f.cols() != src.dim() || f.rows() != dst.dim())
    throw Error(ErrorKind::ShapeMismatch, "homomorphism matrix shape");
  HomReport report;
  for (int a = 0; a < src.dim(); ++a) {
    for (int b = a + 1; b < src.dim(); ++b) {
      for (int c = b + 1; c < src.dim(); ++c) {
        Vec lhs = f.apply(src.bracket_basis(a, b, c));
        Vec rhs = dst.bracket(f.col(a), f.col(b), f.col(c));
        if (lhs != rhs) {
          report.ok = false;
          report.witness = {a, b, c};
          return report;
        }
      }
    }
  }
  return report;
}

ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  ThreeLieAlgebra out(a.dim() + b.dim(), std::move(labels));
  for (const auto& [key, gamma] : a.constants()) {
    Vec coeffs = zero_vec(out.dim());
    for (int k = 0; k < a.dim(); ++k) coeffs[static_cast<size_t>(k)] = gamma[static_cast<size_t>(k)];
    out.set_bracket(key[0], key[1], key[2], coeffs);
  }
  const int off = a.dim();
  for (const auto& [key, gamma] : b.constants()) {
    Vec coeffs = zero_vec(out.dim());
    for (int k = 0; k < b.dim(); ++k) coeffs[static_cast<size_t>(off + k)] = gamma[static_cast<size_t>(k)];
    out.set_bracket(key[0] + off, key[1] + off, key[2] + off, coeffs);
  }
  return out;
}

}  // namespace trilie
