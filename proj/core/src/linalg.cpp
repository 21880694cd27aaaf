#include "trilie/linalg.hpp"

#include "trilie/errors.hpp"

namespace trilie {

Vec zero_vec(int dim) { return Vec(static_cast<size_t>(dim)); }

Vec unit_vec(int dim, int index) {
  Vec v = zero_vec(dim);
  v[static_cast<size_t>(index)] = Rational(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

static void require_same_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector dimension mismatch");
}

Vec add(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaled(const Vec& v, const Rational& c) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void add_scaled(Vec& target, const Vec& v, const Rational& c) {
  require_same_dim(target, v);
  if (c.is_zero()) return;
  for (size_t i = 0; i < target.size(); ++i) {
    if (!v[i].is_zero()) target[i] += v[i] * c;
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

Mat Mat::from_columns(int rows, const std::vector<Vec>& cols) {
  Mat m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[static_cast<size_t>(c)].size()) != rows)
      throw Error(ErrorKind::ShapeMismatch, "column length mismatch");
    for (int r = 0; r < rows; ++r) m(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[static_cast<size_t>(r)].size() != rows[0].size())
      throw Error(ErrorKind::ShapeMismatch, "row length mismatch");
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }
  return m;
}

Vec Mat::col(int c) const {
  Vec v(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<size_t>(r)] = (*this)(r, c);
  return v;
}

Vec Mat::row(int r) const {
  Vec v(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v[static_cast<size_t>(c)] = (*this)(r, c);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) r(i, j) += x * o(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Mat Mat::scaled(const Rational& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix apply shape mismatch");
  Vec r(static_cast<size_t>(rows_));
  for (int c = 0; c < cols_; ++c) {
    const Rational& x = v[static_cast<size_t>(c)];
    if (x.is_zero()) continue;
    for (int rI = 0; rI < rows_; ++rI) {
      const Rational& m = (*this)(rI, c);
      if (!m.is_zero()) r[static_cast<size_t>(rI)] += m * x;
    }
  }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RrefResult rref(const Mat& m) {
  Mat a = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    Rational inv = Rational(1) / a(row, col);
    for (int c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Rational factor = a(r, col);
      for (int c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

Vec solve(const Mat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error(ErrorKind::ShapeMismatch, "solve shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[static_cast<size_t>(r)];
  }
  RrefResult rr = rref(aug);
  Vec x(static_cast<size_t>(m.cols()));
  int nsolved = 0;
  for (size_t i = 0; i < rr.pivots.size(); ++i) {
    int pc = rr.pivots[i];
    if (pc == m.cols()) throw Error(ErrorKind::Construction, "inconsistent linear system");
    x[static_cast<size_t>(pc)] = rr.reduced(static_cast<int>(i), m.cols());
    ++nsolved;
  }
  if (nsolved != m.cols()) throw Error(ErrorKind::Construction, "underdetermined linear system");
  return x;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Rational(1);
  }
  RrefResult rr = rref(aug);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rr.pivots.size()) <= i || rr.pivots[static_cast<size_t>(i)] != i)
      throw Error(ErrorKind::Construction, "singular matrix");
  }
  Mat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

}  // namespace trilie
