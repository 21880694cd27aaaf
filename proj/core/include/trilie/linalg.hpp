#pragma once

#include <vector>

#include "trilie/rational.hpp"

namespace trilie {

using Vec = std::vector<Rational>;

Vec zero_vec(int dim);
Vec unit_vec(int dim, int index);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rational& c);
void add_scaled(Vec& target, const Vec& v, const Rational& c);  // target += c*v

/// Dense matrix over Rational. Also used for linear maps A -> B in basis coordinates,
/// where column j holds the image of the j-th basis vector.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat diagonal(const Vec& d);
  static Mat from_columns(int rows, const std::vector<Vec>& cols);
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Vec col(int c) const;
  Vec row(int r) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Rational& c) const;
  Mat transposed() const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Mat reduced;
  std::vector<int> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination; row space preserved.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

/// Solves m * x = b exactly; throws Construction if the system is inconsistent
/// or the solution is not unique (m must have full column rank).
Vec solve(const Mat& m, const Vec& b);

Mat inverse(const Mat& m);  // throws Construction when singular

}  // namespace trilie
