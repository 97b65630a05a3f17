// Dense row-major matrix of exact rationals, plus small vector helpers.
// All values are immutable-by-convention after construction; copies are deep.
#pragma once

#include <initializer_list>
#include <vector>

#include "homanti/rational.hpp"

namespace homanti {

using Vec = std::vector<Rational>;

Vec vec_zero(int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Rational& s);
// a += s*b, in place.
void vec_axpy(Vec& a, const Rational& s, const Vec& b);
bool vec_is_zero(const Vec& a);

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);
  // Row-major literal, e.g. Matrix(2, 2, {1, 0, 0, 1}).
  Matrix(int rows, int cols, std::initializer_list<Rational> entries);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<Rational>& entries() const { return e_; }
  std::vector<Rational>& entries() { return e_; }

  Vec apply(const Vec& v) const;         // this * v
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& s) const;
  Matrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

// Column vectors of a stacked as a matrix diag-block with b: [[a,0],[0,b]].
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace homanti
