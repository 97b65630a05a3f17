#include "homanti/matrix.hpp"

#include <algorithm>

namespace homanti {

Vec vec_zero(int n) { return Vec(static_cast<size_t>(n)); }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector: size mismatch in add");
  Vec out(a);
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector: size mismatch in sub");
  Vec out(a);
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Vec& a, const Rational& s) {
  Vec out(a);
  for (auto& x : out) x *= s;
  return out;
}

void vec_axpy(Vec& a, const Rational& s, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector: size mismatch in axpy");
  if (s.is_zero()) return;
  for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InputError("matrix: negative dimension");
}

Matrix::Matrix(int rows, int cols, std::initializer_list<Rational> entries)
    : Matrix(rows, cols) {
  if (entries.size() != e_.size()) throw InputError("matrix: literal size mismatch");
  std::copy(entries.begin(), entries.end(), e_.begin());
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("matrix: apply size mismatch");
  Vec out(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    Rational acc;
    for (int c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) acc += at(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix: product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) {
        if (!o.at(k, c).is_zero()) out.at(r, c) += a * o.at(k, c);
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix: sum shape mismatch");
  Matrix out(*this);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix: diff shape mismatch");
  Matrix out(*this);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out(*this);
  for (auto& x : out.e_) x *= s;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return out;
}

}  // namespace homanti
