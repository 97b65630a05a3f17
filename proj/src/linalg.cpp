#include "homanti/linalg.hpp"

#include <utility>

namespace homanti {

namespace {

void swap_rows(Matrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

// Columns of rref(m) that carry a pivot, plus the echelon form itself.
struct Echelon {
  Matrix r;
  std::vector<int> pivot_cols;
};

Echelon reduce(const Matrix& m) {
  Echelon ech{m, {}};
  Matrix& a = ech.r;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    swap_rows(a, piv, row);
    Rational inv = Rational(1) / a.at(row, col);
    for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col);
      for (int c = col; c < a.cols(); ++c) a.at(i, c) -= f * a.at(row, c);
    }
    ech.pivot_cols.push_back(col);
    ++row;
  }
  return ech;
}

}  // namespace

int rank(const Matrix& m) {
  // Fraction-free Bareiss elimination; the rank is the number of pivots.
  Matrix a = m;
  int r = 0;
  Rational prev = 1;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    swap_rows(a, piv, r);
    for (int i = r + 1; i < a.rows(); ++i) {
      for (int c = col + 1; c < a.cols(); ++c) {
        a.at(i, c) = (a.at(r, col) * a.at(i, c) - a.at(i, col) * a.at(r, c)) / prev;
      }
      a.at(i, col) = 0;
    }
    prev = a.at(r, col);
    ++r;
  }
  return r;
}

Matrix rref(const Matrix& m) { return reduce(m).r; }

std::vector<Vec> nullspace_basis(const Matrix& m) {
  Echelon ech = reduce(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = vec_zero(m.cols());
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      v[static_cast<size_t>(ech.pivot_cols[r])] = -ech.r.at(static_cast<int>(r), free);
    }
    if (!vec_is_zero(m.apply(v)))
      throw InternalError("nullspace_basis: candidate fails m*v = 0");
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw InputError("solve: rhs size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[static_cast<size_t>(r)];
  }
  Echelon ech = reduce(aug);
  // A pivot in the appended column means 0 = 1 somewhere: inconsistent.
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols()) return std::nullopt;

  Vec x = vec_zero(m.cols());
  for (size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    x[static_cast<size_t>(ech.pivot_cols[r])] = ech.r.at(static_cast<int>(r), m.cols());
  }
  if (m.apply(x) != rhs) throw InternalError("solve: candidate fails substitution");
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ra = 0; ra < a.rows(); ++ra)
    for (int ca = 0; ca < a.cols(); ++ca) {
      const Rational& f = a.at(ra, ca);
      if (f.is_zero()) continue;
      for (int rb = 0; rb < b.rows(); ++rb)
        for (int cb = 0; cb < b.cols(); ++cb)
          out.at(ra * b.rows() + rb, ca * b.cols() + cb) = f * b.at(rb, cb);
    }
  return out;
}

Matrix mat_pow(const Matrix& m, int k) {
  if (m.rows() != m.cols()) throw InputError("mat_pow: matrix must be square");
  if (k < 0) throw InputError("mat_pow: negative exponent");
  Matrix acc = Matrix::identity(m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) acc = static_cast<std::uint64_t>((__int128)acc * b % p);
    b = static_cast<std::uint64_t>((__int128)b * b % p);
    e >>= 1;
  }
  return acc;
}

// Reduction of q mod p, or nullopt when p | den(q).
std::optional<std::uint64_t> residue(const Rational& q, std::uint64_t p) {
  mpz_class num = q.num() % p;  // truncated: lies in (-p, p)
  if (num < 0) num += p;
  mpz_class den = q.den() % p;  // den > 0, so already in [0, p)
  std::uint64_t d = den.get_ui();
  if (d == 0) return std::nullopt;
  std::uint64_t dinv = mod_pow(d, p - 2, p);  // p prime, d nonzero
  return static_cast<std::uint64_t>((__int128)num.get_ui() * dinv % p);
}

}  // namespace

std::optional<int> rank_mod_p(const Matrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(static_cast<size_t>(m.rows()),
                                            std::vector<std::uint64_t>(static_cast<size_t>(m.cols())));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      auto res = residue(m.at(r, c), p);
      if (!res) return std::nullopt;
      a[static_cast<size_t>(r)][static_cast<size_t>(c)] = *res;
    }

  int rows = m.rows(), cols = m.cols();
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int i = rk; i < rows; ++i) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rk)]);
    std::uint64_t inv = mod_pow(a[static_cast<size_t>(rk)][static_cast<size_t>(col)], p - 2, p);
    for (int i = rk + 1; i < rows; ++i) {
      std::uint64_t f = static_cast<std::uint64_t>(
          (__int128)a[static_cast<size_t>(i)][static_cast<size_t>(col)] * inv % p);
      if (f == 0) continue;
      for (int c = col; c < cols; ++c) {
        std::uint64_t sub = static_cast<std::uint64_t>(
            (__int128)f * a[static_cast<size_t>(rk)][static_cast<size_t>(c)] % p);
        std::uint64_t& cell = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
        cell = (cell + p - sub) % p;
      }
    }
    ++rk;
  }
  return rk;
}

}  // namespace homanti
