#include "homanti/cochain.hpp"

#include <algorithm>
#include <utility>

#include "homanti/common.hpp"
#include "homanti/linalg.hpp"

namespace homanti {

namespace {

long pow_long(int base, int exp) {
  long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Vec matrix_column(const Matrix& m, int j) {
  Vec out(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) out[static_cast<size_t>(i)] = m.at(i, j);
  return out;
}

void check_signature(const CochainSignature& sig) {
  if (sig.m < 0 || sig.n < 0) throw InputError("cochain signature counts must be nonnegative");
}

}  // namespace

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<std::vector<int>> even_tuples(int p, int m) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  if (p == 0) return out;
  std::vector<int> t(static_cast<size_t>(m), 0);
  while (true) {
    out.push_back(t);
    int pos = m - 1;
    while (pos >= 0 && t[static_cast<size_t>(pos)] == p - 1) {
      t[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++t[static_cast<size_t>(pos)];
  }
  return out;
}

std::vector<std::vector<int>> odd_tuples(int q, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (n > q) return out;
  std::vector<int> t(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(t);
    int pos = n - 1;
    while (pos >= 0 && t[static_cast<size_t>(pos)] == q - n + pos) --pos;
    if (pos < 0) break;
    ++t[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < n; ++i)
      t[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)] + 1;
  }
  return out;
}

long even_tuple_rank(const std::vector<int>& t, int p) {
  long rank = 0;
  for (int idx : t) {
    if (idx < 0 || idx >= p) throw InputError("even tuple index out of range");
    rank = rank * p + idx;
  }
  return rank;
}

long odd_tuple_rank(const std::vector<int>& t, int q) {
  const int n = static_cast<int>(t.size());
  long rank = 0;
  int prev = -1;
  for (int i = 0; i < n; ++i) {
    const int ti = t[static_cast<size_t>(i)];
    if (ti <= prev || ti >= q) throw InputError("odd tuple must be strictly increasing and in range");
    for (int v = prev + 1; v < ti; ++v) rank += binom(q - 1 - v, n - 1 - i);
    prev = ti;
  }
  return rank;
}

int sort_with_sign(std::vector<int>& t) {
  int sign = 1;
  const int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 < n - i; ++j) {
      if (t[static_cast<size_t>(j)] > t[static_cast<size_t>(j + 1)]) {
        std::swap(t[static_cast<size_t>(j)], t[static_cast<size_t>(j + 1)]);
        sign = -sign;
      }
    }
  }
  for (int j = 0; j + 1 < n; ++j)
    if (t[static_cast<size_t>(j)] == t[static_cast<size_t>(j + 1)]) return 0;
  return sign;
}

long raw_cochain_dim(const HomLieAntialgebra& a, const Representation& rho,
                     CochainSignature sig) {
  check_signature(sig);
  const int vdim = sig.value_is_odd() ? rho.module().odd_dim : rho.module().even_dim;
  if (sig.m > 0 && a.even_dim() == 0) return 0;
  return pow_long(a.even_dim(), sig.m) * binom(a.odd_dim(), sig.n) * vdim;
}

Cochain::Cochain(CochainSignature sig, int even_dim, int odd_dim, int value_dim)
    : sig_(sig), p_(even_dim), q_(odd_dim), vdim_(value_dim) {
  check_signature(sig_);
  if (p_ < 0 || q_ < 0 || vdim_ < 0) throw InputError("cochain dimensions must be nonnegative");
  ecount_ = (sig_.m == 0) ? 1 : pow_long(p_, sig_.m);
  if (sig_.m > 0 && p_ == 0) ecount_ = 0;
  ocount_ = binom(q_, sig_.n);
  coeffs_.assign(static_cast<size_t>(ecount_ * ocount_ * vdim_), Rational(0));
}

Rational& Cochain::coeff(long even_rank, long odd_rank, int value_index) {
  return coeffs_[static_cast<size_t>((even_rank * ocount_ + odd_rank) * vdim_ + value_index)];
}

const Rational& Cochain::coeff(long even_rank, long odd_rank, int value_index) const {
  return coeffs_[static_cast<size_t>((even_rank * ocount_ + odd_rank) * vdim_ + value_index)];
}

Vec Cochain::value_on(const std::vector<int>& etuple, const std::vector<int>& otuple) const {
  if (static_cast<int>(etuple.size()) != sig_.m || static_cast<int>(otuple.size()) != sig_.n)
    throw InputError("argument tuple lengths do not match the cochain signature");
  std::vector<int> sorted = otuple;
  const int sign = sort_with_sign(sorted);
  Vec out = vec_zero(vdim_);
  if (sign == 0) return out;
  const long er = even_tuple_rank(etuple, p_);
  const long orank = odd_tuple_rank(sorted, q_);
  for (int vi = 0; vi < vdim_; ++vi) {
    const Rational& c = coeff(er, orank, vi);
    out[static_cast<size_t>(vi)] = (sign > 0) ? c : -c;
  }
  return out;
}

Vec Cochain::evaluate(const std::vector<Vec>& even_args, const std::vector<Vec>& odd_args) const {
  if (static_cast<int>(even_args.size()) != sig_.m ||
      static_cast<int>(odd_args.size()) != sig_.n)
    throw InputError("argument counts do not match the cochain signature");
  for (const Vec& v : even_args)
    if (static_cast<int>(v.size()) != p_) throw InputError("even argument has the wrong length");
  for (const Vec& v : odd_args)
    if (static_cast<int>(v.size()) != q_) throw InputError("odd argument has the wrong length");

  Vec out = vec_zero(vdim_);
  std::vector<int> et(static_cast<size_t>(sig_.m)), ot(static_cast<size_t>(sig_.n));

  // Expand over basis index tuples, skipping zero coordinates.
  auto expand_odd = [&](auto&& self, int pos, const Rational& scale) -> void {
    if (pos == sig_.n) {
      vec_axpy(out, scale, value_on(et, ot));
      return;
    }
    const Vec& arg = odd_args[static_cast<size_t>(pos)];
    for (int j = 0; j < q_; ++j) {
      if (arg[static_cast<size_t>(j)] == Rational(0)) continue;
      ot[static_cast<size_t>(pos)] = j;
      self(self, pos + 1, scale * arg[static_cast<size_t>(j)]);
    }
  };
  auto expand_even = [&](auto&& self, int pos, const Rational& scale) -> void {
    if (pos == sig_.m) {
      expand_odd(expand_odd, 0, scale);
      return;
    }
    const Vec& arg = even_args[static_cast<size_t>(pos)];
    for (int i = 0; i < p_; ++i) {
      if (arg[static_cast<size_t>(i)] == Rational(0)) continue;
      et[static_cast<size_t>(pos)] = i;
      self(self, pos + 1, scale * arg[static_cast<size_t>(i)]);
    }
  };
  expand_even(expand_even, 0, Rational(1));
  return out;
}

Cochain Cochain::from_flat(CochainSignature sig, int even_dim, int odd_dim, int value_dim,
                           Vec coeffs) {
  Cochain out(sig, even_dim, odd_dim, value_dim);
  if (coeffs.size() != out.coeffs_.size())
    throw InputError("flat coefficient vector has the wrong length");
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool Cochain::is_zero() const { return vec_is_zero(coeffs_); }

Cochain Cochain::scaled(const Rational& c) const {
  Cochain out = *this;
  out.coeffs_ = vec_scale(coeffs_, c);
  return out;
}

Cochain& Cochain::add_scaled(const Cochain& other, const Rational& c) {
  if (sig_ != other.sig_ || p_ != other.p_ || q_ != other.q_ || vdim_ != other.vdim_)
    throw InputError("cochain shapes do not match");
  vec_axpy(coeffs_, c, other.coeffs_);
  return *this;
}

Cochain zero_cochain(const HomLieAntialgebra& a, const Representation& rho,
                     CochainSignature sig) {
  const int vdim = sig.value_is_odd() ? rho.module().odd_dim : rho.module().even_dim;
  return Cochain(sig, a.even_dim(), a.odd_dim(), vdim);
}

const Cochain* CochainSum::block(CochainSignature sig) const {
  for (const Cochain& b : blocks_)
    if (b.sig() == sig) return &b;
  return nullptr;
}

void CochainSum::add_scaled(const Cochain& piece, const Rational& c) {
  if (piece.sig().degree() != degree_)
    throw InputError("cochain degree does not match the sum");
  for (Cochain& b : blocks_) {
    if (b.sig() == piece.sig()) {
      b.add_scaled(piece, c);
      return;
    }
  }
  auto pos = blocks_.begin();
  while (pos != blocks_.end() && pos->sig().n < piece.sig().n) ++pos;
  blocks_.insert(pos, piece.scaled(c));
}

void CochainSum::add_scaled(const CochainSum& other, const Rational& c) {
  if (other.degree_ != degree_) throw InputError("cochain sum degrees do not match");
  for (const Cochain& b : other.blocks_) add_scaled(b, c);
}

bool CochainSum::is_zero() const {
  for (const Cochain& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

namespace {

// Twist residual of f on one basis argument tuple:
//   (value twist) . f(args)  -  f(alpha . args, beta . args).
Vec admissibility_residual(const HomLieAntialgebra& a, const Representation& rho,
                           const Cochain& f, const std::vector<int>& etuple,
                           const std::vector<int>& otuple) {
  const Matrix& value_twist =
      f.sig().value_is_odd() ? rho.module().betaV : rho.module().alphaV;
  std::vector<Vec> twisted_even, twisted_odd;
  twisted_even.reserve(etuple.size());
  twisted_odd.reserve(otuple.size());
  for (int i : etuple) twisted_even.push_back(matrix_column(a.alpha(), i));
  for (int j : otuple) twisted_odd.push_back(matrix_column(a.beta(), j));
  return vec_sub(value_twist.apply(f.value_on(etuple, otuple)),
                 f.evaluate(twisted_even, twisted_odd));
}

void check_cochain_shape(const HomLieAntialgebra& a, const Representation& rho,
                         const Cochain& f) {
  const int vdim = f.sig().value_is_odd() ? rho.module().odd_dim : rho.module().even_dim;
  if (f.even_dim() != a.even_dim() || f.odd_dim() != a.odd_dim() || f.value_dim() != vdim)
    throw InputError("cochain dimensions do not match the algebra and module");
  if (rho.algebra_even_dim() != a.even_dim() || rho.algebra_odd_dim() != a.odd_dim())
    throw InputError("representation dimensions do not match the algebra");
}

}  // namespace

bool is_admissible(const HomLieAntialgebra& a, const Representation& rho, const Cochain& f) {
  check_cochain_shape(a, rho, f);
  const auto etuples = even_tuples(a.even_dim(), f.sig().m);
  const auto otuples = odd_tuples(a.odd_dim(), f.sig().n);
  for (const auto& et : etuples)
    for (const auto& ot : otuples)
      if (!vec_is_zero(admissibility_residual(a, rho, f, et, ot))) return false;
  return true;
}

bool is_admissible(const HomLieAntialgebra& a, const Representation& rho, const CochainSum& f) {
  for (const Cochain& b : f.blocks())
    if (!is_admissible(a, rho, b)) return false;
  return true;
}

std::vector<Cochain> admissible_basis(const HomLieAntialgebra& a, const Representation& rho,
                                      CochainSignature sig) {
  const long raw = raw_cochain_dim(a, rho, sig);
  std::vector<Cochain> out;
  if (raw == 0) return out;

  const Cochain zero = zero_cochain(a, rho, sig);
  const auto etuples = even_tuples(a.even_dim(), sig.m);
  const auto otuples = odd_tuples(a.odd_dim(), sig.n);
  const int vdim = zero.value_dim();
  const long tuple_count = static_cast<long>(etuples.size()) * static_cast<long>(otuples.size());

  // Columns are the constraint residuals of the flat basis cochains.
  Matrix constraint(static_cast<int>(tuple_count * vdim), static_cast<int>(raw));
  for (long col = 0; col < raw; ++col) {
    Vec flat = vec_zero(static_cast<int>(raw));
    flat[static_cast<size_t>(col)] = Rational(1);
    const Cochain basis_cochain =
        Cochain::from_flat(sig, a.even_dim(), a.odd_dim(), vdim, std::move(flat));
    long row = 0;
    for (const auto& et : etuples) {
      for (const auto& ot : otuples) {
        const Vec res = admissibility_residual(a, rho, basis_cochain, et, ot);
        for (int vi = 0; vi < vdim; ++vi)
          constraint.at(static_cast<int>(row + vi), static_cast<int>(col)) =
              res[static_cast<size_t>(vi)];
        row += vdim;
      }
    }
  }

  for (Vec& v : nullspace_basis(constraint))
    out.push_back(Cochain::from_flat(sig, a.even_dim(), a.odd_dim(), vdim, std::move(v)));
  return out;
}

}  // namespace homanti
