#include "homanti/cohomology.hpp"

#include <utility>

#include "homanti/common.hpp"
#include "homanti/linalg.hpp"

namespace homanti {

namespace {

void check_shapes(const HomLieAntialgebra& a, const Representation& rho) {
  if (rho.algebra_even_dim() != a.even_dim() || rho.algebra_odd_dim() != a.odd_dim())
    throw InputError("representation dimensions do not match the algebra");
}

void check_block_shape(const HomLieAntialgebra& a, const Representation& rho,
                       const Cochain& f) {
  const int vdim = f.sig().value_is_odd() ? rho.module().odd_dim : rho.module().even_dim;
  if (f.even_dim() != a.even_dim() || f.odd_dim() != a.odd_dim() || f.value_dim() != vdim)
    throw InputError("cochain dimensions do not match the algebra and module");
}

// rho0 component acting on the value space of a block of the given parity.
Matrix rho0_on_value(const Representation& rho, bool value_odd, const Vec& x) {
  return value_odd ? rho.rho0_odd_of(x) : rho.rho0_even_of(x);
}

// rho1 component out of the value space (V0 -> V1 when the value parity is
// even, V1 -> V0 when odd).
Matrix rho1_on_value(const Representation& rho, bool value_odd, const Vec& y) {
  return value_odd ? rho.rho1_down_of(y) : rho.rho1_up_of(y);
}

Rational parity_sign(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

std::vector<Vec> basis_args(int dim, const std::vector<int>& tuple) {
  std::vector<Vec> out;
  out.reserve(tuple.size());
  for (int i : tuple) out.push_back(basis_vec(dim, i));
  return out;
}

std::vector<Vec> apply_each(const Matrix& t, const std::vector<Vec>& args) {
  std::vector<Vec> out;
  out.reserve(args.size());
  for (const Vec& v : args) out.push_back(t.apply(v));
  return out;
}

std::vector<Vec> drop_index(const std::vector<Vec>& args, size_t skip) {
  std::vector<Vec> out;
  out.reserve(args.size() - 1);
  for (size_t i = 0; i < args.size(); ++i)
    if (i != skip) out.push_back(args[i]);
  return out;
}

void store_value(Cochain& target, const std::vector<int>& etuple,
                 const std::vector<int>& otuple, const Vec& value) {
  const long er = even_tuple_rank(etuple, target.even_dim());
  const long orank = otuple.empty() ? 0 : odd_tuple_rank(otuple, target.odd_dim());
  for (int vi = 0; vi < target.value_dim(); ++vi)
    target.coeff(er, orank, vi) = value[static_cast<size_t>(vi)];
}

// Component (m, n) -> (m+1, n). Arguments x_1..x_{m+1}, y_1..y_n.
Cochain d10_component(const HomLieAntialgebra& a, const Representation& rho, const Cochain& f,
                      const Matrix& alpha_pow) {
  const int m = f.sig().m, n = f.sig().n;
  const bool value_odd = f.sig().value_is_odd();
  Cochain out(CochainSignature{m + 1, n}, f.even_dim(), f.odd_dim(), f.value_dim());
  if (out.flat_dim() == 0) return out;

  const Rational half(1, 2);
  for (const auto& et : even_tuples(a.even_dim(), m + 1)) {
    const std::vector<Vec> xs = basis_args(a.even_dim(), et);
    const std::vector<Vec> axs = apply_each(a.alpha(), xs);
    for (const auto& ot : odd_tuples(a.odd_dim(), n)) {
      const std::vector<Vec> ys = basis_args(a.odd_dim(), ot);
      Vec val = vec_zero(f.value_dim());

      if (n == 0) {
        // 1/2 [ rho0(a^{k-1} x_1) f(x_2..x_{m+1})
        //       + sum_i (-1)^i f(a x_1,.., x_i x_{i+1},.., a x_{m+1})
        //       + (-1)^{m+1} rho0(a^{k-1} x_{m+1}) f(x_1..x_m) ]
        const std::vector<Vec> tail(xs.begin() + 1, xs.end());
        vec_axpy(val, half,
                 rho0_on_value(rho, value_odd, alpha_pow.apply(xs.front()))
                     .apply(f.evaluate(tail, {})));
        for (int i = 1; i <= m; ++i) {
          std::vector<Vec> args;
          args.reserve(static_cast<size_t>(m));
          for (int pos = 1; pos <= m + 1; ++pos) {
            if (pos == i)
              args.push_back(a.prod_ee(xs[static_cast<size_t>(i - 1)], xs[static_cast<size_t>(i)]));
            else if (pos != i + 1)
              args.push_back(axs[static_cast<size_t>(pos - 1)]);
          }
          vec_axpy(val, half * parity_sign(i), f.evaluate(args, {}));
        }
        const std::vector<Vec> head(xs.begin(), xs.end() - 1);
        vec_axpy(val, half * parity_sign(m + 1),
                 rho0_on_value(rho, value_odd, alpha_pow.apply(xs.back()))
                     .apply(f.evaluate(head, {})));
      } else {
        const std::vector<Vec> bys = apply_each(a.beta(), ys);
        // w (-1)^{m+n+1} rho0(a^{k-1} x_1) f(x_2..x_{m+1}; y_1..y_n),
        // with w = 1/2 on even-valued blocks and 1 on odd-valued ones.
        const Rational w1 = value_odd ? Rational(1) : half;
        const std::vector<Vec> tail(xs.begin() + 1, xs.end());
        vec_axpy(val, w1 * parity_sign(m + n + 1),
                 rho0_on_value(rho, value_odd, alpha_pow.apply(xs.front()))
                     .apply(f.evaluate(tail, ys)));
        // 1/2 sum_i (-1)^{n+i} f(a x_1,.., x_i x_{i+1},.., a x_{m+1}; b y_1..b y_n)
        for (int i = 1; i <= m; ++i) {
          std::vector<Vec> args;
          args.reserve(static_cast<size_t>(m));
          for (int pos = 1; pos <= m + 1; ++pos) {
            if (pos == i)
              args.push_back(a.prod_ee(xs[static_cast<size_t>(i - 1)], xs[static_cast<size_t>(i)]));
            else if (pos != i + 1)
              args.push_back(axs[static_cast<size_t>(pos - 1)]);
          }
          vec_axpy(val, half * parity_sign(n + i), f.evaluate(args, bys));
        }
        // (1/n) sum_j (-1)^{n+j+1} f(a x_1..a x_m; x_{m+1} y_j, b y_1,..^j.., b y_n)
        const std::vector<Vec> head(axs.begin(), axs.end() - 1);
        for (int j = 1; j <= n; ++j) {
          std::vector<Vec> odd_args;
          odd_args.reserve(static_cast<size_t>(n));
          odd_args.push_back(a.prod_eo(xs.back(), ys[static_cast<size_t>(j - 1)]));
          for (int l = 1; l <= n; ++l)
            if (l != j) odd_args.push_back(bys[static_cast<size_t>(l - 1)]);
          vec_axpy(val, Rational(1, n) * parity_sign(n + j + 1), f.evaluate(head, odd_args));
        }
      }
      store_value(out, et, ot, val);
    }
  }
  return out;
}

// Component (m, n) -> (m, n+1). Arguments x_1..x_m, y_1..y_{n+1}; the
// remaining arguments are not twisted here.
Cochain d01_component(const HomLieAntialgebra& a, const Representation& rho, const Cochain& f,
                      const Matrix& beta_pow) {
  const int m = f.sig().m, n = f.sig().n;
  const bool value_odd = f.sig().value_is_odd();
  const int target_vdim = value_odd ? rho.module().even_dim : rho.module().odd_dim;
  Cochain out(CochainSignature{m, n + 1}, f.even_dim(), f.odd_dim(), target_vdim);
  if (out.flat_dim() == 0) return out;

  const Rational w = (m == 0 && n % 2 == 1) ? Rational(2, n + 1) : Rational(1, n + 1);
  for (const auto& et : even_tuples(a.even_dim(), m)) {
    const std::vector<Vec> xs = basis_args(a.even_dim(), et);
    for (const auto& ot : odd_tuples(a.odd_dim(), n + 1)) {
      const std::vector<Vec> ys = basis_args(a.odd_dim(), ot);
      Vec val = vec_zero(target_vdim);
      // w sum_j (-1)^{j+1} rho1(b^{k-1} y_j) f(x_1..x_m; y_1,..^j.., y_{n+1})
      for (int j = 1; j <= n + 1; ++j) {
        const Matrix act =
            rho1_on_value(rho, value_odd, beta_pow.apply(ys[static_cast<size_t>(j - 1)]));
        vec_axpy(val, w * parity_sign(j + 1),
                 act.apply(f.evaluate(xs, drop_index(ys, static_cast<size_t>(j - 1)))));
      }
      store_value(out, et, ot, val);
    }
  }
  return out;
}

// Component (m, n) -> (m-1, n+2); defined as zero when m = 0. Arguments
// x_1..x_{m-1}, y_1..y_{n+2}; the bracket enters as the last even argument.
Cochain dm12_component(const HomLieAntialgebra& a, const Representation& rho, const Cochain& f) {
  const int m = f.sig().m, n = f.sig().n;
  Cochain out(CochainSignature{m - 1, n + 2}, f.even_dim(), f.odd_dim(), f.value_dim());
  if (out.flat_dim() == 0) return out;
  (void)rho;

  const Rational weight(2, static_cast<long>(n + 1) * (n + 2));
  for (const auto& et : even_tuples(a.even_dim(), m - 1)) {
    const std::vector<Vec> axs = apply_each(a.alpha(), basis_args(a.even_dim(), et));
    for (const auto& ot : odd_tuples(a.odd_dim(), n + 2)) {
      const std::vector<Vec> ys = basis_args(a.odd_dim(), ot);
      const std::vector<Vec> bys = apply_each(a.beta(), ys);
      Vec val = vec_zero(f.value_dim());
      // (2/((n+1)(n+2))) sum_{i<j} (-1)^{n+i+j}
      //     f(a x_1..a x_{m-1}, [y_i, y_j]; b y_1,..^i..^j.., b y_{n+2})
      for (int i = 1; i <= n + 2; ++i) {
        for (int j = i + 1; j <= n + 2; ++j) {
          std::vector<Vec> eargs = axs;
          eargs.push_back(a.bracket(ys[static_cast<size_t>(i - 1)], ys[static_cast<size_t>(j - 1)]));
          std::vector<Vec> oargs;
          oargs.reserve(static_cast<size_t>(n));
          for (int l = 1; l <= n + 2; ++l)
            if (l != i && l != j) oargs.push_back(bys[static_cast<size_t>(l - 1)]);
          vec_axpy(val, weight * parity_sign(n + i + j), f.evaluate(eargs, oargs));
        }
      }
      store_value(out, et, ot, val);
    }
  }
  return out;
}

}  // namespace

std::vector<CochainSignature> degree_signatures(const HomLieAntialgebra& a,
                                                const Representation& rho, int k) {
  if (k < 1) throw InputError("cochain degree must be at least 1");
  check_shapes(a, rho);
  std::vector<CochainSignature> out;
  for (int n = 0; n <= k; ++n) {
    const CochainSignature sig{k - n, n};
    if (raw_cochain_dim(a, rho, sig) > 0) out.push_back(sig);
  }
  return out;
}

CochainSum apply_d(const HomLieAntialgebra& a, const Representation& rho, const Cochain& f) {
  check_shapes(a, rho);
  check_block_shape(a, rho, f);
  const int k = f.sig().degree();
  if (k < 1) throw InputError("the coboundary is defined on degrees k >= 1");

  const Matrix alpha_pow = mat_pow(a.alpha(), k - 1);
  const Matrix beta_pow = mat_pow(a.beta(), k - 1);
  CochainSum out(k + 1);
  if (Cochain c = d10_component(a, rho, f, alpha_pow); c.flat_dim() > 0) out.add(c);
  if (Cochain c = d01_component(a, rho, f, beta_pow); c.flat_dim() > 0) out.add(c);
  if (f.sig().m > 0) {
    if (Cochain c = dm12_component(a, rho, f); c.flat_dim() > 0) out.add(c);
  }
  return out;
}

CochainSum apply_d(const HomLieAntialgebra& a, const Representation& rho, const CochainSum& f) {
  CochainSum out(f.degree() + 1);
  for (const Cochain& b : f.blocks()) out.add_scaled(apply_d(a, rho, b), Rational(1));
  return out;
}

long CochainComplexSlice::source_dim() const {
  long total = 0;
  for (const BlockBasis& b : source) total += static_cast<long>(b.basis.size());
  return total;
}

long CochainComplexSlice::target_dim() const {
  long total = 0;
  for (const BlockBasis& b : target) total += static_cast<long>(b.basis.size());
  return total;
}

namespace {

// Flat coefficient matrix of an admissible block basis (columns = basis
// cochains), used to solve images back into basis coordinates.
Matrix basis_matrix(const BlockBasis& block, long raw_dim) {
  Matrix out(static_cast<int>(raw_dim), static_cast<int>(block.basis.size()));
  for (size_t c = 0; c < block.basis.size(); ++c) {
    const Vec& flat = block.basis[c].flat();
    for (size_t r = 0; r < flat.size(); ++r)
      out.at(static_cast<int>(r), static_cast<int>(c)) = flat[r];
  }
  return out;
}

// Coordinates of a degree-homogeneous sum in the admissible bases of the
// given blocks. Blocks absent from the sum count as zero. Throws InternalError
// when an admissible cochain fails to project (the bases span exactly the
// admissible subspaces, so this cannot happen for admissible input).
Vec coordinates_in_blocks(const HomLieAntialgebra& a, const Representation& rho,
                          const std::vector<BlockBasis>& blocks, const CochainSum& f,
                          const char* what) {
  long total = 0;
  for (const BlockBasis& b : blocks) total += static_cast<long>(b.basis.size());
  Vec coords = vec_zero(static_cast<int>(total));
  long offset = 0;
  for (const BlockBasis& tb : blocks) {
    const long raw = raw_cochain_dim(a, rho, tb.sig);
    const Cochain* piece = f.block(tb.sig);
    const Vec flat = piece ? piece->flat() : vec_zero(static_cast<int>(raw));
    if (tb.basis.empty()) {
      if (!vec_is_zero(flat)) throw InternalError(what);
    } else {
      const std::optional<Vec> x = solve(basis_matrix(tb, raw), flat);
      if (!x) throw InternalError(what);
      for (size_t i = 0; i < x->size(); ++i)
        coords[static_cast<size_t>(offset) + i] = (*x)[i];
    }
    offset += static_cast<long>(tb.basis.size());
  }
  return coords;
}

}  // namespace

CochainComplexSlice assemble_d(const HomLieAntialgebra& a, const Representation& rho, int k) {
  if (k < 1) throw InputError("assemble_d requires degree k >= 1");
  check_shapes(a, rho);
  if (!check_multiplicative(a).ok())
    throw InputError("assemble_d requires a multiplicative algebra");

  CochainComplexSlice slice;
  slice.k = k;
  for (const CochainSignature& sig : degree_signatures(a, rho, k))
    slice.source.push_back(BlockBasis{sig, admissible_basis(a, rho, sig)});
  for (const CochainSignature& sig : degree_signatures(a, rho, k + 1))
    slice.target.push_back(BlockBasis{sig, admissible_basis(a, rho, sig)});

  const long source_dim = slice.source_dim();
  const long target_dim = slice.target_dim();
  slice.d = Matrix(static_cast<int>(target_dim), static_cast<int>(source_dim));

  long col = 0;
  for (const BlockBasis& sb : slice.source) {
    for (const Cochain& basis_cochain : sb.basis) {
      const CochainSum image = apply_d(a, rho, basis_cochain);
      long row_offset = 0;
      for (const BlockBasis& tb : slice.target) {
        const long raw = raw_cochain_dim(a, rho, tb.sig);
        const Cochain* piece = image.block(tb.sig);
        const Vec flat = piece ? piece->flat() : vec_zero(static_cast<int>(raw));
        if (tb.basis.empty()) {
          if (!vec_is_zero(flat))
            throw InputError(
                "coboundary image left the admissible subspace; "
                "the coefficient actions are not twist-equivariant");
        } else {
          const std::optional<Vec> x = solve(basis_matrix(tb, raw), flat);
          if (!x)
            throw InputError(
                "coboundary image left the admissible subspace; "
                "the coefficient actions are not twist-equivariant");
          for (size_t i = 0; i < x->size(); ++i)
            slice.d.at(static_cast<int>(row_offset + static_cast<long>(i)),
                       static_cast<int>(col)) = (*x)[i];
        }
        row_offset += static_cast<long>(tb.basis.size());
      }
      ++col;
    }
  }
  return slice;
}

bool is_cocycle(const HomLieAntialgebra& a, const Representation& rho, const CochainSum& f) {
  if (f.degree() < 1) throw InputError("cocycle degree must be at least 1");
  if (!is_admissible(a, rho, f)) throw InputError("the cochain is not admissible");
  return apply_d(a, rho, f).is_zero();
}

std::optional<CochainSum> is_coboundary(const HomLieAntialgebra& a, const Representation& rho,
                                        const CochainSum& f) {
  const int k = f.degree();
  if (k < 1) throw InputError("coboundary degree must be at least 1");
  if (!is_admissible(a, rho, f)) throw InputError("the cochain is not admissible");

  if (k == 1) {
    // Degree-0 cochains are not modeled, so only the zero cochain is exact.
    if (f.is_zero()) return CochainSum(0);
    return std::nullopt;
  }

  const CochainComplexSlice slice = assemble_d(a, rho, k - 1);
  const Vec coords = coordinates_in_blocks(a, rho, slice.target, f,
                                           "admissible cochain failed to project onto "
                                           "the admissible basis");
  const std::optional<Vec> g = solve(slice.d, coords);
  if (!g) return std::nullopt;

  CochainSum witness(k - 1);
  long idx = 0;
  for (const BlockBasis& sb : slice.source) {
    for (const Cochain& basis_cochain : sb.basis) {
      const Rational& c = (*g)[static_cast<size_t>(idx)];
      if (!(c == Rational(0))) witness.add_scaled(basis_cochain, c);
      ++idx;
    }
  }

  CochainSum residual = apply_d(a, rho, witness);
  residual.add_scaled(f, Rational(-1));
  if (!residual.is_zero()) throw InternalError("coboundary witness failed substitution");
  return witness;
}

CohomologyReport cohomology_report(const HomLieAntialgebra& a, const Representation& rho,
                                   int k) {
  if (k < 1) throw InputError("cohomology degree must be at least 1");
  const CochainComplexSlice dk = assemble_d(a, rho, k);

  CohomologyReport report;
  report.k = k;
  report.admissible_dim = dk.source_dim();
  const int rank_k = rank(dk.d);
  report.kernel_dim = report.admissible_dim - rank_k;

  std::optional<CochainComplexSlice> dprev;
  int rank_prev = 0;
  if (k >= 2) {
    dprev = assemble_d(a, rho, k - 1);
    rank_prev = rank(dprev->d);
  }
  report.rank_prev = rank_prev;
  report.h_dim = report.kernel_dim - report.rank_prev;
  if (report.h_dim < 0)
    throw InternalError("negative cohomology dimension; the complex property failed");

  for (const std::uint64_t prime : {2147483659ULL, 2147483693ULL}) {
    ModularCheck check;
    check.prime = prime;
    check.rank_k = rank_mod_p(dk.d, prime);
    if (check.rank_k && *check.rank_k > rank_k)
      throw InternalError("modular rank exceeded the exact rank");
    bool agrees = check.rank_k.has_value() && *check.rank_k == rank_k;
    if (dprev) {
      check.rank_prev = rank_mod_p(dprev->d, prime);
      if (check.rank_prev && *check.rank_prev > rank_prev)
        throw InternalError("modular rank exceeded the exact rank");
      agrees = agrees && check.rank_prev.has_value() && *check.rank_prev == rank_prev;
    }
    check.agrees = agrees;
    report.modular.push_back(check);
  }
  return report;
}

long cohomology_dim(const HomLieAntialgebra& a, const Representation& rho, int k) {
  return cohomology_report(a, rho, k).h_dim;
}

namespace {

Cochain block_or_zero(const HomLieAntialgebra& a, const Representation& rho,
                      const CochainSum& f, CochainSignature sig) {
  if (const Cochain* piece = f.block(sig)) return *piece;
  return zero_cochain(a, rho, sig);
}

}  // namespace

CochainSum apply_d2_explicit(const HomLieAntialgebra& a, const Representation& rho,
                             const CochainSum& f) {
  if (f.degree() != 2) throw InputError("the explicit degree-2 forms need a degree-2 cochain");
  check_shapes(a, rho);
  const int p = a.even_dim(), q = a.odd_dim();
  const int r = rho.module().even_dim, s = rho.module().odd_dim;
  const Cochain f20 = block_or_zero(a, rho, f, CochainSignature{2, 0});
  const Cochain f11 = block_or_zero(a, rho, f, CochainSignature{1, 1});
  const Cochain f02 = block_or_zero(a, rho, f, CochainSignature{0, 2});
  const Rational half(1, 2);

  auto alpha_of = [&](int i) { return a.alpha().apply(basis_vec(p, i)); };
  auto beta_of = [&](int j) { return a.beta().apply(basis_vec(q, j)); };

  CochainSum out(3);

  // (3,0):  1/2 { rho0(a x1) f(x2,x3) - f(x1 x2, a x3)
  //               + f(a x1, x2 x3) - rho0(a x3) f(x1,x2) }
  Cochain g30(CochainSignature{3, 0}, p, q, r);
  for (const auto& et : even_tuples(p, 3)) {
    const Vec x1 = basis_vec(p, et[0]), x2 = basis_vec(p, et[1]), x3 = basis_vec(p, et[2]);
    Vec val = vec_zero(r);
    vec_axpy(val, half, rho.rho0_even_of(alpha_of(et[0])).apply(f20.evaluate({x2, x3}, {})));
    vec_axpy(val, -half, f20.evaluate({a.prod_ee(x1, x2), alpha_of(et[2])}, {}));
    vec_axpy(val, half, f20.evaluate({alpha_of(et[0]), a.prod_ee(x2, x3)}, {}));
    vec_axpy(val, -half, rho.rho0_even_of(alpha_of(et[2])).apply(f20.evaluate({x1, x2}, {})));
    store_value(g30, et, {}, val);
  }
  if (g30.flat_dim() > 0) out.add(g30);

  // (2,1):  - rho0(a x1) f(x2; y1) + 1/2 f(x1 x2; b y1)
  //         - f(a x1; x2 y1) + rho1(b y1) f(x1, x2)
  Cochain g21(CochainSignature{2, 1}, p, q, s);
  for (const auto& et : even_tuples(p, 2)) {
    for (const auto& ot : odd_tuples(q, 1)) {
      const Vec x1 = basis_vec(p, et[0]), x2 = basis_vec(p, et[1]);
      const Vec y1 = basis_vec(q, ot[0]);
      Vec val = vec_zero(s);
      vec_axpy(val, Rational(-1),
               rho.rho0_odd_of(alpha_of(et[0])).apply(f11.evaluate({x2}, {y1})));
      vec_axpy(val, half, f11.evaluate({a.prod_ee(x1, x2)}, {beta_of(ot[0])}));
      vec_axpy(val, Rational(-1), f11.evaluate({alpha_of(et[0])}, {a.prod_eo(x2, y1)}));
      vec_axpy(val, Rational(1),
               rho.rho1_up_of(beta_of(ot[0])).apply(f20.evaluate({x1, x2}, {})));
      store_value(g21, et, ot, val);
    }
  }
  if (g21.flat_dim() > 0) out.add(g21);

  // (1,2):  - 1/2 rho0(a x1) f(y1,y2) + 1/2 f(x1 y1, b y2) - 1/2 f(x1 y2, b y1)
  //         + 1/2 rho1(b y1) f(x1; y2) - 1/2 rho1(b y2) f(x1; y1)
  //         - f(a x1, [y1,y2])
  Cochain g12(CochainSignature{1, 2}, p, q, r);
  for (const auto& et : even_tuples(p, 1)) {
    for (const auto& ot : odd_tuples(q, 2)) {
      const Vec x1 = basis_vec(p, et[0]);
      const Vec y1 = basis_vec(q, ot[0]), y2 = basis_vec(q, ot[1]);
      Vec val = vec_zero(r);
      vec_axpy(val, -half, rho.rho0_even_of(alpha_of(et[0])).apply(f02.evaluate({}, {y1, y2})));
      vec_axpy(val, half, f02.evaluate({}, {a.prod_eo(x1, y1), beta_of(ot[1])}));
      vec_axpy(val, -half, f02.evaluate({}, {a.prod_eo(x1, y2), beta_of(ot[0])}));
      vec_axpy(val, half, rho.rho1_down_of(beta_of(ot[0])).apply(f11.evaluate({x1}, {y2})));
      vec_axpy(val, -half, rho.rho1_down_of(beta_of(ot[1])).apply(f11.evaluate({x1}, {y1})));
      vec_axpy(val, Rational(-1), f20.evaluate({alpha_of(et[0]), a.bracket(y1, y2)}, {}));
      store_value(g12, et, ot, val);
    }
  }
  if (g12.flat_dim() > 0) out.add(g12);

  // (0,3):  1/3 { rho1(b y1) f(y2,y3) - rho1(b y2) f(y1,y3) + rho1(b y3) f(y1,y2)
  //               + f([y1,y2]; b y3) - f([y1,y3]; b y2) + f([y2,y3]; b y1) }
  Cochain g03(CochainSignature{0, 3}, p, q, s);
  for (const auto& ot : odd_tuples(q, 3)) {
    const Vec y1 = basis_vec(q, ot[0]), y2 = basis_vec(q, ot[1]), y3 = basis_vec(q, ot[2]);
    const Rational third(1, 3);
    Vec val = vec_zero(s);
    vec_axpy(val, third, rho.rho1_up_of(beta_of(ot[0])).apply(f02.evaluate({}, {y2, y3})));
    vec_axpy(val, -third, rho.rho1_up_of(beta_of(ot[1])).apply(f02.evaluate({}, {y1, y3})));
    vec_axpy(val, third, rho.rho1_up_of(beta_of(ot[2])).apply(f02.evaluate({}, {y1, y2})));
    vec_axpy(val, third, f11.evaluate({a.bracket(y1, y2)}, {beta_of(ot[2])}));
    vec_axpy(val, -third, f11.evaluate({a.bracket(y1, y3)}, {beta_of(ot[1])}));
    vec_axpy(val, third, f11.evaluate({a.bracket(y2, y3)}, {beta_of(ot[0])}));
    store_value(g03, {}, ot, val);
  }
  if (g03.flat_dim() > 0) out.add(g03);

  return out;
}

CochainSum cochain_from_omega(const HomLieAntialgebra& a, const Representation& rho,
                              const OmegaTriple& omega) {
  check_shapes(a, rho);
  validate_omega_shapes(a, rho.module(), omega);
  const int p = a.even_dim(), q = a.odd_dim();
  const int r = rho.module().even_dim, s = rho.module().odd_dim;
  const Rational half(1, 2);

  CochainSum out(2);
  Cochain f20(CochainSignature{2, 0}, p, q, r);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < r; ++k)
        f20.coeff(static_cast<long>(i) * p + j, 0, k) = half * omega.omega0.at(i, j, k);
  if (f20.flat_dim() > 0) out.add(f20);

  Cochain f11(CochainSignature{1, 1}, p, q, s);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      for (int k = 0; k < s; ++k) f11.coeff(i, j, k) = omega.omega1.at(i, j, k);
  if (f11.flat_dim() > 0) out.add(f11);

  Cochain f02(CochainSignature{0, 2}, p, q, r);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (int k = 0; k < r; ++k)
        f02.coeff(0, odd_tuple_rank({i, j}, q), k) = omega.omega2.at(i, j, k);
  if (f02.flat_dim() > 0) out.add(f02);

  return out;
}

OmegaTriple omega_from_cochain(const HomLieAntialgebra& a, const Representation& rho,
                               const CochainSum& f) {
  if (f.degree() != 2) throw InputError("product-coordinate extraction needs degree 2");
  check_shapes(a, rho);
  const int p = a.even_dim(), q = a.odd_dim();
  const int r = rho.module().even_dim, s = rho.module().odd_dim;
  for (const Cochain& b : f.blocks()) check_block_shape(a, rho, b);

  OmegaTriple omega{Tensor3(p, p, r), Tensor3(p, q, s), Tensor3(q, q, r)};
  if (const Cochain* f20 = f.block(CochainSignature{2, 0})) {
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        for (int k = 0; k < r; ++k)
          omega.omega0.at(i, j, k) = Rational(2) * f20->coeff(static_cast<long>(i) * p + j, 0, k);
  }
  if (const Cochain* f11 = f.block(CochainSignature{1, 1})) {
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j)
        for (int k = 0; k < s; ++k) omega.omega1.at(i, j, k) = f11->coeff(i, j, k);
  }
  if (const Cochain* f02 = f.block(CochainSignature{0, 2})) {
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) {
        for (int k = 0; k < r; ++k) {
          const Rational& v = f02->coeff(0, odd_tuple_rank({i, j}, q), k);
          omega.omega2.at(i, j, k) = v;
          omega.omega2.at(j, i, k) = -v;
        }
      }
    }
  }
  return omega;
}

}  // namespace homanti
