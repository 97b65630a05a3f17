#include "homanti/representation.hpp"

namespace homanti {

namespace {

void check_square(const Matrix& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw InputError(std::string("representation: ") + what + " has the wrong shape");
}

Matrix combine(const std::vector<Matrix>& mats, const Vec& coords, int rows, int cols) {
  if (coords.size() != mats.size())
    throw InputError("representation: coordinate length does not match basis count");
  Matrix out(rows, cols);
  for (size_t i = 0; i < mats.size(); ++i) {
    const Rational& c = coords[i];
    if (c.is_zero()) continue;
    for (int r = 0; r < rows; ++r)
      for (int k = 0; k < cols; ++k) out.at(r, k) += c * mats[i].at(r, k);
  }
  return out;
}

}  // namespace

Representation::Representation(HomModule module, std::vector<Matrix> rho0_even,
                               std::vector<Matrix> rho0_odd, std::vector<Matrix> rho1_up,
                               std::vector<Matrix> rho1_down)
    : module_(std::move(module)),
      rho0_even_(std::move(rho0_even)),
      rho0_odd_(std::move(rho0_odd)),
      rho1_up_(std::move(rho1_up)),
      rho1_down_(std::move(rho1_down)) {
  const int r = module_.even_dim, s = module_.odd_dim;
  if (r < 0 || s < 0) throw InputError("representation: negative module dimension");
  check_square(module_.alphaV, r, "alphaV");
  check_square(module_.betaV, s, "betaV");
  if (rho0_even_.size() != rho0_odd_.size())
    throw InputError("representation: rho0 even/odd basis counts differ");
  if (rho1_up_.size() != rho1_down_.size())
    throw InputError("representation: rho1 up/down basis counts differ");
  for (const Matrix& m : rho0_even_) check_square(m, r, "rho0_even entry");
  for (const Matrix& m : rho0_odd_) check_square(m, s, "rho0_odd entry");
  for (const Matrix& m : rho1_up_)
    if (m.rows() != s || m.cols() != r)
      throw InputError("representation: rho1_up entry has the wrong shape");
  for (const Matrix& m : rho1_down_)
    if (m.rows() != r || m.cols() != s)
      throw InputError("representation: rho1_down entry has the wrong shape");
}

Matrix Representation::rho0_even_of(const Vec& x) const {
  return combine(rho0_even_, x, module_.even_dim, module_.even_dim);
}

Matrix Representation::rho0_odd_of(const Vec& x) const {
  return combine(rho0_odd_, x, module_.odd_dim, module_.odd_dim);
}

Matrix Representation::rho1_up_of(const Vec& y) const {
  return combine(rho1_up_, y, module_.odd_dim, module_.even_dim);
}

Matrix Representation::rho1_down_of(const Vec& y) const {
  return combine(rho1_down_, y, module_.even_dim, module_.odd_dim);
}

namespace {

void record_columns(IdentityReport& report, const std::string& identity, int i, int j,
                    const Matrix& residual) {
  for (int col = 0; col < residual.cols(); ++col) {
    Vec column(static_cast<size_t>(residual.rows()));
    for (int row = 0; row < residual.rows(); ++row)
      column[static_cast<size_t>(row)] = residual.at(row, col);
    if (!vec_is_zero(column)) report.add_violation({identity, {i, j, col}, std::move(column)});
  }
}

}  // namespace

IdentityReport check_representation(const HomLieAntialgebra& a, const Representation& rho) {
  const int p = a.even_dim(), q = a.odd_dim();
  if (rho.algebra_even_dim() != p || rho.algebra_odd_dim() != q)
    throw InputError("check_representation: algebra dimensions do not match");

  IdentityReport report;
  for (const char* name :
       {"rep01", "rep02", "rep03", "rep04", "rep05", "rep06", "rep07"})
    report.note_identity(name);

  const Matrix& aV = rho.module().alphaV;
  const Matrix& bV = rho.module().betaV;
  const Rational half(1, 2);

  std::vector<Vec> ae(static_cast<size_t>(p)), bo(static_cast<size_t>(q));
  for (int i = 0; i < p; ++i) ae[static_cast<size_t>(i)] = a.alpha().apply(basis_vec(p, i));
  for (int j = 0; j < q; ++j) bo[static_cast<size_t>(j)] = a.beta().apply(basis_vec(q, j));

  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Vec prod = a.prod_ee(basis_vec(p, i), basis_vec(p, j));
      // rho0(alpha(x1)) rho0(x2) = rho0(x1*x2) alphaV   on V0
      record_columns(report, "rep01", i, j,
                     rho.rho0_even_of(ae[static_cast<size_t>(i)]) * rho.rho0_even(j) -
                         rho.rho0_even_of(prod) * aV);
      // rho0(alpha(x1)) rho0(x2) = 1/2 rho0(x1*x2) betaV   on V1
      record_columns(report, "rep02", i, j,
                     rho.rho0_odd_of(ae[static_cast<size_t>(i)]) * rho.rho0_odd(j) -
                         (rho.rho0_odd_of(prod) * bV).scaled(half));
    }

  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      Vec prod = a.prod_eo(basis_vec(p, i), basis_vec(q, j));
      Matrix up_beta = rho.rho1_up_of(bo[static_cast<size_t>(j)]);
      // rho0(alpha(x1)) rho1(y1) = 1/2 rho1(beta(y1)) rho0(x1)   on V0
      record_columns(report, "rep03", i, j,
                     rho.rho0_odd_of(ae[static_cast<size_t>(i)]) * rho.rho1_up(j) -
                         (up_beta * rho.rho0_even(i)).scaled(half));
      // rho1(x1*y1) alphaV = 1/2 rho1(beta(y1)) rho0(x1)   on V0
      record_columns(report, "rep04", i, j,
                     rho.rho1_up_of(prod) * aV - (up_beta * rho.rho0_even(i)).scaled(half));
      // rho0(alpha(x1)) rho1(y1) = rho1(x1*y1) betaV + rho1(beta(y1)) rho0(x1)   on V1
      record_columns(report, "rep05", i, j,
                     rho.rho0_even_of(ae[static_cast<size_t>(i)]) * rho.rho1_down(j) -
                         rho.rho1_down_of(prod) * bV -
                         rho.rho1_down_of(bo[static_cast<size_t>(j)]) * rho.rho0_odd(i));
    }

  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Vec bk = a.bracket(basis_vec(q, i), basis_vec(q, j));
      // rho0([y1,y2]) alphaV = rho1(beta(y1)) rho1(y2) - rho1(beta(y2)) rho1(y1)   on V0
      record_columns(report, "rep06", i, j,
                     rho.rho0_even_of(bk) * aV -
                         rho.rho1_down_of(bo[static_cast<size_t>(i)]) * rho.rho1_up(j) +
                         rho.rho1_down_of(bo[static_cast<size_t>(j)]) * rho.rho1_up(i));
      // rho0([y1,y2]) betaV = rho1(beta(y2)) rho1(y1) - rho1(beta(y1)) rho1(y2)   on V1
      record_columns(report, "rep07", i, j,
                     rho.rho0_odd_of(bk) * bV -
                         rho.rho1_up_of(bo[static_cast<size_t>(j)]) * rho.rho1_down(i) +
                         rho.rho1_up_of(bo[static_cast<size_t>(i)]) * rho.rho1_down(j));
    }

  return report;
}

Representation adjoint_representation(const HomLieAntialgebra& a) {
  if (!check_axioms(a).ok())
    throw InputError("adjoint_representation: algebra fails its defining identities");
  if (!check_multiplicative(a).ok())
    throw InputError("adjoint_representation: twist maps are not multiplicative");

  const int p = a.even_dim(), q = a.odd_dim();
  HomModule module{p, q, a.alpha(), a.beta()};

  std::vector<Matrix> r0e, r0o, r1u, r1d;
  for (int i = 0; i < p; ++i) {
    Matrix even(p, p), odd(q, q);
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) even.at(k, j) = a.mu().at(i, j, k);
    for (int j = 0; j < q; ++j)
      for (int k = 0; k < q; ++k) odd.at(k, j) = a.nu().at(i, j, k);
    r0e.push_back(std::move(even));
    r0o.push_back(std::move(odd));
  }
  for (int j = 0; j < q; ++j) {
    Matrix up(q, p), down(p, q);
    // up: u in V0 goes to u*f_j (even-on-odd product with u as the even slot)
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < q; ++k) up.at(k, i) = a.nu().at(i, j, k);
    // down: w in V1 goes to [f_j, w]
    for (int l = 0; l < q; ++l)
      for (int k = 0; k < p; ++k) down.at(k, l) = a.br().at(j, l, k);
    r1u.push_back(std::move(up));
    r1d.push_back(std::move(down));
  }

  return Representation(std::move(module), std::move(r0e), std::move(r0o), std::move(r1u),
                        std::move(r1d));
}

Representation trivial_representation(const HomLieAntialgebra& a, HomModule module) {
  const int p = a.even_dim(), q = a.odd_dim();
  const int r = module.even_dim, s = module.odd_dim;
  std::vector<Matrix> r0e(static_cast<size_t>(p), Matrix(r, r));
  std::vector<Matrix> r0o(static_cast<size_t>(p), Matrix(s, s));
  std::vector<Matrix> r1u(static_cast<size_t>(q), Matrix(s, r));
  std::vector<Matrix> r1d(static_cast<size_t>(q), Matrix(r, s));
  return Representation(std::move(module), std::move(r0e), std::move(r0o), std::move(r1u),
                        std::move(r1d));
}

void validate_omega_shapes(const HomLieAntialgebra& a, const HomModule& module,
                           const OmegaTriple& omega) {
  const int p = a.even_dim(), q = a.odd_dim();
  const int r = module.even_dim, s = module.odd_dim;
  if (omega.omega0.dim1() != p || omega.omega0.dim2() != p || omega.omega0.dim3() != r)
    throw InputError("omega: omega0 must be p x p x r");
  if (omega.omega1.dim1() != p || omega.omega1.dim2() != q || omega.omega1.dim3() != s)
    throw InputError("omega: omega1 must be p x q x s");
  if (omega.omega2.dim1() != q || omega.omega2.dim2() != q || omega.omega2.dim3() != r)
    throw InputError("omega: omega2 must be q x q x r");
}

namespace {

HomLieAntialgebra build_product_algebra(const HomLieAntialgebra& a, const Representation& rho,
                                        const OmegaTriple* omega) {
  const int p = a.even_dim(), q = a.odd_dim();
  if (rho.algebra_even_dim() != p || rho.algebra_odd_dim() != q)
    throw InputError("semidirect: algebra dimensions do not match the representation");
  if (omega) validate_omega_shapes(a, rho.module(), *omega);
  const int r = rho.module().even_dim, s = rho.module().odd_dim;
  const int P = p + r, Q = q + s;

  Tensor3 mu(P, P, P), nu(P, Q, Q), br(Q, Q, P);

  // Even*even: base products, omega0 values, and the V0 action.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      for (int k = 0; k < p; ++k) mu.at(i, j, k) = a.mu().at(i, j, k);
      if (omega)
        for (int k = 0; k < r; ++k) mu.at(i, j, p + k) = omega->omega0.at(i, j, k);
    }
  for (int i = 0; i < p; ++i)
    for (int m = 0; m < r; ++m)
      for (int k = 0; k < r; ++k) {
        mu.at(i, p + m, p + k) = rho.rho0_even(i).at(k, m);
        mu.at(p + m, i, p + k) = rho.rho0_even(i).at(k, m);
      }

  // Even*odd: base action, omega1 values, rho0 on V1, rho1_up on V0.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      for (int k = 0; k < q; ++k) nu.at(i, j, k) = a.nu().at(i, j, k);
      if (omega)
        for (int k = 0; k < s; ++k) nu.at(i, j, q + k) = omega->omega1.at(i, j, k);
    }
  for (int i = 0; i < p; ++i)
    for (int m = 0; m < s; ++m)
      for (int k = 0; k < s; ++k) nu.at(i, q + m, q + k) = rho.rho0_odd(i).at(k, m);
  for (int m = 0; m < r; ++m)
    for (int j = 0; j < q; ++j)
      for (int k = 0; k < s; ++k) nu.at(p + m, j, q + k) = rho.rho1_up(j).at(k, m);

  // Odd bracket: base bracket, omega2 values, rho1_down both ways.
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      for (int k = 0; k < p; ++k) br.at(i, j, k) = a.br().at(i, j, k);
      if (omega)
        for (int k = 0; k < r; ++k) br.at(i, j, p + k) = omega->omega2.at(i, j, k);
    }
  for (int i = 0; i < q; ++i)
    for (int n = 0; n < s; ++n)
      for (int k = 0; k < r; ++k) {
        br.at(i, q + n, p + k) = rho.rho1_down(i).at(k, n);
        br.at(q + n, i, p + k) = -rho.rho1_down(i).at(k, n);
      }

  return HomLieAntialgebra(P, Q, std::move(mu), std::move(nu), std::move(br),
                           block_diag(a.alpha(), rho.module().alphaV),
                           block_diag(a.beta(), rho.module().betaV));
}

}  // namespace

HomLieAntialgebra semidirect(const HomLieAntialgebra& a, const Representation& rho) {
  return build_product_algebra(a, rho, nullptr);
}

HomLieAntialgebra semidirect(const HomLieAntialgebra& a, const Representation& rho,
                             const OmegaTriple& omega) {
  return build_product_algebra(a, rho, &omega);
}

}  // namespace homanti
