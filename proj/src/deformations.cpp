#include "homanti/deformations.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homanti/cochain.hpp"
#include "homanti/linalg.hpp"

namespace homanti {

namespace {

Vec column(const Matrix& m, int j) {
  Vec out = vec_zero(m.rows());
  for (int i = 0; i < m.rows(); ++i) out[static_cast<size_t>(i)] = m.at(i, j);
  return out;
}

Tensor3 perturbed(const Tensor3& base, const Tensor3& dir, const Rational& t) {
  Tensor3 out = base;
  for (int i = 0; i < out.dim1(); ++i)
    for (int j = 0; j < out.dim2(); ++j)
      for (int k = 0; k < out.dim3(); ++k) out.at(i, j, k) += t * dir.at(i, j, k);
  return out;
}

void store_value(Tensor3& t, int i, int j, const Vec& v) {
  for (int k = 0; k < t.dim3(); ++k) t.at(i, j, k) = v[static_cast<size_t>(k)];
}

HomModule self_module(const HomLieAntialgebra& a) {
  return HomModule{a.even_dim(), a.odd_dim(), a.alpha(), a.beta()};
}

// Shape plus symmetry validation for a deformation direction.
void validate_direction(const HomLieAntialgebra& a, const OmegaTriple& omega) {
  validate_omega_shapes(a, self_module(a), omega);
  for (int i = 0; i < a.even_dim(); ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < a.even_dim(); ++k)
        if (omega.omega0.at(i, j, k) != omega.omega0.at(j, i, k))
          throw InputError("omega0 must be symmetric in its first two indices");
  for (int i = 0; i < a.odd_dim(); ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < a.even_dim(); ++k)
        if (omega.omega2.at(i, j, k) != -omega.omega2.at(j, i, k))
          throw InputError("omega2 must be antisymmetric in its first two indices");
}

void validate_candidate(const HomLieAntialgebra& a, const NijenhuisCandidate& phi) {
  if (phi.phi0.rows() != a.even_dim() || phi.phi0.cols() != a.even_dim())
    throw InputError("phi0 must be square of the even dimension");
  if (phi.phi1.rows() != a.odd_dim() || phi.phi1.cols() != a.odd_dim())
    throw InputError("phi1 must be square of the odd dimension");
}

}  // namespace

bool TrivialityReport::ok() const {
  for (const IdentityReport& r : morphism)
    if (!r.ok()) return false;
  return true;
}

HomLieAntialgebra deform(const HomLieAntialgebra& a, const OmegaTriple& omega,
                         const Rational& t) {
  validate_direction(a, omega);
  return HomLieAntialgebra(a.even_dim(), a.odd_dim(), perturbed(a.mu(), omega.omega0, t),
                           perturbed(a.nu(), omega.omega1, t),
                           perturbed(a.br(), omega.omega2, t), a.alpha(), a.beta());
}

InfinitesimalReport check_infinitesimal(const HomLieAntialgebra& a, const OmegaTriple& omega) {
  if (!check_axioms(a).ok() || !check_multiplicative(a).ok())
    throw InputError(
        "deformations are defined over an algebra that passes the axiom and "
        "multiplicativity checks");
  validate_direction(a, omega);

  InfinitesimalReport report;

  // Condition (i): the direction's own products, read as an algebra for the
  // same twists.
  const HomLieAntialgebra self(a.even_dim(), a.odd_dim(), omega.omega0, omega.omega1,
                               omega.omega2, a.alpha(), a.beta());
  report.self_axioms = check_axioms(self);
  report.self_multiplicative = check_multiplicative(self);

  const Representation rho = adjoint_representation(a);
  const CochainSum f = cochain_from_omega(a, rho, omega);
  const bool admissible = is_admissible(a, rho, f);
  if (admissible != report.self_multiplicative.ok())
    throw InternalError("cochain admissibility disagrees with the twist compatibility of omega");

  // Sampled deformations, then one interpolation per violated residual
  // coordinate. The base algebra passes the axioms and every axiom composes
  // exactly two products, so residuals are polynomials c1*t + c2*t^2; four
  // distinct nonzero samples pin both coefficients and confirm the degree.
  report.t_samples = {Rational(1), Rational(-1), Rational(2), Rational(1, 3)};
  const int samples = static_cast<int>(report.t_samples.size());
  std::vector<IdentityReport> sampled;
  report.deformed_axioms_ok = true;
  for (const Rational& t : report.t_samples) {
    sampled.push_back(check_axioms(deform(a, omega, t)));
    report.deformed_axioms_ok = report.deformed_axioms_ok && sampled.back().ok();
  }

  std::map<std::pair<std::string, std::vector<int>>, std::vector<Vec>> residuals;
  for (int s = 0; s < samples; ++s)
    for (const Violation& v : sampled[static_cast<size_t>(s)].violations()) {
      std::vector<Vec>& slot = residuals[{v.identity, v.tuple}];
      if (slot.empty()) slot.assign(static_cast<size_t>(samples), Vec());
      slot[static_cast<size_t>(s)] = v.residual;
    }

  Matrix vandermonde(samples, samples);
  for (int r = 0; r < samples; ++r) {
    Rational power(1);
    for (int c = 0; c < samples; ++c) {
      vandermonde.at(r, c) = power;
      power *= report.t_samples[static_cast<size_t>(r)];
    }
  }

  bool linear_ok = true, quadratic_ok = true;
  for (const auto& [key, values] : residuals) {
    size_t width = 0;
    for (const Vec& v : values) width = std::max(width, v.size());
    for (size_t d = 0; d < width; ++d) {
      Vec rhs = vec_zero(samples);
      for (int s = 0; s < samples; ++s) {
        const Vec& v = values[static_cast<size_t>(s)];
        if (d < v.size()) rhs[static_cast<size_t>(s)] = v[d];
      }
      const std::optional<Vec> coeff = solve(vandermonde, rhs);
      if (!coeff) throw InternalError("the t-sample interpolation matrix is singular");
      if (!(*coeff)[0].is_zero() || !(*coeff)[3].is_zero())
        throw InternalError("a deformed axiom residual is not quadratic in t");
      if (!(*coeff)[1].is_zero()) linear_ok = false;
      if (!(*coeff)[2].is_zero()) quadratic_ok = false;
    }
  }

  // Cross-checks: the quadratic part of the residuals is the self-product
  // check, and the linear part is the cocycle condition.
  if (quadratic_ok != report.self_axioms.ok())
    throw InternalError("the t-expansion disagrees with the self-product axioms");
  report.cocycle = linear_ok;
  if (admissible && is_cocycle(a, rho, f) != linear_ok)
    throw InternalError("the cochain complex and the t-expansion disagree on the cocycle condition");

  return report;
}

NijenhuisReport is_nijenhuis(const HomLieAntialgebra& a, const NijenhuisCandidate& phi) {
  validate_candidate(a, phi);
  const int p = a.even_dim(), q = a.odd_dim();

  NijenhuisReport report;

  report.twist_compat.note_identity("nij-even-twist");
  const Matrix even_comm = phi.phi0 * a.alpha() - a.alpha() * phi.phi0;
  for (int i = 0; i < p; ++i) {
    Vec r = column(even_comm, i);
    if (!vec_is_zero(r)) report.twist_compat.add_violation({"nij-even-twist", {i}, std::move(r)});
  }
  report.twist_compat.note_identity("nij-odd-twist");
  const Matrix odd_comm = phi.phi1 * a.beta() - a.beta() * phi.phi1;
  for (int j = 0; j < q; ++j) {
    Vec r = column(odd_comm, j);
    if (!vec_is_zero(r)) report.twist_compat.add_violation({"nij-odd-twist", {j}, std::move(r)});
  }

  report.identities.note_identity("nij01");
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const Vec x1 = basis_vec(p, i), x2 = basis_vec(p, j);
      const Vec p1 = column(phi.phi0, i), p2 = column(phi.phi0, j);
      Vec lhs = phi.phi0.apply(a.prod_ee(x1, p2));
      lhs = vec_add(lhs, phi.phi0.apply(a.prod_ee(p1, x2)));
      lhs = vec_sub(lhs, phi.phi0.apply(phi.phi0.apply(a.prod_ee(x1, x2))));
      Vec r = vec_sub(lhs, a.prod_ee(p1, p2));
      if (!vec_is_zero(r)) report.identities.add_violation({"nij01", {i, j}, std::move(r)});
    }

  report.identities.note_identity("nij02");
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec x = basis_vec(p, i), y = basis_vec(q, j);
      const Vec p0 = column(phi.phi0, i), p1 = column(phi.phi1, j);
      Vec lhs = phi.phi1.apply(a.prod_eo(x, p1));
      lhs = vec_add(lhs, phi.phi1.apply(a.prod_eo(p0, y)));
      lhs = vec_sub(lhs, phi.phi1.apply(phi.phi1.apply(a.prod_eo(x, y))));
      Vec r = vec_sub(lhs, a.prod_eo(p0, p1));
      if (!vec_is_zero(r)) report.identities.add_violation({"nij02", {i, j}, std::move(r)});
    }

  report.identities.note_identity("nij03");
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec y1 = basis_vec(q, i), y2 = basis_vec(q, j);
      const Vec p1 = column(phi.phi1, i), p2 = column(phi.phi1, j);
      Vec lhs = phi.phi0.apply(a.bracket(y1, p2));
      lhs = vec_add(lhs, phi.phi0.apply(a.bracket(p1, y2)));
      lhs = vec_sub(lhs, phi.phi0.apply(phi.phi0.apply(a.bracket(y1, y2))));
      Vec r = vec_sub(lhs, a.bracket(p1, p2));
      if (!vec_is_zero(r)) report.identities.add_violation({"nij03", {i, j}, std::move(r)});
    }

  return report;
}

OmegaTriple deformation_from_nijenhuis(const HomLieAntialgebra& a,
                                       const NijenhuisCandidate& phi) {
  if (!is_nijenhuis(a, phi).ok())
    throw InputError("phi does not pass the Nijenhuis identities for this algebra");
  const int p = a.even_dim(), q = a.odd_dim();

  OmegaTriple omega{Tensor3(p, p, p), Tensor3(p, q, q), Tensor3(q, q, p)};
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const Vec x1 = basis_vec(p, i), x2 = basis_vec(p, j);
      Vec v = vec_add(a.prod_ee(x1, column(phi.phi0, j)), a.prod_ee(column(phi.phi0, i), x2));
      v = vec_sub(v, phi.phi0.apply(a.prod_ee(x1, x2)));
      store_value(omega.omega0, i, j, v);
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec x = basis_vec(p, i), y = basis_vec(q, j);
      Vec v = vec_add(a.prod_eo(x, column(phi.phi1, j)), a.prod_eo(column(phi.phi0, i), y));
      v = vec_sub(v, phi.phi1.apply(a.prod_eo(x, y)));
      store_value(omega.omega1, i, j, v);
    }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec y1 = basis_vec(q, i), y2 = basis_vec(q, j);
      Vec v = vec_add(a.bracket(y1, column(phi.phi1, j)), a.bracket(column(phi.phi1, i), y2));
      v = vec_sub(v, phi.phi0.apply(a.bracket(y1, y2)));
      store_value(omega.omega2, i, j, v);
    }
  return omega;
}

TrivialityReport verify_trivial(const HomLieAntialgebra& a, const OmegaTriple& omega,
                                const NijenhuisCandidate& phi,
                                const std::vector<Rational>& t_samples) {
  validate_candidate(a, phi);
  validate_direction(a, omega);

  TrivialityReport out;
  out.t_samples = t_samples;
  for (const Rational& t : t_samples) {
    const AlgebraMorphism phi_t{Matrix::identity(a.even_dim()) + phi.phi0.scaled(t),
                                Matrix::identity(a.odd_dim()) + phi.phi1.scaled(t)};
    out.morphism.push_back(is_homomorphism(phi_t, deform(a, omega, t), a));
  }
  return out;
}

}  // namespace homanti
