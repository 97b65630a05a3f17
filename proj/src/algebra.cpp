#include "homanti/algebra.hpp"

#include <sstream>

namespace homanti {

Tensor3::Tensor3(int d1, int d2, int d3)
    : d1_(d1), d2_(d2), d3_(d3), e_(static_cast<size_t>(d1) * d2 * d3) {
  if (d1 < 0 || d2 < 0 || d3 < 0) throw InputError("tensor: negative dimension");
}

Vec Tensor3::contract(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != d1_ || static_cast<int>(v.size()) != d2_)
    throw InputError("tensor: contraction size mismatch");
  Vec out(static_cast<size_t>(d3_));
  for (int i = 0; i < d1_; ++i) {
    if (u[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d2_; ++j) {
      Rational c = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
      if (c.is_zero()) continue;
      for (int k = 0; k < d3_; ++k) {
        const Rational& t = at(i, j, k);
        if (!t.is_zero()) out[static_cast<size_t>(k)] += c * t;
      }
    }
  }
  return out;
}

bool IdentityReport::passes(const std::string& identity) const {
  for (const auto& v : violations_)
    if (v.identity == identity) return false;
  return true;
}

std::string IdentityReport::summary() const {
  std::ostringstream out;
  for (const auto& name : identities_) {
    size_t count = 0;
    for (const auto& v : violations_)
      if (v.identity == name) ++count;
    if (count == 0) {
      out << name << ": pass\n";
    } else {
      out << name << ": fail (" << count << " tuples)\n";
    }
  }
  return out.str();
}

HomLieAntialgebra::HomLieAntialgebra(int even_dim, int odd_dim, Tensor3 mu, Tensor3 nu,
                                     Tensor3 br, Matrix alpha, Matrix beta)
    : p_(even_dim), q_(odd_dim),
      mu_(std::move(mu)), nu_(std::move(nu)), br_(std::move(br)),
      alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (p_ < 0 || q_ < 0) throw InputError("algebra: negative dimension");
  if (mu_.dim1() != p_ || mu_.dim2() != p_ || mu_.dim3() != p_)
    throw InputError("algebra: mu must be p x p x p");
  if (nu_.dim1() != p_ || nu_.dim2() != q_ || nu_.dim3() != q_)
    throw InputError("algebra: nu must be p x q x q");
  if (br_.dim1() != q_ || br_.dim2() != q_ || br_.dim3() != p_)
    throw InputError("algebra: br must be q x q x p");
  if (alpha_.rows() != p_ || alpha_.cols() != p_)
    throw InputError("algebra: alpha must be p x p");
  if (beta_.rows() != q_ || beta_.cols() != q_)
    throw InputError("algebra: beta must be q x q");
  for (int i = 0; i < p_; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < p_; ++k)
        if (mu_.at(i, j, k) != mu_.at(j, i, k))
          throw InputError("algebra: mu not symmetric in its first two indices");
  for (int i = 0; i < q_; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < p_; ++k)
        if (br_.at(i, j, k) != -br_.at(j, i, k))
          throw InputError("algebra: br not antisymmetric in its first two indices");
}

Vec HomLieAntialgebra::prod_ee(const Vec& x1, const Vec& x2) const {
  return mu_.contract(x1, x2);
}

Vec HomLieAntialgebra::prod_eo(const Vec& x, const Vec& y) const {
  return nu_.contract(x, y);
}

Vec HomLieAntialgebra::bracket(const Vec& y1, const Vec& y2) const {
  return br_.contract(y1, y2);
}

Vec basis_vec(int n, int i) {
  Vec v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = 1;
  return v;
}

namespace {

void record(IdentityReport& report, const std::string& identity, std::vector<int> tuple,
            Vec residual) {
  if (vec_is_zero(residual)) return;
  report.add_violation({identity, std::move(tuple), std::move(residual)});
}

}  // namespace

IdentityReport check_axioms(const HomLieAntialgebra& a) {
  const int p = a.even_dim(), q = a.odd_dim();
  IdentityReport report;
  for (const char* name : {"hanti01", "hanti02", "hanti03", "hanti04"})
    report.note_identity(name);

  std::vector<Vec> ae(static_cast<size_t>(p)), bo(static_cast<size_t>(q));
  for (int i = 0; i < p; ++i) ae[static_cast<size_t>(i)] = a.alpha().apply(basis_vec(p, i));
  for (int i = 0; i < q; ++i) bo[static_cast<size_t>(i)] = a.beta().apply(basis_vec(q, i));

  const Rational half(1, 2);

  // alpha(x1)·(x2·x3) = (x1·x2)·alpha(x3)
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        Vec lhs = a.prod_ee(ae[static_cast<size_t>(i)],
                            a.prod_ee(basis_vec(p, j), basis_vec(p, k)));
        Vec rhs = a.prod_ee(a.prod_ee(basis_vec(p, i), basis_vec(p, j)),
                            ae[static_cast<size_t>(k)]);
        record(report, "hanti01", {i, j, k}, vec_sub(lhs, rhs));
      }

  // alpha(x1)·(x2·y1) = (1/2)(x1·x2)·beta(y1)
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < q; ++k) {
        Vec lhs = a.prod_eo(ae[static_cast<size_t>(i)],
                            a.prod_eo(basis_vec(p, j), basis_vec(q, k)));
        Vec rhs = vec_scale(a.prod_eo(a.prod_ee(basis_vec(p, i), basis_vec(p, j)),
                                      bo[static_cast<size_t>(k)]),
                            half);
        record(report, "hanti02", {i, j, k}, vec_sub(lhs, rhs));
      }

  // alpha(x1)·[y1,y2] = [x1·y1, beta(y2)] + [beta(y1), x1·y2]
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      for (int k = 0; k < q; ++k) {
        Vec lhs = a.prod_ee(ae[static_cast<size_t>(i)],
                            a.bracket(basis_vec(q, j), basis_vec(q, k)));
        Vec rhs = vec_add(
            a.bracket(a.prod_eo(basis_vec(p, i), basis_vec(q, j)), bo[static_cast<size_t>(k)]),
            a.bracket(bo[static_cast<size_t>(j)], a.prod_eo(basis_vec(p, i), basis_vec(q, k))));
        record(report, "hanti03", {i, j, k}, vec_sub(lhs, rhs));
      }

  // beta(y1)·[y2,y3] + beta(y2)·[y3,y1] + beta(y3)·[y1,y2] = 0
  // (the even factor goes first in the even-on-odd product)
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      for (int k = 0; k < q; ++k) {
        Vec sum = a.prod_eo(a.bracket(basis_vec(q, j), basis_vec(q, k)), bo[static_cast<size_t>(i)]);
        sum = vec_add(sum, a.prod_eo(a.bracket(basis_vec(q, k), basis_vec(q, i)),
                                     bo[static_cast<size_t>(j)]));
        sum = vec_add(sum, a.prod_eo(a.bracket(basis_vec(q, i), basis_vec(q, j)),
                                     bo[static_cast<size_t>(k)]));
        record(report, "hanti04", {i, j, k}, std::move(sum));
      }

  return report;
}

IdentityReport check_multiplicative(const HomLieAntialgebra& a) {
  const int p = a.even_dim(), q = a.odd_dim();
  IdentityReport report;
  for (const char* name : {"mult-ee", "mult-eo", "mult-oo"}) report.note_identity(name);

  std::vector<Vec> ae(static_cast<size_t>(p)), bo(static_cast<size_t>(q));
  for (int i = 0; i < p; ++i) ae[static_cast<size_t>(i)] = a.alpha().apply(basis_vec(p, i));
  for (int i = 0; i < q; ++i) bo[static_cast<size_t>(i)] = a.beta().apply(basis_vec(q, i));

  // alpha(x1·x2) = alpha(x1)·alpha(x2)
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Vec lhs = a.alpha().apply(a.prod_ee(basis_vec(p, i), basis_vec(p, j)));
      Vec rhs = a.prod_ee(ae[static_cast<size_t>(i)], ae[static_cast<size_t>(j)]);
      record(report, "mult-ee", {i, j}, vec_sub(lhs, rhs));
    }

  // beta(x1·y1) = alpha(x1)·beta(y1)
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      Vec lhs = a.beta().apply(a.prod_eo(basis_vec(p, i), basis_vec(q, j)));
      Vec rhs = a.prod_eo(ae[static_cast<size_t>(i)], bo[static_cast<size_t>(j)]);
      record(report, "mult-eo", {i, j}, vec_sub(lhs, rhs));
    }

  // alpha([y1,y2]) = [beta(y1), beta(y2)]
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Vec lhs = a.alpha().apply(a.bracket(basis_vec(q, i), basis_vec(q, j)));
      Vec rhs = a.bracket(bo[static_cast<size_t>(i)], bo[static_cast<size_t>(j)]);
      record(report, "mult-oo", {i, j}, vec_sub(lhs, rhs));
    }

  return report;
}

IdentityReport is_homomorphism(const AlgebraMorphism& phi, const HomLieAntialgebra& src,
                               const HomLieAntialgebra& dst) {
  if (phi.phi0.rows() != dst.even_dim() || phi.phi0.cols() != src.even_dim() ||
      phi.phi1.rows() != dst.odd_dim() || phi.phi1.cols() != src.odd_dim())
    throw InputError("is_homomorphism: morphism shape mismatch");

  const int p = src.even_dim(), q = src.odd_dim();
  IdentityReport report;
  for (const char* name :
       {"homo-even-twist", "homo-odd-twist", "homo-ee", "homo-eo", "homo-oo"})
    report.note_identity(name);

  // phi0 . alpha = alpha~ . phi0 and phi1 . beta = beta~ . phi1, per column.
  Matrix even_comm = phi.phi0 * src.alpha() - dst.alpha() * phi.phi0;
  for (int i = 0; i < p; ++i)
    record(report, "homo-even-twist", {i}, even_comm.apply(basis_vec(p, i)));
  Matrix odd_comm = phi.phi1 * src.beta() - dst.beta() * phi.phi1;
  for (int i = 0; i < q; ++i)
    record(report, "homo-odd-twist", {i}, odd_comm.apply(basis_vec(q, i)));

  std::vector<Vec> pe(static_cast<size_t>(p)), po(static_cast<size_t>(q));
  for (int i = 0; i < p; ++i) pe[static_cast<size_t>(i)] = phi.phi0.apply(basis_vec(p, i));
  for (int i = 0; i < q; ++i) po[static_cast<size_t>(i)] = phi.phi1.apply(basis_vec(q, i));

  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Vec lhs = phi.phi0.apply(src.prod_ee(basis_vec(p, i), basis_vec(p, j)));
      Vec rhs = dst.prod_ee(pe[static_cast<size_t>(i)], pe[static_cast<size_t>(j)]);
      record(report, "homo-ee", {i, j}, vec_sub(lhs, rhs));
    }

  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      Vec lhs = phi.phi1.apply(src.prod_eo(basis_vec(p, i), basis_vec(q, j)));
      Vec rhs = dst.prod_eo(pe[static_cast<size_t>(i)], po[static_cast<size_t>(j)]);
      record(report, "homo-eo", {i, j}, vec_sub(lhs, rhs));
    }

  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Vec lhs = phi.phi0.apply(src.bracket(basis_vec(q, i), basis_vec(q, j)));
      Vec rhs = dst.bracket(po[static_cast<size_t>(i)], po[static_cast<size_t>(j)]);
      record(report, "homo-oo", {i, j}, vec_sub(lhs, rhs));
    }

  return report;
}

HomLieAntialgebra twist(const HomLieAntialgebra& a, const AlgebraMorphism& phi) {
  const int p = a.even_dim(), q = a.odd_dim();
  if (a.alpha() != Matrix::identity(p) || a.beta() != Matrix::identity(q))
    throw InputError("twist: input algebra must carry identity twist maps");
  if (!check_axioms(a).ok())
    throw InputError("twist: input algebra fails its defining identities");
  if (!is_homomorphism(phi, a, a).ok())
    throw InputError("twist: the map is not a self-homomorphism");

  Tensor3 mu(p, p, p), nu(p, q, q), br(q, q, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Vec prod(static_cast<size_t>(p));
      for (int k = 0; k < p; ++k) prod[static_cast<size_t>(k)] = a.mu().at(i, j, k);
      Vec image = phi.phi0.apply(prod);
      for (int k = 0; k < p; ++k) mu.at(i, j, k) = image[static_cast<size_t>(k)];
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      Vec prod(static_cast<size_t>(q));
      for (int k = 0; k < q; ++k) prod[static_cast<size_t>(k)] = a.nu().at(i, j, k);
      Vec image = phi.phi1.apply(prod);
      for (int k = 0; k < q; ++k) nu.at(i, j, k) = image[static_cast<size_t>(k)];
    }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Vec prod(static_cast<size_t>(p));
      for (int k = 0; k < p; ++k) prod[static_cast<size_t>(k)] = a.br().at(i, j, k);
      Vec image = phi.phi0.apply(prod);
      for (int k = 0; k < p; ++k) br.at(i, j, k) = image[static_cast<size_t>(k)];
    }

  HomLieAntialgebra out(p, q, std::move(mu), std::move(nu), std::move(br), phi.phi0, phi.phi1);
  if (!check_axioms(out).ok())
    throw InternalError("twist: constructed algebra fails its defining identities");
  return out;
}

}  // namespace homanti
