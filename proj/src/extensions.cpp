#include "homanti/extensions.hpp"

#include <utility>

#include "homanti/common.hpp"
#include "homanti/linalg.hpp"

namespace homanti {

namespace {

Vec matrix_column(const Matrix& m, int j) {
  Vec out(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) out[static_cast<size_t>(i)] = m.at(i, j);
  return out;
}

Vec tensor_slice(const Tensor3& t, int i, int j) {
  Vec out(static_cast<size_t>(t.dim3()));
  for (int k = 0; k < t.dim3(); ++k) out[static_cast<size_t>(k)] = t.at(i, j, k);
  return out;
}

void validate_index_list(const std::vector<int>& indices, int dim, const char* what) {
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i >= dim) throw InputError(what);
    prev = i;
  }
}

std::vector<int> complement(const std::vector<int>& indices, int dim) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(dim) - indices.size());
  size_t next = 0;
  for (int i = 0; i < dim; ++i) {
    if (next < indices.size() && indices[next] == i) {
      ++next;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

// 0/1 matrix selecting the listed coordinates.
Matrix selection(const std::vector<int>& indices, int dim) {
  Matrix out(static_cast<int>(indices.size()), dim);
  for (size_t r = 0; r < indices.size(); ++r)
    out.at(static_cast<int>(r), indices[r]) = Rational(1);
  return out;
}

Vec select(const Vec& v, const std::vector<int>& indices) {
  Vec out(indices.size());
  for (size_t i = 0; i < indices.size(); ++i)
    out[i] = v[static_cast<size_t>(indices[i])];
  return out;
}

// Identity on the base block with f feeding the base into the fiber.
Matrix unipotent_block(int base_dim, int fiber_dim, const Matrix& f) {
  Matrix out = Matrix::identity(base_dim + fiber_dim);
  for (int u = 0; u < fiber_dim; ++u)
    for (int i = 0; i < base_dim; ++i) out.at(base_dim + u, i) = f.at(u, i);
  return out;
}

Matrix from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix out(rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) out.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
  return out;
}

}  // namespace

FiberIndices trailing_fiber(const HomLieAntialgebra& big, int fiber_even, int fiber_odd) {
  if (fiber_even < 0 || fiber_even > big.even_dim() || fiber_odd < 0 ||
      fiber_odd > big.odd_dim())
    throw InputError("fiber dimensions exceed the algebra");
  FiberIndices out;
  for (int i = big.even_dim() - fiber_even; i < big.even_dim(); ++i) out.even.push_back(i);
  for (int j = big.odd_dim() - fiber_odd; j < big.odd_dim(); ++j) out.odd.push_back(j);
  return out;
}

std::pair<Matrix, Matrix> canonical_section(const HomLieAntialgebra& big, int fiber_even,
                                            int fiber_odd) {
  const int p = big.even_dim() - fiber_even;
  const int q = big.odd_dim() - fiber_odd;
  if (p < 0 || q < 0) throw InputError("fiber dimensions exceed the algebra");
  Matrix sigma0(big.even_dim(), p), sigma1(big.odd_dim(), q);
  for (int i = 0; i < p; ++i) sigma0.at(i, i) = Rational(1);
  for (int j = 0; j < q; ++j) sigma1.at(j, j) = Rational(1);
  return {std::move(sigma0), std::move(sigma1)};
}

HomLieAntialgebra extension_from_cocycle(const HomLieAntialgebra& base,
                                         const Representation& rho, const OmegaTriple& omega) {
  if (!check_representation(base, rho).ok())
    throw InputError("the representation identities fail; no extension is defined");
  const CochainSum f = cochain_from_omega(base, rho, omega);
  if (!is_admissible(base, rho, f))
    throw InputError("omega is not admissible as a degree-2 cochain");
  return semidirect(base, rho, omega);
}

ExtensionDatum extract_cocycle(const HomLieAntialgebra& big, const FiberIndices& fiber,
                               const Matrix& sigma0, const Matrix& sigma1) {
  const int P = big.even_dim(), Q = big.odd_dim();
  validate_index_list(fiber.even, P, "fiber even indices must be strictly increasing and in range");
  validate_index_list(fiber.odd, Q, "fiber odd indices must be strictly increasing and in range");
  const int r = static_cast<int>(fiber.even.size());
  const int s = static_cast<int>(fiber.odd.size());
  const int p = P - r, q = Q - s;
  const std::vector<int> base_even = complement(fiber.even, P);
  const std::vector<int> base_odd = complement(fiber.odd, Q);

  if (sigma0.rows() != P || sigma0.cols() != p || sigma1.rows() != Q || sigma1.cols() != q)
    throw InputError("section shapes do not match the fiber split");
  const Matrix proj0 = selection(base_even, P);
  const Matrix proj1 = selection(base_odd, Q);
  if (!(proj0 * sigma0 == Matrix::identity(p)) || !(proj1 * sigma1 == Matrix::identity(q)))
    throw InputError("the section is not a right inverse of the projection");

  // The fiber must be an abelian ideal, invariant under both twists.
  const auto in_even_fiber = [&](int i) {
    for (int e : fiber.even)
      if (e == i) return true;
    return false;
  };
  const auto in_odd_fiber = [&](int j) {
    for (int o : fiber.odd)
      if (o == j) return true;
    return false;
  };
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) {
      if (!in_even_fiber(i) && !in_even_fiber(j)) continue;
      const Vec v = big.prod_ee(basis_vec(P, i), basis_vec(P, j));
      if (!vec_is_zero(select(v, base_even)))
        throw InputError("the fiber is not an ideal (even-even product escapes)");
      if (in_even_fiber(i) && in_even_fiber(j) && !vec_is_zero(v))
        throw InputError("the fiber is not abelian (even-even product inside)");
    }
    for (int j = 0; j < Q; ++j) {
      if (!in_even_fiber(i) && !in_odd_fiber(j)) continue;
      const Vec v = big.prod_eo(basis_vec(P, i), basis_vec(Q, j));
      if (!vec_is_zero(select(v, base_odd)))
        throw InputError("the fiber is not an ideal (even-odd product escapes)");
      if (in_even_fiber(i) && in_odd_fiber(j) && !vec_is_zero(v))
        throw InputError("the fiber is not abelian (even-odd product inside)");
    }
  }
  for (int i = 0; i < Q; ++i) {
    for (int j = 0; j < Q; ++j) {
      if (!in_odd_fiber(i) && !in_odd_fiber(j)) continue;
      const Vec v = big.bracket(basis_vec(Q, i), basis_vec(Q, j));
      if (!vec_is_zero(select(v, base_even)))
        throw InputError("the fiber is not an ideal (bracket escapes)");
      if (in_odd_fiber(i) && in_odd_fiber(j) && !vec_is_zero(v))
        throw InputError("the fiber is not abelian (bracket inside)");
    }
  }
  for (int j : fiber.even)
    if (!vec_is_zero(select(matrix_column(big.alpha(), j), base_even)))
      throw InputError("the fiber is not invariant under the even twist");
  for (int j : fiber.odd)
    if (!vec_is_zero(select(matrix_column(big.beta(), j), base_odd)))
      throw InputError("the fiber is not invariant under the odd twist");

  // Quotient structure on the complement coordinates, through the section
  // (any lift gives the same classes because the fiber is an ideal).
  Tensor3 mu_base(p, p, p), nu_base(p, q, q), br_base(q, q, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const Vec v = big.prod_ee(matrix_column(sigma0, i), matrix_column(sigma0, j));
      for (int k = 0; k < p; ++k) mu_base.at(i, j, k) = v[static_cast<size_t>(base_even[static_cast<size_t>(k)])];
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec v = big.prod_eo(matrix_column(sigma0, i), matrix_column(sigma1, j));
      for (int k = 0; k < q; ++k) nu_base.at(i, j, k) = v[static_cast<size_t>(base_odd[static_cast<size_t>(k)])];
    }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec v = big.bracket(matrix_column(sigma1, i), matrix_column(sigma1, j));
      for (int k = 0; k < p; ++k) br_base.at(i, j, k) = v[static_cast<size_t>(base_even[static_cast<size_t>(k)])];
    }
  const Matrix alpha_base = proj0 * big.alpha() * sigma0;
  const Matrix beta_base = proj1 * big.beta() * sigma1;
  HomLieAntialgebra base(p, q, std::move(mu_base), std::move(nu_base), std::move(br_base),
                         alpha_base, beta_base);

  // Fiber module: restricted twists.
  Matrix alphaV(r, r), betaV(s, s);
  for (int u = 0; u < r; ++u) {
    const Vec v = matrix_column(big.alpha(), fiber.even[static_cast<size_t>(u)]);
    for (int k = 0; k < r; ++k) alphaV.at(k, u) = v[static_cast<size_t>(fiber.even[static_cast<size_t>(k)])];
  }
  for (int w = 0; w < s; ++w) {
    const Vec v = matrix_column(big.beta(), fiber.odd[static_cast<size_t>(w)]);
    for (int k = 0; k < s; ++k) betaV.at(k, w) = v[static_cast<size_t>(fiber.odd[static_cast<size_t>(k)])];
  }
  HomModule fiber_module{r, s, alphaV, betaV};

  // Induced actions through the section.
  std::vector<Matrix> r0e, r0o, r1u, r1d;
  for (int i = 0; i < p; ++i) {
    Matrix me(r, r), mo(s, s);
    for (int u = 0; u < r; ++u) {
      const Vec v = big.prod_ee(matrix_column(sigma0, i),
                                basis_vec(P, fiber.even[static_cast<size_t>(u)]));
      for (int k = 0; k < r; ++k) me.at(k, u) = v[static_cast<size_t>(fiber.even[static_cast<size_t>(k)])];
    }
    for (int w = 0; w < s; ++w) {
      const Vec v = big.prod_eo(matrix_column(sigma0, i),
                                basis_vec(Q, fiber.odd[static_cast<size_t>(w)]));
      for (int k = 0; k < s; ++k) mo.at(k, w) = v[static_cast<size_t>(fiber.odd[static_cast<size_t>(k)])];
    }
    r0e.push_back(std::move(me));
    r0o.push_back(std::move(mo));
  }
  for (int j = 0; j < q; ++j) {
    Matrix up(s, r), down(r, s);
    for (int u = 0; u < r; ++u) {
      const Vec v = big.prod_eo(basis_vec(P, fiber.even[static_cast<size_t>(u)]),
                                matrix_column(sigma1, j));
      for (int k = 0; k < s; ++k) up.at(k, u) = v[static_cast<size_t>(fiber.odd[static_cast<size_t>(k)])];
    }
    for (int w = 0; w < s; ++w) {
      const Vec v = big.bracket(matrix_column(sigma1, j),
                                basis_vec(Q, fiber.odd[static_cast<size_t>(w)]));
      for (int k = 0; k < r; ++k) down.at(k, w) = v[static_cast<size_t>(fiber.even[static_cast<size_t>(k)])];
    }
    r1u.push_back(std::move(up));
    r1d.push_back(std::move(down));
  }
  Representation rep(fiber_module, std::move(r0e), std::move(r0o), std::move(r1u),
                     std::move(r1d));

  // The cochain measuring the section's failure to split.
  OmegaTriple omega{Tensor3(p, p, r), Tensor3(p, q, s), Tensor3(q, q, r)};
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const Vec v = vec_sub(big.prod_ee(matrix_column(sigma0, i), matrix_column(sigma0, j)),
                            sigma0.apply(tensor_slice(base.mu(), i, j)));
      for (int k = 0; k < r; ++k) omega.omega0.at(i, j, k) = v[static_cast<size_t>(fiber.even[static_cast<size_t>(k)])];
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec v = vec_sub(big.prod_eo(matrix_column(sigma0, i), matrix_column(sigma1, j)),
                            sigma1.apply(tensor_slice(base.nu(), i, j)));
      for (int k = 0; k < s; ++k) omega.omega1.at(i, j, k) = v[static_cast<size_t>(fiber.odd[static_cast<size_t>(k)])];
    }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const Vec v = vec_sub(big.bracket(matrix_column(sigma1, i), matrix_column(sigma1, j)),
                            sigma0.apply(tensor_slice(base.br(), i, j)));
      for (int k = 0; k < r; ++k) omega.omega2.at(i, j, k) = v[static_cast<size_t>(fiber.even[static_cast<size_t>(k)])];
    }

  const CochainSum f = cochain_from_omega(base, rep, omega);
  if (!is_admissible(base, rep, f))
    throw InputError("the extracted cochain is not admissible");
  return ExtensionDatum{std::move(base), std::move(fiber_module), std::move(rep),
                        std::move(omega)};
}

std::optional<EquivalenceWitness> check_equivalence(const HomLieAntialgebra& base,
                                                    const Representation& rho,
                                                    const OmegaTriple& omega,
                                                    const OmegaTriple& omega_prime) {
  const CochainSum f = cochain_from_omega(base, rho, omega);
  const CochainSum g = cochain_from_omega(base, rho, omega_prime);
  if (!is_cocycle(base, rho, f) || !is_cocycle(base, rho, g))
    throw InputError("equivalence is defined between cocycles only");

  CochainSum diff = f;
  diff.add_scaled(g, Rational(-1));
  const std::optional<CochainSum> witness = is_coboundary(base, rho, diff);
  if (!witness) return std::nullopt;

  const int p = base.even_dim(), q = base.odd_dim();
  const int r = rho.module().even_dim, s = rho.module().odd_dim;
  Matrix f0(r, p), f1(s, q);
  if (const Cochain* h10 = witness->block(CochainSignature{1, 0})) {
    for (int i = 0; i < p; ++i) {
      const Vec v = h10->value_on({i}, {});
      for (int k = 0; k < r; ++k) f0.at(k, i) = v[static_cast<size_t>(k)];
    }
  }
  if (const Cochain* h01 = witness->block(CochainSignature{0, 1})) {
    for (int j = 0; j < q; ++j) {
      const Vec v = h01->value_on({}, {j});
      for (int k = 0; k < s; ++k) f1.at(k, j) = v[static_cast<size_t>(k)];
    }
  }

  // The block map is a homomorphism from the omega-extension to the
  // omega_prime-extension; verify all five identities.
  const HomLieAntialgebra ext = semidirect(base, rho, omega);
  const HomLieAntialgebra ext_prime = semidirect(base, rho, omega_prime);
  const AlgebraMorphism phi{unipotent_block(p, r, f0), unipotent_block(q, s, f1)};
  if (!is_homomorphism(phi, ext, ext_prime).ok())
    throw InternalError("equivalence witness failed the homomorphism identities");
  return EquivalenceWitness{std::move(f0), std::move(f1)};
}

H2ClassificationReport h2_classification_report(const HomLieAntialgebra& base,
                                                const Representation& rho) {
  H2ClassificationReport out{cohomology_report(base, rho, 2), {}};
  const CochainComplexSlice d2 = assemble_d(base, rho, 2);
  const CochainComplexSlice d1 = assemble_d(base, rho, 1);

  // Kernel vectors kept when they are independent modulo the image of d1.
  std::vector<Vec> columns;
  for (int c = 0; c < d1.d.cols(); ++c) columns.push_back(matrix_column(d1.d, c));
  const int dim2 = static_cast<int>(d2.source_dim());
  int current_rank = rank(from_columns(columns, dim2));
  for (Vec& v : nullspace_basis(d2.d)) {
    columns.push_back(v);
    const int with = rank(from_columns(columns, dim2));
    if (with > current_rank) {
      current_rank = with;
      CochainSum rep_sum(2);
      long idx = 0;
      for (const BlockBasis& block : d2.source)
        for (const Cochain& b : block.basis) {
          rep_sum.add_scaled(b, v[static_cast<size_t>(idx)]);
          ++idx;
        }
      H2Representative item{omega_from_cochain(base, rho, rep_sum), false, std::nullopt};
      bool symmetric = true;
      for (int i = 0; i < base.even_dim() && symmetric; ++i)
        for (int j = 0; j < i && symmetric; ++j)
          for (int k = 0; k < rho.module().even_dim; ++k)
            if (!(item.omega.omega0.at(i, j, k) == item.omega.omega0.at(j, i, k))) {
              symmetric = false;
              break;
            }
      item.realizable = symmetric;
      if (symmetric)
        item.extension_axioms = check_axioms(semidirect(base, rho, item.omega));
      out.representatives.push_back(std::move(item));
    } else {
      columns.pop_back();
    }
  }
  if (static_cast<long>(out.representatives.size()) != out.cohomology.h_dim)
    throw InternalError("representative count missed the cohomology dimension");
  return out;
}

}  // namespace homanti
