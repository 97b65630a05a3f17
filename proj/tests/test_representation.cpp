#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homanti/examples.hpp"
#include "homanti/representation.hpp"

using namespace homanti;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

// A copy of the adjoint representation with one action matrix replaced.
Representation with_rho1_down(const Representation& rho, int j, Matrix replacement) {
  std::vector<Matrix> r0e, r0o, r1u, r1d;
  for (int i = 0; i < rho.algebra_even_dim(); ++i) {
    r0e.push_back(rho.rho0_even(i));
    r0o.push_back(rho.rho0_odd(i));
  }
  for (int k = 0; k < rho.algebra_odd_dim(); ++k) {
    r1u.push_back(rho.rho1_up(k));
    r1d.push_back(k == j ? std::move(replacement) : rho.rho1_down(k));
  }
  return Representation(rho.module(), std::move(r0e), std::move(r0o), std::move(r1u),
                        std::move(r1d));
}

}  // namespace

TEST_CASE("adjoint of k1 has the pinned action matrices") {
  HomLieAntialgebra a = k1();
  Representation rho = adjoint_representation(a);

  CHECK(rho.module().even_dim == 1);
  CHECK(rho.module().odd_dim == 2);
  CHECK(rho.module().alphaV == Matrix::identity(1));
  CHECK(rho.module().betaV == Matrix::identity(2));

  // e acts as identity on V0 and as 1/2 id on V1.
  CHECK(rho.rho0_even(0) == Matrix(1, 1, {1}));
  CHECK(rho.rho0_odd(0) == Matrix::identity(2).scaled(Q("1/2")));

  // f1 sends e to e*f1 = 1/2 f1 and f2 to [f1, f2] = 1/2 e.
  CHECK(rho.rho1_up(0) == Matrix(2, 1, {Q("1/2"), 0}));
  CHECK(rho.rho1_down(0) == Matrix(1, 2, {0, Q("1/2")}));
  CHECK(rho.rho1_up(1) == Matrix(2, 1, {0, Q("1/2")}));
  CHECK(rho.rho1_down(1) == Matrix(1, 2, {Q("-1/2"), 0}));

  CHECK(rho.rho1_down_of(basis_vec(2, 0)).apply(basis_vec(2, 1)) == Vec{Q("1/2")});
}

TEST_CASE("adjoint representations pass the seven-identity checker") {
  for (const char* s : {"1", "2", "3", "1/5", "-1"}) {
    HomLieAntialgebra a = twisted_k1(Q(s));
    CAPTURE(s);
    IdentityReport report = check_representation(a, adjoint_representation(a));
    CHECK(report.ok());
    CHECK(report.identities().size() == 7);
  }
}

TEST_CASE("adjoint preconditions") {
  // Purely even algebra u*u = v with alpha killing v: the association
  // identity holds but alpha(u*u) = 0 while alpha(u)*alpha(u) = v.
  Tensor3 mu(2, 2, 2);
  mu.at(0, 0, 1) = 1;
  HomLieAntialgebra bad(2, 0, mu, Tensor3(2, 0, 0), Tensor3(0, 0, 2),
                        Matrix(2, 2, {1, 0, 0, 0}), Matrix(0, 0));
  CHECK(check_axioms(bad).ok());
  CHECK_FALSE(check_multiplicative(bad).ok());
  CHECK_THROWS_AS(adjoint_representation(bad), InputError);

  // Axiom failures are rejected too.
  Tensor3 k1mu(1, 1, 1), k1nu(1, 2, 2), k1br(2, 2, 1);
  k1mu.at(0, 0, 0) = 1;
  k1nu.at(0, 0, 0) = 1;  // e * f1 = f1 breaks the even-even-odd identity
  k1nu.at(0, 1, 1) = Q("1/2");
  k1br.at(0, 1, 0) = Q("1/2");
  k1br.at(1, 0, 0) = Q("-1/2");
  HomLieAntialgebra perturbed(1, 2, k1mu, k1nu, k1br, Matrix::identity(1),
                              Matrix::identity(2));
  CHECK_FALSE(check_axioms(perturbed).ok());
  CHECK_THROWS_AS(adjoint_representation(perturbed), InputError);

  // The adjoint of an abelian algebra is the zero representation.
  HomLieAntialgebra abelian(1, 1, Tensor3(1, 1, 1), Tensor3(1, 1, 1), Tensor3(1, 1, 1),
                            Matrix::identity(1), Matrix::identity(1));
  Representation rho = adjoint_representation(abelian);
  CHECK(rho.rho0_even(0).is_zero());
  CHECK(rho.rho0_odd(0).is_zero());
  CHECK(rho.rho1_up(0).is_zero());
  CHECK(rho.rho1_down(0).is_zero());
}

TEST_CASE("trivial representation passes with arbitrary module twists") {
  HomLieAntialgebra a = twisted_k1(Rational(2));
  HomModule module{2, 1, Matrix(2, 2, {2, 1, 0, 3}), Matrix(1, 1, {7})};
  Representation rho = trivial_representation(a, module);
  CHECK(check_representation(a, rho).ok());
  CHECK(rho.rho0_even(0).is_zero());

  // Direct sum with an abelian ideal is still an algebra.
  CHECK(check_axioms(semidirect(a, rho)).ok());
}

TEST_CASE("scaling one rho1_down entry breaks exactly the bracket identities") {
  HomLieAntialgebra a = k1();
  Representation rho = adjoint_representation(a);
  Representation broken = with_rho1_down(rho, 0, rho.rho1_down(0).scaled(Rational(2)));

  IdentityReport report = check_representation(a, broken);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.passes("rep06"));
  CHECK_FALSE(report.passes("rep07"));
  CHECK(report.passes("rep01"));
  CHECK(report.passes("rep02"));

  // rep06 on (f1, f2) acting on e: 1/2 e vs 3/4 e.
  bool found = false;
  for (const auto& v : report.violations()) {
    if (v.identity == "rep06" && v.tuple == std::vector<int>{0, 1, 0}) {
      found = true;
      CHECK(v.residual == Vec{Q("-1/4")});
    }
  }
  CHECK(found);
}

TEST_CASE("semidirect with the zero module returns the base algebra") {
  HomLieAntialgebra a = twisted_k1(Rational(3));
  HomModule empty{0, 0, Matrix(0, 0), Matrix(0, 0)};
  CHECK(semidirect(a, trivial_representation(a, empty)) == a);
}

TEST_CASE("semidirect of k1 with its adjoint is a 2|4 algebra passing the axioms") {
  HomLieAntialgebra a = k1();
  HomLieAntialgebra big = semidirect(a, adjoint_representation(a));
  CHECK(big.even_dim() == 2);
  CHECK(big.odd_dim() == 4);
  CHECK(check_axioms(big).ok());
  CHECK(check_multiplicative(big).ok());
}

TEST_CASE("the module embeds as an abelian ideal of the semidirect product") {
  HomLieAntialgebra a = twisted_k1(Rational(2));
  HomLieAntialgebra big = semidirect(a, adjoint_representation(a));
  const int p = a.even_dim(), q = a.odd_dim();
  const int P = big.even_dim(), Q = big.odd_dim();

  // Products of two module vectors vanish.
  for (int m = p; m < P; ++m)
    for (int n = p; n < P; ++n)
      CHECK(vec_is_zero(big.prod_ee(basis_vec(P, m), basis_vec(P, n))));
  for (int m = p; m < P; ++m)
    for (int n = q; n < Q; ++n)
      CHECK(vec_is_zero(big.prod_eo(basis_vec(P, m), basis_vec(Q, n))));
  for (int m = q; m < Q; ++m)
    for (int n = q; n < Q; ++n)
      CHECK(vec_is_zero(big.bracket(basis_vec(Q, m), basis_vec(Q, n))));

  // Products of a base vector with a module vector stay inside the module.
  for (int i = 0; i < p; ++i)
    for (int m = p; m < P; ++m) {
      Vec prod = big.prod_ee(basis_vec(P, i), basis_vec(P, m));
      for (int k = 0; k < p; ++k) CHECK(prod[static_cast<size_t>(k)].is_zero());
    }
  for (int i = 0; i < q; ++i)
    for (int n = q; n < Q; ++n) {
      Vec bk = big.bracket(basis_vec(Q, i), basis_vec(Q, n));
      for (int k = 0; k < p; ++k) CHECK(bk[static_cast<size_t>(k)].is_zero());
    }
}

TEST_CASE("semidirect axioms mirror the representation verdict, both directions") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<long> entry(-3, 3);

  for (const char* s : {"1", "3", "1/5"}) {
    HomLieAntialgebra a = twisted_k1(Q(s));
    CAPTURE(s);

    // Valid side: adjoint and trivial representations.
    Representation adj = adjoint_representation(a);
    CHECK(check_representation(a, adj).ok());
    CHECK(check_axioms(semidirect(a, adj)).ok());

    HomModule module{1, 1, Matrix(1, 1, {Q(s)}), Matrix(1, 1, {3})};
    Representation triv = trivial_representation(a, module);
    CHECK(check_representation(a, triv).ok());
    CHECK(check_axioms(semidirect(a, triv)).ok());

    // Invalid side: random perturbations of the adjoint.
    for (int trial = 0; trial < 6; ++trial) {
      Matrix perturbed = adj.rho1_down(trial % 2);
      Rational bump(entry(rng), 1);
      perturbed.at(0, (trial + 1) % 2) += bump + Rational(1, 7);
      Representation broken = with_rho1_down(adj, trial % 2, std::move(perturbed));
      bool rep_ok = check_representation(a, broken).ok();
      bool alg_ok = check_axioms(semidirect(a, broken)).ok();
      CHECK(rep_ok == alg_ok);
      CHECK_FALSE(alg_ok);
    }
  }
}

TEST_CASE("shape validation") {
  HomLieAntialgebra a = k1();
  HomModule module{1, 1, Matrix::identity(1), Matrix::identity(1)};

  // rho1_up with the wrong shape.
  std::vector<Matrix> r0e{Matrix(1, 1)}, r0o{Matrix(1, 1)};
  std::vector<Matrix> bad_up{Matrix(2, 1), Matrix(2, 1)}, r1d{Matrix(1, 1), Matrix(1, 1)};
  CHECK_THROWS_AS(Representation(module, r0e, r0o, bad_up, r1d), InputError);

  // Algebra with mismatched dimensions.
  Representation rho = trivial_representation(a, module);
  HomLieAntialgebra small(1, 1, Tensor3(1, 1, 1), Tensor3(1, 1, 1), Tensor3(1, 1, 1),
                          Matrix::identity(1), Matrix::identity(1));
  CHECK_THROWS_AS(check_representation(small, rho), InputError);
  CHECK_THROWS_AS(semidirect(small, rho), InputError);
}
