#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "homanti/examples.hpp"
#include "homanti/extensions.hpp"

using namespace homanti;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

CochainSum random_admissible(const HomLieAntialgebra& a, const Representation& rho, int k,
                             std::mt19937_64& rng) {
  CochainSum out(k);
  for (const CochainSignature& sig : degree_signatures(a, rho, k))
    for (const Cochain& b : admissible_basis(a, rho, sig)) out.add_scaled(b, small_rational(rng));
  return out;
}

OmegaTriple zero_omega(const HomLieAntialgebra& a, const Representation& rho) {
  const int p = a.even_dim(), q = a.odd_dim();
  const int r = rho.module().even_dim, s = rho.module().odd_dim;
  return OmegaTriple{Tensor3(p, p, r), Tensor3(p, q, s), Tensor3(q, q, r)};
}

// Degree-1 sum built from explicit component matrices.
CochainSum one_cochain(const HomLieAntialgebra& a, const Representation& rho, const Matrix& f0,
                       const Matrix& f1) {
  CochainSum out(1);
  Cochain h10 = zero_cochain(a, rho, CochainSignature{1, 0});
  for (int i = 0; i < a.even_dim(); ++i)
    for (int k = 0; k < rho.module().even_dim; ++k) h10.coeff(i, 0, k) = f0.at(k, i);
  if (h10.flat_dim() > 0) out.add(h10);
  Cochain h01 = zero_cochain(a, rho, CochainSignature{0, 1});
  for (int j = 0; j < a.odd_dim(); ++j)
    for (int k = 0; k < rho.module().odd_dim; ++k) h01.coeff(0, j, k) = f1.at(k, j);
  if (h01.flat_dim() > 0) out.add(h01);
  return out;
}

HomLieAntialgebra abelian_12() {
  return HomLieAntialgebra(1, 2, Tensor3(1, 1, 1), Tensor3(1, 2, 2), Tensor3(2, 2, 1),
                           Matrix::identity(1), Matrix::identity(2));
}

HomModule trivial_module_11() {
  return HomModule{1, 1, Matrix::identity(1), Matrix::identity(1)};
}

}  // namespace

TEST_CASE("a zero cochain gives back the semidirect product") {
  HomLieAntialgebra a = k1();
  Representation rho = adjoint_representation(a);
  CHECK(extension_from_cocycle(a, rho, zero_omega(a, rho)) == semidirect(a, rho));
}

TEST_CASE("coboundaries build extensions that satisfy the axioms") {
  std::mt19937_64 rng(112233);
  HomLieAntialgebra a = k1();
  Representation rho = adjoint_representation(a);
  for (int trial = 0; trial < 5; ++trial) {
    const CochainSum h = random_admissible(a, rho, 1, rng);
    const OmegaTriple omega = omega_from_cochain(a, rho, apply_d(a, rho, h));
    const HomLieAntialgebra ext = extension_from_cocycle(a, rho, omega);
    CHECK(check_axioms(ext).ok());
    CHECK(check_multiplicative(ext).ok());
  }
}

TEST_CASE("extension axioms hold exactly when the cochain is a cocycle") {
  std::mt19937_64 rng(445566);
  int passed = 0, failed = 0;
  for (const Rational& mu : {Rational(1), Rational(3)}) {
    HomLieAntialgebra a = mu == Rational(1) ? k1() : twisted_k1(mu);
    Representation rho = adjoint_representation(a);
    for (int trial = 0; trial < 12; ++trial) {
      CochainSum f = random_admissible(a, rho, 2, rng);
      if (trial % 2 == 0) {
        // Half the samples are shifted onto actual cocycles.
        f = apply_d(a, rho, random_admissible(a, rho, 1, rng));
      }
      const OmegaTriple omega = omega_from_cochain(a, rho, f);
      const HomLieAntialgebra ext = extension_from_cocycle(a, rho, omega);
      const bool cocycle = is_cocycle(a, rho, f);
      CHECK(check_axioms(ext).ok() == cocycle);
      (cocycle ? passed : failed)++;
    }
  }
  CHECK(passed >= 12);
  CHECK(failed >= 6);
}

TEST_CASE("extension construction refuses bad inputs") {
  HomLieAntialgebra a = twisted_k1(3);
  Representation rho = adjoint_representation(a);

  // Inadmissible omega: couples mismatched beta eigenvalues.
  OmegaTriple bad = zero_omega(a, rho);
  bad.omega1.at(0, 0, 1) = Q("1");
  CHECK_FALSE(is_admissible(a, rho, cochain_from_omega(a, rho, bad)));
  CHECK_THROWS_AS(extension_from_cocycle(a, rho, bad), InputError);

  // Invalid representation.
  std::vector<Matrix> r0e{rho.rho0_even(0)}, r0o{rho.rho0_odd(0)};
  std::vector<Matrix> r1u{rho.rho1_up(0), rho.rho1_up(1)};
  std::vector<Matrix> r1d{rho.rho1_down(0).scaled(Q("2")), rho.rho1_down(1)};
  Representation broken(rho.module(), r0e, r0o, r1u, r1d);
  REQUIRE_FALSE(check_representation(a, broken).ok());
  CHECK_THROWS_AS(extension_from_cocycle(a, broken, zero_omega(a, broken)), InputError);
}

TEST_CASE("the canonical section of a semidirect product extracts zero") {
  HomLieAntialgebra a = k1();
  Representation rho = adjoint_representation(a);
  const HomLieAntialgebra big = semidirect(a, rho);
  const auto [sigma0, sigma1] = canonical_section(big, 1, 2);
  const ExtensionDatum datum = extract_cocycle(big, trailing_fiber(big, 1, 2), sigma0, sigma1);

  CHECK(datum.base == a);
  CHECK(datum.rep == rho);
  const OmegaTriple zero = zero_omega(a, rho);
  CHECK(datum.omega.omega0 == zero.omega0);
  CHECK(datum.omega.omega1 == zero.omega1);
  CHECK(datum.omega.omega2 == zero.omega2);
}

TEST_CASE("extraction round trip recovers omega exactly") {
  std::mt19937_64 rng(778899);
  for (const Rational& mu : {Rational(1), Rational(3)}) {
    HomLieAntialgebra a = mu == Rational(1) ? k1() : twisted_k1(mu);
    Representation rho = adjoint_representation(a);
    for (int trial = 0; trial < 4; ++trial) {
      const CochainSum f = random_admissible(a, rho, 2, rng);
      const OmegaTriple omega = omega_from_cochain(a, rho, f);
      const HomLieAntialgebra big = extension_from_cocycle(a, rho, omega);
      const auto [sigma0, sigma1] = canonical_section(big, 1, 2);
      const ExtensionDatum datum =
          extract_cocycle(big, trailing_fiber(big, 1, 2), sigma0, sigma1);

      CHECK(datum.base == a);
      CHECK(datum.rep == rho);
      CHECK(datum.omega.omega0 == omega.omega0);
      CHECK(datum.omega.omega1 == omega.omega1);
      CHECK(datum.omega.omega2 == omega.omega2);
    }
  }
}

TEST_CASE("shifting the section shifts the cochain by a coboundary") {
  std::mt19937_64 rng(101112);
  HomLieAntialgebra a = k1();
  Representation rho = adjoint_representation(a);
  const int p = a.even_dim(), q = a.odd_dim();
  const int r = rho.module().even_dim, s = rho.module().odd_dim;

  const CochainSum f = apply_d(a, rho, random_admissible(a, rho, 1, rng));
  const OmegaTriple omega = omega_from_cochain(a, rho, f);
  const HomLieAntialgebra big = extension_from_cocycle(a, rho, omega);
  auto [sigma0, sigma1] = canonical_section(big, r, s);

  for (int trial = 0; trial < 4; ++trial) {
    Matrix f0(r, p), f1(s, q);
    for (int u = 0; u < r; ++u)
      for (int i = 0; i < p; ++i) f0.at(u, i) = small_rational(rng);
    for (int w = 0; w < s; ++w)
      for (int j = 0; j < q; ++j) f1.at(w, j) = small_rational(rng);

    Matrix shifted0 = sigma0, shifted1 = sigma1;
    for (int u = 0; u < r; ++u)
      for (int i = 0; i < p; ++i) shifted0.at(p + u, i) = f0.at(u, i);
    for (int w = 0; w < s; ++w)
      for (int j = 0; j < q; ++j) shifted1.at(q + w, j) = f1.at(w, j);

    const ExtensionDatum datum =
        extract_cocycle(big, trailing_fiber(big, r, s), shifted0, shifted1);
    CHECK(datum.base == a);

    // omega' - omega corresponds to d(h) with h built from the shift.
    OmegaTriple delta = datum.omega;
    // Compare as cochains: (omega' - omega) adapter = d(h).
    CochainSum lhs = cochain_from_omega(a, rho, delta);
    lhs.add_scaled(cochain_from_omega(a, rho, omega), Rational(-1));
    CochainSum rhs = apply_d(a, rho, one_cochain(a, rho, f0, f1));
    lhs.add_scaled(rhs, Rational(-1));
    CHECK(lhs.is_zero());

    // The two extracted cocycles are equivalent, with a verified witness.
    const auto witness = check_equivalence(a, rho, omega, datum.omega);
    REQUIRE(witness.has_value());
  }
}

TEST_CASE("equivalent cocycles produce a verified witness") {
  std::mt19937_64 rng(131415);
  HomLieAntialgebra a = twisted_k1(3);
  Representation rho = adjoint_representation(a);

  const CochainSum f = apply_d(a, rho, random_admissible(a, rho, 1, rng));
  const OmegaTriple omega = omega_from_cochain(a, rho, f);

  // Identical inputs: the zero witness.
  const auto same = check_equivalence(a, rho, omega, omega);
  REQUIRE(same.has_value());
  CHECK(same->f0.is_zero());
  CHECK(same->f1.is_zero());

  // Shift by another coboundary: some witness, verified internally.
  const CochainSum h = random_admissible(a, rho, 1, rng);
  CochainSum g = f;
  g.add_scaled(apply_d(a, rho, h), Rational(1));
  const OmegaTriple omega_prime = omega_from_cochain(a, rho, g);
  const auto witness = check_equivalence(a, rho, omega, omega_prime);
  REQUIRE(witness.has_value());

  // Non-cocycle input is refused.
  OmegaTriple not_cocycle = omega;
  not_cocycle.omega0.at(0, 0, 0) = not_cocycle.omega0.at(0, 0, 0) + Q("1");
  if (!is_cocycle(a, rho, cochain_from_omega(a, rho, not_cocycle)))
    CHECK_THROWS_AS(check_equivalence(a, rho, omega, not_cocycle), InputError);
}

TEST_CASE("cocycles in different classes are inequivalent") {
  // Zero products and zero actions: d vanishes, so distinct cocycles are
  // never equivalent.
  HomLieAntialgebra a = abelian_12();
  Representation rho = trivial_representation(a, trivial_module_11());

  OmegaTriple omega = zero_omega(a, rho);
  omega.omega2.at(0, 1, 0) = Q("1");
  omega.omega2.at(1, 0, 0) = Q("-1");
  REQUIRE(is_cocycle(a, rho, cochain_from_omega(a, rho, omega)));

  CHECK_FALSE(check_equivalence(a, rho, omega, zero_omega(a, rho)).has_value());
}

TEST_CASE("extraction refuses malformed sections and non-ideal fibers") {
  HomLieAntialgebra a = k1();
  Representation rho = adjoint_representation(a);
  const HomLieAntialgebra big = semidirect(a, rho);
  const auto [sigma0, sigma1] = canonical_section(big, 1, 2);
  const FiberIndices fiber = trailing_fiber(big, 1, 2);

  // Wrong shapes.
  CHECK_THROWS_AS(extract_cocycle(big, fiber, Matrix(2, 2), sigma1), InputError);
  // Not a right inverse.
  CHECK_THROWS_AS(extract_cocycle(big, fiber, Matrix(2, 1), sigma1), InputError);
  // The base copy is not an abelian fiber.
  FiberIndices base_as_fiber;
  base_as_fiber.even = {0};
  base_as_fiber.odd = {0, 1};
  Matrix tau0(2, 1), tau1(4, 2);
  tau0.at(1, 0) = Q("1");
  tau1.at(2, 0) = Q("1");
  tau1.at(3, 1) = Q("1");
  CHECK_THROWS_AS(extract_cocycle(big, base_as_fiber, tau0, tau1), InputError);

  // A twist that moves the fiber out of itself.
  Tensor3 zero_mu(2, 2, 2);
  HomLieAntialgebra skew(2, 0, zero_mu, Tensor3(2, 0, 0), Tensor3(0, 0, 2),
                         Matrix(2, 2, {1, 1, 0, 1}), Matrix(0, 0));
  FiberIndices skew_fiber;
  skew_fiber.even = {1};
  Matrix tau(2, 1);
  tau.at(0, 0) = Q("1");
  CHECK_THROWS_AS(extract_cocycle(skew, skew_fiber, tau, Matrix(0, 0)), InputError);
}

TEST_CASE("classification report for k1 with adjoint coefficients") {
  HomLieAntialgebra a = k1();
  Representation rho = adjoint_representation(a);
  const H2ClassificationReport report = h2_classification_report(a, rho);
  CHECK(report.cohomology.h_dim == 0);
  CHECK(report.representatives.empty());
  for (const ModularCheck& mc : report.cohomology.modular) CHECK(mc.agrees);
}

TEST_CASE("classification report on an abelian base with trivial coefficients") {
  HomLieAntialgebra a = abelian_12();
  Representation rho = trivial_representation(a, trivial_module_11());
  const H2ClassificationReport report = h2_classification_report(a, rho);

  // d vanishes identically, so H^2 is the whole admissible space.
  CHECK(report.cohomology.h_dim == 4);
  REQUIRE(report.representatives.size() == 4);
  for (const H2Representative& item : report.representatives) {
    CHECK(is_cocycle(a, rho, cochain_from_omega(a, rho, item.omega)));
    CHECK(item.realizable);
    REQUIRE(item.extension_axioms.has_value());
    CHECK(item.extension_axioms->ok());
  }
}

TEST_CASE("representatives with a non-symmetric even component are flagged") {
  // Two even directions, zero products, coefficients in a 1|0 module: the
  // kernel basis contains the two off-diagonal (2,0) cochains, whose
  // product-coordinate form is not symmetric.
  HomLieAntialgebra a(2, 0, Tensor3(2, 2, 2), Tensor3(2, 0, 0), Tensor3(0, 0, 2),
                      Matrix::identity(2), Matrix(0, 0));
  HomModule module{1, 0, Matrix::identity(1), Matrix(0, 0)};
  Representation rho = trivial_representation(a, module);

  const H2ClassificationReport report = h2_classification_report(a, rho);
  CHECK(report.cohomology.h_dim == 4);
  REQUIRE(report.representatives.size() == 4);
  int realizable = 0, flagged = 0;
  for (const H2Representative& item : report.representatives) {
    if (item.realizable) {
      ++realizable;
      REQUIRE(item.extension_axioms.has_value());
      CHECK(item.extension_axioms->ok());
    } else {
      ++flagged;
      CHECK_FALSE(item.extension_axioms.has_value());
    }
    CHECK(is_cocycle(a, rho, cochain_from_omega(a, rho, item.omega)));
  }
  CHECK(realizable == 2);
  CHECK(flagged == 2);
}
