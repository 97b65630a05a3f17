#pragma once

#include <vector>

#include "homanti/cohomology.hpp"
#include "homanti/representation.hpp"

// First-order deformations with coefficients in the algebra itself. A
// deformation direction is an OmegaTriple whose value space is the algebra
// (omega0: p x p x p symmetric, omega1: p x q x q, omega2: q x q x p
// antisymmetric); deform adds t times the direction to the structure tensors
// and keeps the twists.
//
// check_infinitesimal splits the first-order condition in two:
//   (i)  the triple's own products form an algebra for the same twists
//        (self_axioms) and respect them (self_multiplicative);
//   (ii) the associated degree-2 cochain lies in the kernel of d.
// It also deforms at t in {1, -1, 2, 1/3} and interpolates every axiom
// residual as a polynomial in t. The fit must have no constant or cubic
// part, its linear part vanishes exactly when (ii) holds, and its quadratic
// part exactly when the self products pass; any disagreement between the fit
// and the direct verdicts raises InternalError. Passing both conditions is
// therefore equivalent to the deformed algebra satisfying the axioms for
// every t, not only the sampled ones.

namespace homanti {

struct NijenhuisCandidate {
  Matrix phi0;  // p x p
  Matrix phi1;  // q x q
};

struct InfinitesimalReport {
  IdentityReport self_axioms;          // condition (i): the triple's own products
  IdentityReport self_multiplicative;  // condition (i): the triple against the twists
  bool cocycle = false;                // condition (ii)
  std::vector<Rational> t_samples;
  bool deformed_axioms_ok = false;  // deform(a, omega, t) passes at every sample

  bool condition_i() const { return self_axioms.ok() && self_multiplicative.ok(); }
  bool ok() const { return condition_i() && cocycle; }
};

struct NijenhuisReport {
  IdentityReport identities;    // nij01, nij02, nij03 on all basis pairs
  IdentityReport twist_compat;  // nij-even-twist, nij-odd-twist; a distinct verdict

  bool ok() const { return identities.ok() && twist_compat.ok(); }
};

struct TrivialityReport {
  std::vector<Rational> t_samples;
  std::vector<IdentityReport> morphism;  // id + t*phi: deform(a, omega, t) -> a

  bool ok() const;
};

// Structure tensors perturbed by t * omega, same twists. Throws InputError on
// shape mismatch (and, via the algebra constructor, when the perturbed mu or
// br loses its symmetry).
HomLieAntialgebra deform(const HomLieAntialgebra& a, const OmegaTriple& omega,
                         const Rational& t);

// Requires a to pass check_axioms and check_multiplicative.
InfinitesimalReport check_infinitesimal(const HomLieAntialgebra& a, const OmegaTriple& omega);

// Evaluates the three Nijenhuis identities on all basis pairs, plus
// commutation of phi with the twists as a separate report.
NijenhuisReport is_nijenhuis(const HomLieAntialgebra& a, const NijenhuisCandidate& phi);

// The deformation direction generated by a Nijenhuis operator:
//   omega0(x1, x2) = x1*phi0(x2) + phi0(x1)*x2 - phi0(x1*x2)
// and its two companions. Requires is_nijenhuis to pass (both reports).
OmegaTriple deformation_from_nijenhuis(const HomLieAntialgebra& a,
                                       const NijenhuisCandidate& phi);

// For each sampled t, checks that id + t*phi is a homomorphism from
// deform(a, omega, t) to a (twist intertwining included). Failures are
// verdicts in the per-sample reports, not errors.
TrivialityReport verify_trivial(const HomLieAntialgebra& a, const OmegaTriple& omega,
                                const NijenhuisCandidate& phi,
                                const std::vector<Rational>& t_samples);

}  // namespace homanti
