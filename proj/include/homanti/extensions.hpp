#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homanti/cohomology.hpp"

// Abelian extensions: building an extension algebra from a degree-2 cochain
// in product coordinates, extracting the cochain back out of a concrete
// extension through a section, and deciding equivalence of two extensions by
// solving the degree-1 coboundary equation.
//
// Extensions are concrete: an algebra on (base even + fiber even | base odd +
// fiber odd) whose fiber is an abelian ideal invariant under the twists. The
// product-coordinate triple (omega0, omega1, omega2) corresponds to the
// degree-2 cochain (omega0 / 2, omega1, omega2); that rescaling lives in
// cochain_from_omega / omega_from_cochain and nowhere else.

namespace homanti {

struct ExtensionDatum {
  HomLieAntialgebra base;
  HomModule fiber;
  Representation rep;
  OmegaTriple omega;
};

// Components of a degree-1 cochain relating two equivalent extensions; the
// induced block map (identity on base and fiber, f feeding base into fiber)
// is a verified homomorphism between the two extension algebras.
struct EquivalenceWitness {
  Matrix f0;  // fiber-even x base-even
  Matrix f1;  // fiber-odd x base-odd
};

// Positions of the fiber inside a concrete extension's coordinates, one list
// per parity, strictly increasing. The base occupies the complement.
struct FiberIndices {
  std::vector<int> even;
  std::vector<int> odd;
};

// The fiber placed on the trailing coordinates, as extension_from_cocycle
// lays it out.
FiberIndices trailing_fiber(const HomLieAntialgebra& big, int fiber_even, int fiber_odd);

// The splitting section adapted to a trailing fiber: identity on the base
// coordinates, zero on the fiber. Returns (sigma0, sigma1).
std::pair<Matrix, Matrix> canonical_section(const HomLieAntialgebra& big, int fiber_even,
                                            int fiber_odd);

// Extension algebra defined by the representation and the product-coordinate
// triple. Requires a valid representation and an omega that is admissible as
// a degree-2 cochain; the result passes check_axioms exactly when that
// cochain is a cocycle (no axiom gate is applied here).
HomLieAntialgebra extension_from_cocycle(const HomLieAntialgebra& base,
                                         const Representation& rho, const OmegaTriple& omega);

// Reads an extension off a concrete algebra: quotient base on the complement
// coordinates, fiber module with the restricted twists, induced
// representation through the section, and the cochain measuring the
// section's failure to split. Requires a section with projection-inverse
// shape, a fiber that is an abelian twist-invariant ideal, and an extracted
// omega that is admissible.
ExtensionDatum extract_cocycle(const HomLieAntialgebra& big, const FiberIndices& fiber,
                               const Matrix& sigma0, const Matrix& sigma1);

// Decides whether two cocycles give equivalent extensions: solves
// omega - omega_prime = d(f) over admissible degree-1 cochains. On success
// the block map built from f is checked to be a homomorphism from the
// omega-extension to the omega_prime-extension. Both inputs must be
// cocycles. Empty result = inequivalent.
std::optional<EquivalenceWitness> check_equivalence(const HomLieAntialgebra& base,
                                                    const Representation& rho,
                                                    const OmegaTriple& omega,
                                                    const OmegaTriple& omega_prime);

struct H2Representative {
  OmegaTriple omega;
  // An extension algebra needs a symmetric omega0; representatives from the
  // kernel basis can fail that even though their class is nonzero.
  bool realizable = false;
  std::optional<IdentityReport> extension_axioms;  // present when realizable
};

struct H2ClassificationReport {
  CohomologyReport cohomology;  // degree-2 report with the modular checks
  std::vector<H2Representative> representatives;
};

// Classification of abelian extensions by the degree-2 cohomology: kernel
// basis vectors independent modulo the degree-1 image, one representative
// per class. Requires a multiplicative base.
H2ClassificationReport h2_classification_report(const HomLieAntialgebra& base,
                                                const Representation& rho);

}  // namespace homanti
