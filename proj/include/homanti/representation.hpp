#pragma once

#include <vector>

#include "homanti/algebra.hpp"

// Representations on a graded module (V0 of dimension r with twist alphaV,
// V1 of dimension s with twist betaV). The even part of the algebra acts
// within each graded piece (rho0_even on V0, rho0_odd on V1); the odd part
// swaps them (rho1_up: V0 -> V1, rho1_down: V1 -> V0). One matrix is stored
// per algebra basis element, so linearity in the algebra slot is structural.

namespace homanti {

struct HomModule {
  int even_dim = 0;  // r
  int odd_dim = 0;   // s
  Matrix alphaV;     // r x r
  Matrix betaV;      // s x s

  friend bool operator==(const HomModule& a, const HomModule& b) = default;
};

class Representation {
 public:
  // Validates all shapes against the module and the implied algebra
  // dimensions p = |rho0_*|, q = |rho1_*|.
  Representation(HomModule module, std::vector<Matrix> rho0_even,
                 std::vector<Matrix> rho0_odd, std::vector<Matrix> rho1_up,
                 std::vector<Matrix> rho1_down);

  const HomModule& module() const { return module_; }
  int algebra_even_dim() const { return static_cast<int>(rho0_even_.size()); }
  int algebra_odd_dim() const { return static_cast<int>(rho1_up_.size()); }

  const Matrix& rho0_even(int i) const { return rho0_even_[static_cast<size_t>(i)]; }
  const Matrix& rho0_odd(int i) const { return rho0_odd_[static_cast<size_t>(i)]; }
  const Matrix& rho1_up(int j) const { return rho1_up_[static_cast<size_t>(j)]; }
  const Matrix& rho1_down(int j) const { return rho1_down_[static_cast<size_t>(j)]; }

  // Action matrices for a general algebra element (linear combination of the
  // per-basis matrices with the element's coordinates).
  Matrix rho0_even_of(const Vec& x) const;
  Matrix rho0_odd_of(const Vec& x) const;
  Matrix rho1_up_of(const Vec& y) const;
  Matrix rho1_down_of(const Vec& y) const;

  friend bool operator==(const Representation& a, const Representation& b) = default;

 private:
  HomModule module_;
  std::vector<Matrix> rho0_even_, rho0_odd_, rho1_up_, rho1_down_;
};

// 2-cochain value tensors in product coordinates: omega0 (p x p x r,
// values in V0), omega1 (p x q x s, values in V1), omega2 (q x q x r,
// values in V0, antisymmetric in its first two indices).
struct OmegaTriple {
  Tensor3 omega0, omega1, omega2;
};

// The seven defining identities rep01..rep07, evaluated on every basis tuple
// (algebra indices plus one module basis index); exact residuals.
IdentityReport check_representation(const HomLieAntialgebra& a, const Representation& rho);

// V = the algebra itself: even elements act by the products, odd elements by
// u |-> u*y on V0 and w |-> [y,w] on V1. Requires check_axioms and
// check_multiplicative to pass.
Representation adjoint_representation(const HomLieAntialgebra& a);

// All-zero actions on the given module; passes check_representation for any
// module twists.
Representation trivial_representation(const HomLieAntialgebra& a, HomModule module);

// Algebra on (a0 + V0 | a1 + V1), base coordinates first, with twist maps
// (alpha + alphaV, beta + betaV). The omega overload adds the triple's values
// to the three mixed products; omega0 must be symmetric and omega2
// antisymmetric for the result to be constructible. No representation
// identities are assumed: the output's check_axioms verdict mirrors
// check_representation(a, rho).
HomLieAntialgebra semidirect(const HomLieAntialgebra& a, const Representation& rho);
HomLieAntialgebra semidirect(const HomLieAntialgebra& a, const Representation& rho,
                             const OmegaTriple& omega);

// Shape validation for an omega triple against algebra and module dimensions.
void validate_omega_shapes(const HomLieAntialgebra& a, const HomModule& module,
                           const OmegaTriple& omega);

}  // namespace homanti
