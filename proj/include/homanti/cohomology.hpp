#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homanti/cochain.hpp"

// The coboundary operator d = d_{1,0} + d_{0,1} + d_{-1,2}, its matrix per
// degree over admissible bases, cocycle/coboundary predicates, and cohomology
// dimensions with a two-prime modular cross-check.
//
// Conventions used throughout:
//   - value parity of a (m, n) block is n mod 2;
//   - the twist powers inside d use the source degree k = m + n;
//   - d_{-1,2} vanishes on blocks with m = 0;
//   - degree-0 cochains are not modeled, so the space of 1-coboundaries is 0.

namespace homanti {

// Signatures with m + n = k and nonzero raw dimension, ordered by ascending
// odd argument count.
std::vector<CochainSignature> degree_signatures(const HomLieAntialgebra& a,
                                                const Representation& rho, int k);

// Image of one block under the full coboundary, as a degree-(k+1) sum.
// Pure formula application; admissibility of the input is not required here.
CochainSum apply_d(const HomLieAntialgebra& a, const Representation& rho, const Cochain& f);
CochainSum apply_d(const HomLieAntialgebra& a, const Representation& rho, const CochainSum& f);

// The degree-2 coboundary evaluated through the four hand-coded component
// formulas (targets (3,0), (2,1), (1,2), (0,3)) instead of the general
// branches; used as an independent cross-check of apply_d.
CochainSum apply_d2_explicit(const HomLieAntialgebra& a, const Representation& rho,
                             const CochainSum& f);

struct BlockBasis {
  CochainSignature sig;
  std::vector<Cochain> basis;  // admissible basis of this block
};

// Matrix of d^k : C^k -> C^{k+1} over admissible bases on both sides.
struct CochainComplexSlice {
  int k = 0;
  std::vector<BlockBasis> source;  // blocks of degree k, ascending n
  std::vector<BlockBasis> target;  // blocks of degree k+1, ascending n
  Matrix d;                        // target_dim() x source_dim()

  long source_dim() const;
  long target_dim() const;
};

// Assembles d^k over the admissible bases. Requires k >= 1 and a
// multiplicative algebra; the image of every source basis vector is solved
// into the target admissible basis, which asserts that d preserves
// admissibility (an unsolvable image reports non-equivariant coefficients).
CochainComplexSlice assemble_d(const HomLieAntialgebra& a, const Representation& rho, int k);

// True iff the coboundary of f vanishes exactly. f must be admissible.
bool is_cocycle(const HomLieAntialgebra& a, const Representation& rho, const CochainSum& f);

// Solves d(g) = f over the admissible basis of degree k-1 and verifies the
// witness by substitution; empty when f is not a coboundary. For degree-1
// input the witness space is zero, so only f = 0 has a (zero) witness.
// f must be admissible.
std::optional<CochainSum> is_coboundary(const HomLieAntialgebra& a, const Representation& rho,
                                        const CochainSum& f);

struct ModularCheck {
  std::uint64_t prime = 0;
  // Ranks of the same matrices reduced mod prime; absent when a denominator
  // is divisible by the prime. A modular rank can fall below the exact rank
  // on unlucky primes, never above (enforced internally).
  std::optional<int> rank_prev;
  std::optional<int> rank_k;
  bool agrees = false;  // all defined modular ranks equal the exact ones
};

struct CohomologyReport {
  int k = 0;
  long admissible_dim = 0;  // dim of admissible C^k
  long rank_prev = 0;       // rank of d^{k-1} (0 when k = 1)
  long kernel_dim = 0;      // dim ker d^k
  long h_dim = 0;           // kernel_dim - rank_prev
  std::vector<ModularCheck> modular;
};

// Full degree-k computation. Requires k >= 1 and a multiplicative algebra.
CohomologyReport cohomology_report(const HomLieAntialgebra& a, const Representation& rho, int k);
long cohomology_dim(const HomLieAntialgebra& a, const Representation& rho, int k);

// Degree-2 sums in product coordinates: the (2,0) block stores one half of
// omega0, the (1,1) block omega1 (even argument first), and the (0,2) block
// omega2 on increasing pairs. omega_from_cochain inverts this, restoring
// omega0 = 2 f(2,0) and antisymmetrizing omega2.
CochainSum cochain_from_omega(const HomLieAntialgebra& a, const Representation& rho,
                              const OmegaTriple& omega);
OmegaTriple omega_from_cochain(const HomLieAntialgebra& a, const Representation& rho,
                               const CochainSum& f);

}  // namespace homanti
