#pragma once

#include <string>
#include <vector>

#include "homanti/matrix.hpp"

// The Z2-graded algebra model: an even space of dimension p and an odd space
// of dimension q, a commutative product on the even part (mu), an even-on-odd
// action (nu), an anticommutative odd bracket with even values (br), and a
// pair of twist maps (alpha on the even part, beta on the odd part).
//
// Identity names used in reports:
//   hanti01..hanti04   the four defining identities
//   mult-ee/eo/oo      multiplicativity of (alpha, beta)
//   homo-*             the five morphism identities

namespace homanti {

// Cubical array of rationals, row-major in (i, j, k).
class Tensor3 {
 public:
  Tensor3() : d1_(0), d2_(0), d3_(0) {}
  Tensor3(int d1, int d2, int d3);

  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  int dim3() const { return d3_; }

  Rational& at(int i, int j, int k) {
    return e_[(static_cast<size_t>(i) * d2_ + j) * d3_ + k];
  }
  const Rational& at(int i, int j, int k) const {
    return e_[(static_cast<size_t>(i) * d2_ + j) * d3_ + k];
  }

  // Contraction over the third index: result[k] = sum_{i,j} u[i] v[j] t[i][j][k].
  Vec contract(const Vec& u, const Vec& v) const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

 private:
  int d1_, d2_, d3_;
  std::vector<Rational> e_;
};

struct Violation {
  std::string identity;       // which identity failed
  std::vector<int> tuple;     // basis indices it failed on
  Vec residual;               // exact nonzero residual vector
};

class IdentityReport {
 public:
  void note_identity(const std::string& name) { identities_.push_back(name); }
  void add_violation(Violation v) { violations_.push_back(std::move(v)); }

  bool ok() const { return violations_.empty(); }
  bool passes(const std::string& identity) const;

  const std::vector<std::string>& identities() const { return identities_; }
  const std::vector<Violation>& violations() const { return violations_; }

  // One line per identity: "<name>: pass" or "<name>: fail (n tuples)".
  std::string summary() const;

 private:
  std::vector<std::string> identities_;
  std::vector<Violation> violations_;
};

class HomLieAntialgebra {
 public:
  // Validates shapes, symmetry of mu in its first two indices, and
  // antisymmetry of br in its first two indices; throws InputError otherwise.
  // Violations are rejected, never repaired.
  HomLieAntialgebra(int even_dim, int odd_dim, Tensor3 mu, Tensor3 nu, Tensor3 br,
                    Matrix alpha, Matrix beta);

  int even_dim() const { return p_; }
  int odd_dim() const { return q_; }
  const Tensor3& mu() const { return mu_; }
  const Tensor3& nu() const { return nu_; }
  const Tensor3& br() const { return br_; }
  const Matrix& alpha() const { return alpha_; }
  const Matrix& beta() const { return beta_; }

  // Bilinear products in coordinates. Shapes: even vectors have length p,
  // odd vectors length q.
  Vec prod_ee(const Vec& x1, const Vec& x2) const;   // even x even -> even
  Vec prod_eo(const Vec& x, const Vec& y) const;     // even x odd  -> odd
  Vec bracket(const Vec& y1, const Vec& y2) const;   // odd  x odd  -> even

  friend bool operator==(const HomLieAntialgebra& a, const HomLieAntialgebra& b) = default;

 private:
  int p_, q_;
  Tensor3 mu_, nu_, br_;
  Matrix alpha_, beta_;
};

struct AlgebraMorphism {
  Matrix phi0;  // target-even x source-even
  Matrix phi1;  // target-odd  x source-odd
};

// Standard basis vector of length n with a 1 in slot i.
Vec basis_vec(int n, int i);

// Evaluates hanti01..hanti04 on every basis tuple (multilinearity makes basis
// coverage equivalent to full coverage). Failures are verdicts, not errors.
IdentityReport check_axioms(const HomLieAntialgebra& a);

// Evaluates mult-ee, mult-eo, mult-oo on every basis pair.
IdentityReport check_multiplicative(const HomLieAntialgebra& a);

// The five morphism identities for phi: src -> dst (twist intertwining for
// both parities, then compatibility with the three products).
IdentityReport is_homomorphism(const AlgebraMorphism& phi, const HomLieAntialgebra& src,
                               const HomLieAntialgebra& dst);

// Composed products: each structure tensor is post-composed with the matching
// component of phi, and (phi0, phi1) become the twist maps of the result.
// Requires: a has identity twists and passes check_axioms; phi is a self-map
// passing is_homomorphism(phi, a, a). The result is checked to satisfy the
// axioms before being returned.
HomLieAntialgebra twist(const HomLieAntialgebra& a, const AlgebraMorphism& phi);

}  // namespace homanti
