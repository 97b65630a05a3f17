#pragma once

#include <vector>

#include "homanti/representation.hpp"

// Cochains of bidegree (m, n): multilinear in m even arguments, alternating
// in n odd arguments, valued in V0 when n is even and in V1 when n is odd.
// Coefficients are stored flat over (even index tuple) x (strictly increasing
// odd index tuple) x (value basis index), so antisymmetry in the odd slots is
// structural. A cochain is admissible when it intertwines the twists:
// (value twist) . f  =  f . (alpha on each even slot, beta on each odd slot).

namespace homanti {

struct CochainSignature {
  int m = 0;  // even argument count
  int n = 0;  // odd argument count

  int degree() const { return m + n; }
  bool value_is_odd() const { return n % 2 != 0; }

  friend bool operator==(const CochainSignature& a, const CochainSignature& b) = default;
};

// Binomial coefficient; 0 outside the usual range.
long binom(int n, int k);

// All m-tuples over {0..p-1}, lexicographic (p^m of them; one empty tuple
// when m = 0).
std::vector<std::vector<int>> even_tuples(int p, int m);
// All strictly increasing n-tuples over {0..q-1}, lexicographic.
std::vector<std::vector<int>> odd_tuples(int q, int n);

// Positions within the enumerations above.
long even_tuple_rank(const std::vector<int>& t, int p);
long odd_tuple_rank(const std::vector<int>& t, int q);

// Sorts ascending in place and returns the permutation sign; 0 when an index
// repeats.
int sort_with_sign(std::vector<int>& t);

// p^m * C(q, n) * (dim V0 if the value parity is even, dim V1 otherwise).
long raw_cochain_dim(const HomLieAntialgebra& a, const Representation& rho,
                     CochainSignature sig);

class Cochain {
 public:
  // Zero cochain over even/odd argument dimensions (p, q) with the given
  // value dimension.
  Cochain(CochainSignature sig, int even_dim, int odd_dim, int value_dim);

  const CochainSignature& sig() const { return sig_; }
  int even_dim() const { return p_; }
  int odd_dim() const { return q_; }
  int value_dim() const { return vdim_; }
  long even_tuple_count() const { return ecount_; }
  long odd_tuple_count() const { return ocount_; }
  long flat_dim() const { return static_cast<long>(coeffs_.size()); }

  // Coefficient by enumeration ranks and value basis index.
  Rational& coeff(long even_rank, long odd_rank, int value_index);
  const Rational& coeff(long even_rank, long odd_rank, int value_index) const;

  // Value vector on a basis tuple. The odd tuple may come in any order: the
  // sign rule applies, and a repeated odd index gives zero.
  Vec value_on(const std::vector<int>& etuple, const std::vector<int>& otuple) const;

  // Multilinear/alternating evaluation on coordinate vectors (even arguments
  // of length p, then odd arguments of length q).
  Vec evaluate(const std::vector<Vec>& even_args, const std::vector<Vec>& odd_args) const;

  const Vec& flat() const { return coeffs_; }
  static Cochain from_flat(CochainSignature sig, int even_dim, int odd_dim, int value_dim,
                           Vec coeffs);

  bool is_zero() const;
  Cochain scaled(const Rational& c) const;
  // Adds c * other into this cochain; signatures and dimensions must match.
  Cochain& add_scaled(const Cochain& other, const Rational& c);

  friend bool operator==(const Cochain& a, const Cochain& b) = default;

 private:
  CochainSignature sig_;
  int p_, q_, vdim_;
  long ecount_, ocount_;
  Vec coeffs_;
};

// Zero cochain sized for the given algebra, coefficient module, and
// signature.
Cochain zero_cochain(const HomLieAntialgebra& a, const Representation& rho,
                     CochainSignature sig);

// A degree-homogeneous element of the direct sum over signatures with
// m + n = degree. At most one block per signature; blocks are kept ordered
// by ascending odd argument count. An absent block is zero.
class CochainSum {
 public:
  explicit CochainSum(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::vector<Cochain>& blocks() const { return blocks_; }
  const Cochain* block(CochainSignature sig) const;  // nullptr when absent

  // Adds c * piece into the matching block, inserting it when absent. The
  // piece's degree must equal degree().
  void add_scaled(const Cochain& piece, const Rational& c);
  void add(const Cochain& piece) { add_scaled(piece, Rational(1)); }
  void add_scaled(const CochainSum& other, const Rational& c);

  bool is_zero() const;

 private:
  int degree_;
  std::vector<Cochain> blocks_;
};

// Twist compatibility checked on every basis argument tuple (exact). The
// cochain's dimensions must match the algebra and module.
bool is_admissible(const HomLieAntialgebra& a, const Representation& rho, const Cochain& f);
bool is_admissible(const HomLieAntialgebra& a, const Representation& rho, const CochainSum& f);

// Basis of the admissible subspace: kernel of the constraint operator
// F -> (value twist).F(args) - F(twisted args) in flat coordinates, computed
// deterministically. Every returned cochain passes is_admissible exactly.
std::vector<Cochain> admissible_basis(const HomLieAntialgebra& a, const Representation& rho,
                                      CochainSignature sig);

}  // namespace homanti
