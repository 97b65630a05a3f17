#pragma once

#include <cstdint>

#include "homanti/algebra.hpp"

// Built-in examples. k1() is the 1|2-dimensional algebra with an even unit-like
// element and two odd generators; twisted_k1(mu) is its one-parameter family of
// twisted relatives. ConformalAlgebra is an infinite-dimensional family given
// by per-basis-element evaluators; it is never truncated to a finite table,
// because no finite index window is closed under the products.

namespace homanti {

// p=1, q=2, basis (e | f1, f2): e*e = e, e*f1 = 1/2 f1, e*f2 = 1/2 f2,
// [f1, f2] = 1/2 e, identity twists.
HomLieAntialgebra k1();

// Same products pushed through (id, diag(mu, 1/mu)); twist maps become
// alpha = id, beta = diag(mu, 1/mu). Requires mu != 0.
HomLieAntialgebra twisted_k1(const Rational& mu);

// Even basis eps_n (n integer), odd basis a_i (i integer + 1/2). Odd indices
// are passed doubled (twice_i = 2i, an odd integer) so all arithmetic stays
// integral; the parameter q = r^2 keeps q^i = r^{2i} exact for half-integer i.
//
// Products:  eps_n * eps_m = eps_{n+m}
//            eps_n * a_i   = 1/2 (1 + q^i) a_{n+i}
//            [a_i, a_j]    = 1/2 (angle(j) - angle(i)) eps_{i+j}
// where angle(i) = (q^i - 1)/(q - 1). Twists: alpha = id,
// beta(a_i) = (1 + q^i) a_i.
class ConformalAlgebra {
 public:
  struct EvenTerm {
    long n;
    Rational coeff;
  };
  struct OddTerm {
    long twice_i;
    Rational coeff;
  };

  // Requires r not in {0, 1, -1}, so q = r^2 avoids {0, 1}.
  explicit ConformalAlgebra(const Rational& r);

  const Rational& r() const { return r_; }
  const Rational& q() const { return q_; }

  Rational q_pow(long twice_i) const;      // q^{twice_i/2} = r^{twice_i}
  Rational angle(long twice_i) const;      // (q^i - 1)/(q - 1)
  Rational beta_coeff(long twice_i) const; // 1 + q^i

  EvenTerm prod_ee(long n, long m) const;
  OddTerm prod_eo(long n, long twice_i) const;  // twice_i must be odd
  EvenTerm bracket(long twice_i, long twice_j) const;  // both doubled odd

 private:
  Rational r_, q_;
};

ConformalAlgebra conformal(const Rational& r);

// Evaluates the four defining identities on randomly sampled index tuples
// (indices drawn from a small window around zero, odd indices half-integral).
// Each identity gets samples_per_identity tuples. Failures are recorded with
// the sampled tuple (odd entries doubled) and the residual coefficients; the
// result is a report, not an assertion, and is deterministic in the seed.
IdentityReport spot_check_axioms(const ConformalAlgebra& c, int samples_per_identity,
                                 std::uint64_t seed);

// Same sampling scheme for the three multiplicativity identities of
// (alpha, beta).
IdentityReport spot_check_multiplicative(const ConformalAlgebra& c, int samples_per_identity,
                                         std::uint64_t seed);

}  // namespace homanti
