#include "homanti/examples.hpp"

#include <map>
#include <random>

namespace homanti {

HomLieAntialgebra k1() {
  Tensor3 mu(1, 1, 1), nu(1, 2, 2), br(2, 2, 1);
  mu.at(0, 0, 0) = 1;
  nu.at(0, 0, 0) = Rational(1, 2);
  nu.at(0, 1, 1) = Rational(1, 2);
  br.at(0, 1, 0) = Rational(1, 2);
  br.at(1, 0, 0) = Rational(-1, 2);
  return HomLieAntialgebra(1, 2, std::move(mu), std::move(nu), std::move(br),
                           Matrix::identity(1), Matrix::identity(2));
}

HomLieAntialgebra twisted_k1(const Rational& mu_param) {
  if (mu_param.is_zero()) throw InputError("twisted_k1: parameter must be nonzero");
  const Rational inv = Rational(1) / mu_param;
  Tensor3 mu(1, 1, 1), nu(1, 2, 2), br(2, 2, 1);
  mu.at(0, 0, 0) = 1;
  nu.at(0, 0, 0) = Rational(1, 2) * mu_param;
  nu.at(0, 1, 1) = Rational(1, 2) * inv;
  br.at(0, 1, 0) = Rational(1, 2);
  br.at(1, 0, 0) = Rational(-1, 2);
  Matrix beta(2, 2);
  beta.at(0, 0) = mu_param;
  beta.at(1, 1) = inv;
  return HomLieAntialgebra(1, 2, std::move(mu), std::move(nu), std::move(br),
                           Matrix::identity(1), std::move(beta));
}

ConformalAlgebra::ConformalAlgebra(const Rational& r) : r_(r), q_(r * r) {
  if (r_.is_zero() || r_ == Rational(1) || r_ == Rational(-1))
    throw InputError("conformal: parameter r must avoid 0, 1, -1");
}

Rational ConformalAlgebra::q_pow(long twice_i) const {
  // q^{i} = r^{2i}; negative exponents are fine because r != 0.
  Rational base = twice_i >= 0 ? r_ : Rational(1) / r_;
  long e = twice_i >= 0 ? twice_i : -twice_i;
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Rational ConformalAlgebra::angle(long twice_i) const {
  return (q_pow(twice_i) - Rational(1)) / (q_ - Rational(1));
}

Rational ConformalAlgebra::beta_coeff(long twice_i) const {
  return Rational(1) + q_pow(twice_i);
}

ConformalAlgebra::EvenTerm ConformalAlgebra::prod_ee(long n, long m) const {
  return {n + m, Rational(1)};
}

ConformalAlgebra::OddTerm ConformalAlgebra::prod_eo(long n, long twice_i) const {
  if ((twice_i & 1L) == 0) throw InputError("conformal: odd index must be half-integral");
  return {2 * n + twice_i, Rational(1, 2) * (Rational(1) + q_pow(twice_i))};
}

ConformalAlgebra::EvenTerm ConformalAlgebra::bracket(long twice_i, long twice_j) const {
  if ((twice_i & 1L) == 0 || (twice_j & 1L) == 0)
    throw InputError("conformal: odd index must be half-integral");
  return {(twice_i + twice_j) / 2, Rational(1, 2) * (angle(twice_j) - angle(twice_i))};
}

ConformalAlgebra conformal(const Rational& r) { return ConformalAlgebra(r); }

namespace {

// Formal linear combination over basis indices (doubled for odd parity).
using Sum = std::map<long, Rational>;

void add_term(Sum& s, long index, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = s.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) s.erase(it);
  }
}

void record_sum(IdentityReport& report, const std::string& identity, std::vector<int> tuple,
                const Sum& residual) {
  if (residual.empty()) return;
  Vec coeffs;
  for (const auto& [index, coeff] : residual) coeffs.push_back(coeff);
  report.add_violation({identity, std::move(tuple), std::move(coeffs)});
}

long sample_even(std::mt19937_64& rng) {
  return std::uniform_int_distribution<long>(-4, 4)(rng);
}

long sample_odd_doubled(std::mt19937_64& rng) {
  return 2 * std::uniform_int_distribution<long>(-4, 3)(rng) + 1;  // odd in [-7, 7]
}

}  // namespace

IdentityReport spot_check_axioms(const ConformalAlgebra& c, int samples_per_identity,
                                 std::uint64_t seed) {
  IdentityReport report;
  for (const char* name : {"hanti01", "hanti02", "hanti03", "hanti04"})
    report.note_identity(name);
  std::mt19937_64 rng(seed);
  const Rational half(1, 2);

  // eps_n * (eps_m * eps_k) = (eps_n * eps_m) * eps_k, alpha = id throughout.
  for (int s = 0; s < samples_per_identity; ++s) {
    long n = sample_even(rng), m = sample_even(rng), k = sample_even(rng);
    Sum res;
    auto inner = c.prod_ee(m, k);
    auto lhs = c.prod_ee(n, inner.n);
    add_term(res, lhs.n, inner.coeff * lhs.coeff);
    auto inner2 = c.prod_ee(n, m);
    auto rhs = c.prod_ee(inner2.n, k);
    add_term(res, rhs.n, -(inner2.coeff * rhs.coeff));
    record_sum(report, "hanti01", {static_cast<int>(n), static_cast<int>(m), static_cast<int>(k)},
               res);
  }

  // eps_n * (eps_m * a_i) = 1/2 (eps_n * eps_m) * beta(a_i)
  for (int s = 0; s < samples_per_identity; ++s) {
    long n = sample_even(rng), m = sample_even(rng), ti = sample_odd_doubled(rng);
    Sum res;
    auto inner = c.prod_eo(m, ti);
    auto lhs = c.prod_eo(n, inner.twice_i);
    add_term(res, lhs.twice_i, inner.coeff * lhs.coeff);
    auto prod = c.prod_ee(n, m);
    auto rhs = c.prod_eo(prod.n, ti);
    add_term(res, rhs.twice_i, -(half * prod.coeff * c.beta_coeff(ti) * rhs.coeff));
    record_sum(report, "hanti02",
               {static_cast<int>(n), static_cast<int>(m), static_cast<int>(ti)}, res);
  }

  // eps_n * [a_i, a_j] = [eps_n * a_i, beta(a_j)] + [beta(a_i), eps_n * a_j]
  for (int s = 0; s < samples_per_identity; ++s) {
    long n = sample_even(rng), ti = sample_odd_doubled(rng), tj = sample_odd_doubled(rng);
    Sum res;
    auto inner = c.bracket(ti, tj);
    auto lhs = c.prod_ee(n, inner.n);
    add_term(res, lhs.n, inner.coeff * lhs.coeff);
    auto left = c.prod_eo(n, ti);
    auto b1 = c.bracket(left.twice_i, tj);
    add_term(res, b1.n, -(left.coeff * c.beta_coeff(tj) * b1.coeff));
    auto right = c.prod_eo(n, tj);
    auto b2 = c.bracket(ti, right.twice_i);
    add_term(res, b2.n, -(c.beta_coeff(ti) * right.coeff * b2.coeff));
    record_sum(report, "hanti03",
               {static_cast<int>(n), static_cast<int>(ti), static_cast<int>(tj)}, res);
  }

  // cyclic sum of beta(a_i) * [a_j, a_k] vanishes (even factor written first)
  for (int s = 0; s < samples_per_identity; ++s) {
    long ti = sample_odd_doubled(rng), tj = sample_odd_doubled(rng), tk = sample_odd_doubled(rng);
    Sum res;
    const long idx[3] = {ti, tj, tk};
    for (int cyc = 0; cyc < 3; ++cyc) {
      long a = idx[cyc], b = idx[(cyc + 1) % 3], d = idx[(cyc + 2) % 3];
      auto bk = c.bracket(b, d);
      auto prod = c.prod_eo(bk.n, a);
      add_term(res, prod.twice_i, c.beta_coeff(a) * bk.coeff * prod.coeff);
    }
    record_sum(report, "hanti04",
               {static_cast<int>(ti), static_cast<int>(tj), static_cast<int>(tk)}, res);
  }

  return report;
}

IdentityReport spot_check_multiplicative(const ConformalAlgebra& c, int samples_per_identity,
                                         std::uint64_t seed) {
  IdentityReport report;
  for (const char* name : {"mult-ee", "mult-eo", "mult-oo"}) report.note_identity(name);
  std::mt19937_64 rng(seed);

  // alpha(eps_n * eps_m) = alpha(eps_n) * alpha(eps_m): trivially alpha = id.
  for (int s = 0; s < samples_per_identity; ++s) {
    long n = sample_even(rng), m = sample_even(rng);
    Sum res;
    auto lhs = c.prod_ee(n, m);
    add_term(res, lhs.n, lhs.coeff);
    auto rhs = c.prod_ee(n, m);
    add_term(res, rhs.n, -rhs.coeff);
    record_sum(report, "mult-ee", {static_cast<int>(n), static_cast<int>(m)}, res);
  }

  // beta(eps_n * a_i) = alpha(eps_n) * beta(a_i)
  for (int s = 0; s < samples_per_identity; ++s) {
    long n = sample_even(rng), ti = sample_odd_doubled(rng);
    Sum res;
    auto prod = c.prod_eo(n, ti);
    add_term(res, prod.twice_i, c.beta_coeff(prod.twice_i) * prod.coeff);
    add_term(res, prod.twice_i, -(c.beta_coeff(ti) * prod.coeff));
    record_sum(report, "mult-eo", {static_cast<int>(n), static_cast<int>(ti)}, res);
  }

  // alpha([a_i, a_j]) = [beta(a_i), beta(a_j)]
  for (int s = 0; s < samples_per_identity; ++s) {
    long ti = sample_odd_doubled(rng), tj = sample_odd_doubled(rng);
    Sum res;
    auto lhs = c.bracket(ti, tj);
    add_term(res, lhs.n, lhs.coeff);
    add_term(res, lhs.n, -(c.beta_coeff(ti) * c.beta_coeff(tj) * lhs.coeff));
    record_sum(report, "mult-oo", {static_cast<int>(ti), static_cast<int>(tj)}, res);
  }

  return report;
}

}  // namespace homanti
