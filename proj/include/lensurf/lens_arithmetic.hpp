#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lensurf/exact_linalg.hpp"

namespace lensurf {

/// (p_k, q_k) for k = 0..n with p_0 = 0, q_0 = 1,
/// p_k = (kappa+1) p_{k-1} + kappa q_{k-1}, q_k = p_{k-1} + q_{k-1}.
struct KappaSequence {
  BigInt kappa;
  std::vector<std::pair<BigInt, BigInt>> terms;

  const BigInt& p(std::size_t k) const { return terms.at(k).first; }
  const BigInt& q(std::size_t k) const { return terms.at(k).second; }
  /// q_1 + ... + q_l (0 when l = 0).
  BigInt q_prefix_sum(std::size_t l) const;
};

/// Throws OutOfRange when kappa < 1 or n < 0.
KappaSequence lens_sequence(const BigInt& kappa, long n);

struct FormulaWitness {
  std::string instance;  // e.g. "l=3" or "m=2"
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

struct FormulaCheck {
  int id = 0;  // 1..6
  std::string statement;
  std::vector<FormulaWitness> witnesses;

  bool passed() const;
};

struct FormulaReport {
  BigInt kappa;
  long n = 0;
  std::vector<FormulaCheck> checks;

  bool passed() const;
};

/// Checks the six identities for the given n: (1), (5), (6) at n; (2) for
/// l = 1..n; (3) for l = 2..n+1; (4), both as an equality and as the
/// congruence modulo p_n, for m = 1..n+1.
FormulaReport check_formulae(const BigInt& kappa, long n);

/// [a_0; a_1, ..., a_m] with a_0 >= 0, a_i > 0, a_m > 1 unless m = 0.
struct ContinuedFraction {
  std::vector<BigInt> terms;
};

/// Throws InvalidFraction unless p > q >= 1 and gcd(p, q) = 1.
ContinuedFraction continued_fraction(const BigInt& p, const BigInt& q);
Rational evaluate(const ContinuedFraction& cf);

struct CrosscapResult {
  ContinuedFraction cf;
  std::vector<BigInt> b;
  BigInt crosscap;
};

/// Minimal crosscap number of L(p, q) for even p from the Bredon-Wood
/// recipe: b_0 = a_0, b_i = a_i unless b_{i-1} = a_{i-1} and b_0 + ... +
/// b_{i-1} is even (then 0); the answer is half the sum of the b_i.
/// Throws OddP for odd p.
CrosscapResult bredon_wood(const BigInt& p, const BigInt& q);
BigInt bredon_wood_crosscap(const BigInt& p, const BigInt& q);

}  // namespace lensurf
