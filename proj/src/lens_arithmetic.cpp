#include "lensurf/lens_arithmetic.hpp"

#include <algorithm>

#include "lensurf/errors.hpp"

namespace lensurf {

namespace {

std::string str(const BigInt& x) { return x.str(); }

}  // namespace

BigInt KappaSequence::q_prefix_sum(std::size_t l) const {
  BigInt s = 0;
  for (std::size_t k = 1; k <= l; ++k) s += q(k);
  return s;
}

KappaSequence lens_sequence(const BigInt& kappa, long n) {
  if (kappa < 1) throw Error(ErrorKind::OutOfRange, "kappa must be positive");
  if (n < 0) throw Error(ErrorKind::OutOfRange, "n must be non-negative");
  KappaSequence seq{kappa, {{BigInt(0), BigInt(1)}}};
  for (long k = 1; k <= n; ++k) {
    const auto& [p, q] = seq.terms.back();
    seq.terms.emplace_back((kappa + 1) * p + kappa * q, p + q);
  }
  return seq;
}

bool FormulaCheck::passed() const {
  return !witnesses.empty() &&
         std::all_of(witnesses.begin(), witnesses.end(), [](const FormulaWitness& w) { return w.holds; });
}

bool FormulaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FormulaCheck& c) { return c.passed(); });
}

FormulaReport check_formulae(const BigInt& kappa, long n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "formulae need n >= 1");
  // (3) and (4) reach q_{n+1}.
  const KappaSequence s = lens_sequence(kappa, n + 1);
  const auto un = static_cast<std::size_t>(n);
  FormulaReport report{kappa, n, {}};
  auto witness = [](std::string instance, BigInt lhs, BigInt rhs) {
    bool holds = lhs == rhs;
    return FormulaWitness{std::move(instance), std::move(lhs), std::move(rhs), holds};
  };

  FormulaCheck f1{1, "p_n = kappa q_n + p_{n-1}", {}};
  f1.witnesses.push_back(witness("n=" + std::to_string(n), s.p(un), kappa * s.q(un) + s.p(un - 1)));
  report.checks.push_back(std::move(f1));

  FormulaCheck f2{2, "kappa (q_1 + ... + q_l) = p_l", {}};
  for (std::size_t l = 1; l <= un; ++l) {
    f2.witnesses.push_back(witness("l=" + std::to_string(l), kappa * s.q_prefix_sum(l), s.p(l)));
  }
  report.checks.push_back(std::move(f2));

  FormulaCheck f3{3, "-(q_1+...+q_{l-1}) p_n + q_l q_n = -(q_1+...+q_{l-2}) p_{n-1} + q_{l-1} q_{n-1}", {}};
  for (std::size_t l = 2; l <= un + 1; ++l) {
    BigInt lhs = -s.q_prefix_sum(l - 1) * s.p(un) + s.q(l) * s.q(un);
    BigInt rhs = -s.q_prefix_sum(l - 2) * s.p(un - 1) + s.q(l - 1) * s.q(un - 1);
    f3.witnesses.push_back(witness("l=" + std::to_string(l), lhs, rhs));
  }
  report.checks.push_back(std::move(f3));

  FormulaCheck f4{4, "-(q_1+...+q_{m-1}) p_n + q_m q_n = q_{n-(m-1)}, so q_m q_n = q_{n-(m-1)} mod p_n", {}};
  for (std::size_t m = 1; m <= un + 1; ++m) {
    BigInt target = s.q(un - (m - 1));
    BigInt lhs = -s.q_prefix_sum(m - 1) * s.p(un) + s.q(m) * s.q(un);
    f4.witnesses.push_back(witness("m=" + std::to_string(m), lhs, target));
    BigInt residue = (s.q(m) * s.q(un)) % s.p(un);
    BigInt expected = target % s.p(un);
    f4.witnesses.push_back(witness("m=" + std::to_string(m) + " mod p_n", residue, expected));
  }
  report.checks.push_back(std::move(f4));

  FormulaCheck f5{5, "(kappa+1) q_n - p_n = q_{n-1}", {}};
  f5.witnesses.push_back(witness("n=" + std::to_string(n), (kappa + 1) * s.q(un) - s.p(un), s.q(un - 1)));
  report.checks.push_back(std::move(f5));

  FormulaCheck f6{6, "(2 kappa+1) q_n - 2 p_n = -p_{n-1} + q_{n-1}", {}};
  f6.witnesses.push_back(witness("n=" + std::to_string(n), (2 * kappa + 1) * s.q(un) - 2 * s.p(un),
                                 -s.p(un - 1) + s.q(un - 1)));
  report.checks.push_back(std::move(f6));
  return report;
}

ContinuedFraction continued_fraction(const BigInt& p, const BigInt& q) {
  if (q < 1 || p <= q) {
    throw Error(ErrorKind::InvalidFraction, "need p > q >= 1, got " + str(p) + "/" + str(q));
  }
  if (boost::multiprecision::gcd(p, q) != 1) {
    throw Error(ErrorKind::InvalidFraction, str(p) + "/" + str(q) + " is not in lowest terms");
  }
  ContinuedFraction cf;
  BigInt num = p;
  BigInt den = q;
  while (den != 0) {
    cf.terms.push_back(num / den);
    BigInt r = num % den;
    num = den;
    den = r;
  }
  return cf;
}

Rational evaluate(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw Error(ErrorKind::InvalidFraction, "empty continued fraction");
  Rational x(cf.terms.back());
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) x = Rational(*it) + 1 / x;
  return x;
}

CrosscapResult bredon_wood(const BigInt& p, const BigInt& q) {
  if (p % 2 != 0) throw Error(ErrorKind::OddP, "crosscap recipe needs even p, got " + str(p));
  CrosscapResult r{continued_fraction(p, q), {}, 0};
  const auto& a = r.cf.terms;
  BigInt sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigInt bi = a[i];
    if (i > 0 && r.b[i - 1] == a[i - 1] && sum % 2 == 0) bi = 0;
    r.b.push_back(bi);
    sum += bi;
  }
  if (sum % 2 != 0) {
    throw Error(ErrorKind::Consistency, "sum of b_i is odd for " + str(p) + "/" + str(q));
  }
  r.crosscap = sum / 2;
  return r;
}

BigInt bredon_wood_crosscap(const BigInt& p, const BigInt& q) { return bredon_wood(p, q).crosscap; }

}  // namespace lensurf
