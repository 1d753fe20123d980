#include "lensurf/fundamentality.hpp"

#include <algorithm>

#include "lensurf/detail/box_search.hpp"
#include "lensurf/errors.hpp"

namespace lensurf {

std::string_view to_string(MinimalityStatus status) {
  switch (status) {
    case MinimalityStatus::Fundamental: return "fundamental";
    case MinimalityStatus::Decomposable: return "decomposable";
    case MinimalityStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

bool haken_fund_criterion(const Triangulation& tri, const HakenVector& v) {
  if (!is_normal(tri, v)) throw Error(ErrorKind::NotNormal, "criterion needs a normal surface");
  if (edge_weight(tri, v, EdgeName::vertical()) != 1) return false;
  if (edge_weight(tri, v, EdgeName::horizontal()) != 1) return false;
  for (int t = 1; t <= tri.size(); ++t) {
    if (v.at(t, DiskKind::Quad2) > 0 || v.at(t, DiskKind::Quad3) > 0) return true;
  }
  return false;
}

namespace {

bool strictly_between(std::span<const std::int64_t> w, std::span<const std::int64_t> v) {
  bool nonzero = false;
  bool below = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w[i] < 0 || w[i] > v[i]) return false;
    nonzero = nonzero || w[i] != 0;
    below = below || w[i] != v[i];
  }
  return nonzero && below;
}

// Finds a proper solution below `upper`, then keeps descending below each
// witness until none remains, so the reported witness is minimal.
template <class Vector, class Make>
MinimalityVerdict<Vector> run_oracle(std::span<const detail::LinearRow> rows,
                                     std::vector<std::int64_t> upper,
                                     std::span<const std::size_t> order, std::uint64_t budget,
                                     Make make) {
  MinimalityVerdict<Vector> verdict;
  std::uint64_t spent = 0;
  while (true) {
    if (spent >= budget) {
      if (!verdict.witness) verdict.status = MinimalityStatus::Inconclusive;
      return verdict;
    }
    auto r = detail::find_proper_solution(rows, upper, order, budget - spent);
    spent += r.nodes;
    verdict.nodes_explored = spent;
    switch (r.outcome) {
      case detail::BoxSearchResult::Outcome::Found:
        verdict.status = MinimalityStatus::Decomposable;
        verdict.witness = make(r.solution);
        upper = std::move(r.solution);
        continue;
      case detail::BoxSearchResult::Outcome::Exhausted:
        if (!verdict.witness) verdict.status = MinimalityStatus::Fundamental;
        return verdict;
      case detail::BoxSearchResult::Outcome::BudgetExceeded:
        if (!verdict.witness) verdict.status = MinimalityStatus::Inconclusive;
        return verdict;
    }
  }
}

}  // namespace

MinimalityVerdict<HakenVector> minimality_oracle(const Triangulation& tri, const HakenVector& v,
                                                 std::uint64_t budget) {
  if (!is_normal(tri, v)) throw Error(ErrorKind::NotNormal, "oracle needs a normal surface");
  if (v.is_zero()) throw Error(ErrorKind::NotNormal, "oracle needs a nonzero surface");
  MatchingEquations eq = matching_equations(tri);
  std::vector<detail::LinearRow> rows;
  rows.reserve(eq.equations.size());
  for (const auto& row : eq.equations) {
    detail::LinearRow lr;
    for (auto [col, coef] : row.entries) lr.terms.emplace_back(col, coef);
    rows.push_back(std::move(lr));
  }
  std::vector<std::size_t> order;
  for (int t = 1; t <= tri.size(); ++t) {
    for (int k : {4, 5, 6, 0, 1, 2, 3}) {
      std::size_t col = DiskTypeIndex{t, static_cast<DiskKind>(k)}.flat();
      if (v[col] > 0) order.push_back(col);
    }
  }
  std::vector<std::int64_t> upper(v.counts().begin(), v.counts().end());
  const int tets = tri.size();
  return run_oracle<HakenVector>(rows, std::move(upper), order, budget, [tets](const std::vector<std::int64_t>& x) {
    return HakenVector(tets, x);
  });
}

MinimalityVerdict<QVector> q_minimality_oracle(const LensParams& params, const QVector& qv,
                                               std::uint64_t budget) {
  require_basis_hypotheses(params);
  Triangulation tri = build_triangulation(params);
  if (!is_admissible(tri, qv)) {
    throw Error(ErrorKind::Inadmissible, "Q-oracle needs an admissible vector");
  }
  if (qv.is_zero()) throw Error(ErrorKind::Inadmissible, "Q-oracle needs a nonzero vector");
  std::vector<detail::LinearRow> rows;
  for (const auto& big_row : solution_space_constraints(params)) {
    detail::LinearRow lr;
    for (std::size_t i = 0; i < big_row.size(); ++i) {
      if (big_row[i] == 0) continue;
      if (boost::multiprecision::abs(big_row[i]) > BigInt(1) << 40) {
        throw Error(ErrorKind::Consistency, "constraint coefficient too large for the search");
      }
      lr.terms.emplace_back(i, static_cast<std::int64_t>(big_row[i]));
    }
    rows.push_back(std::move(lr));
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < qv.size(); ++i) {
    if (qv[i] > 0) order.push_back(i);
  }
  std::vector<std::int64_t> upper(qv.entries().begin(), qv.entries().end());
  const int blocks = qv.blocks();
  return run_oracle<QVector>(rows, std::move(upper), order, budget, [blocks](const std::vector<std::int64_t>& x) {
    return QVector(blocks, x);
  });
}

bool verify_haken_witness(const Triangulation& tri, const HakenVector& v, const HakenVector& witness) {
  if (witness.size() != v.size()) return false;
  if (!satisfies_matching(tri, witness)) return false;
  return strictly_between(witness.counts(), v.counts());
}

bool verify_q_witness(const LensParams& params, const QVector& qv, const QVector& witness) {
  if (witness.size() != qv.size()) return false;
  if (!in_solution_space(params, witness)) return false;
  return strictly_between(witness.entries(), qv.entries());
}

}  // namespace lensurf
