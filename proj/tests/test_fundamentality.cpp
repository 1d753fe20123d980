#include <doctest.h>

#include "lensurf/construction.hpp"
#include "lensurf/detail/box_search.hpp"
#include "lensurf/errors.hpp"
#include "lensurf/fundamentality.hpp"
#include "oracles.hpp"

using namespace lensurf;

namespace {

oracle::Counts raw(const HakenVector& v) { return {v.counts().begin(), v.counts().end()}; }
std::vector<std::int64_t> raw(const QVector& v) { return {v.entries().begin(), v.entries().end()}; }

struct Fixture {
  LensParams params = LensParams::make(8, 3);
  Triangulation tri = build_triangulation(params);
  std::vector<QVector> history = construction_history(2);
};

}  // namespace

TEST_CASE("the criterion") {
  Fixture f;
  CHECK(haken_fund_criterion(f.tri, reconstruct_tdisks(f.tri, f.history[0])));
  CHECK(haken_fund_criterion(f.tri, reconstruct_tdisks(f.tri, f.history[1])));
  CHECK_FALSE(haken_fund_criterion(f.tri, heegaard_torus(f.tri)));
  HakenVector bad(8);
  bad.at(1, DiskKind::Quad2) = 1;
  CHECK_THROWS_AS(haken_fund_criterion(f.tri, bad), Error);
}

TEST_CASE("Haken oracle on T(8,3)") {
  Fixture f;
  const HakenVector h1 = reconstruct_tdisks(f.tri, f.history[1]);
  const auto v = minimality_oracle(f.tri, h1);
  CHECK(v.status == MinimalityStatus::Fundamental);
  CHECK_FALSE(v.witness.has_value());

  const HakenVector link = vertex_link(f.tri, 0);
  CHECK(minimality_oracle(f.tri, link).status == MinimalityStatus::Fundamental);

  const auto two = minimality_oracle(f.tri, 2 * link);
  REQUIRE(two.status == MinimalityStatus::Decomposable);
  REQUIRE(two.witness.has_value());
  CHECK(*two.witness == link);
  CHECK(verify_haken_witness(f.tri, 2 * link, *two.witness));
  CHECK(oracle::matching(8, 3, raw(*two.witness)));
  CHECK(oracle::strictly_between(raw(*two.witness), raw(2 * link)));
}

TEST_CASE("Haken oracle finds the link inside link + surface") {
  Fixture f;
  const HakenVector v = reconstruct_tdisks(f.tri, f.history[1]) + vertex_link(f.tri, 1);
  const auto verdict = minimality_oracle(f.tri, v);
  REQUIRE(verdict.status == MinimalityStatus::Decomposable);
  CHECK(verify_haken_witness(f.tri, v, *verdict.witness));
  CHECK(oracle::matching(8, 3, raw(*verdict.witness)));
}

TEST_CASE("Q oracle on L(8,3)") {
  Fixture f;
  const auto v0 = q_minimality_oracle(f.params, f.history[0]);
  REQUIRE(v0.status == MinimalityStatus::Decomposable);
  CHECK(*v0.witness == basis_t(8, 3, 1));
  CHECK(verify_q_witness(f.params, f.history[0], *v0.witness));
  CHECK(oracle::strictly_between(raw(*v0.witness), raw(f.history[0])));

  CHECK(q_minimality_oracle(f.params, basis_t(8, 3, 1)).status == MinimalityStatus::Fundamental);
  // Recorded evidence; the expected verdict is fundamental.
  CHECK(q_minimality_oracle(f.params, f.history[1]).status == MinimalityStatus::Fundamental);
}

TEST_CASE("oracles are deterministic") {
  Fixture f;
  const HakenVector v = 2 * vertex_link(f.tri, 0);
  const auto a = minimality_oracle(f.tri, v);
  const auto b = minimality_oracle(f.tri, v);
  CHECK(a.status == b.status);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.witness == b.witness);
  const auto qa = q_minimality_oracle(f.params, f.history[0]);
  const auto qb = q_minimality_oracle(f.params, f.history[0]);
  CHECK(qa.nodes_explored == qb.nodes_explored);
  CHECK(qa.witness == qb.witness);
}

TEST_CASE("tiny budgets are inconclusive") {
  Fixture f;
  const auto v = minimality_oracle(f.tri, reconstruct_tdisks(f.tri, f.history[1]), 3);
  CHECK(v.status == MinimalityStatus::Inconclusive);
  CHECK(v.nodes_explored <= 3);
}

TEST_CASE("Q oracle input checks") {
  Fixture f;
  QVector lone(8);
  lone.at(1, 2) = 1;
  CHECK_THROWS_AS(q_minimality_oracle(f.params, lone), Error);
  CHECK_THROWS_AS(q_minimality_oracle(f.params, QVector(8)), Error);
  CHECK_THROWS_AS(q_minimality_oracle(LensParams::make(4, 1), QVector(4)), Error);
}

TEST_CASE("witness verification rejects bad witnesses") {
  Fixture f;
  const HakenVector link = vertex_link(f.tri, 0);
  CHECK_FALSE(verify_haken_witness(f.tri, link, link));
  CHECK_FALSE(verify_haken_witness(f.tri, 2 * link, HakenVector(8)));
  HakenVector off = link;
  off.at(1, DiskKind::Quad1) = 1;
  CHECK_FALSE(verify_haken_witness(f.tri, 2 * link + heegaard_torus(f.tri), off));
  CHECK_FALSE(verify_q_witness(f.params, f.history[0], f.history[0]));
}

TEST_CASE("box search on a toy system") {
  using detail::LinearRow;
  // x0 - x1 = 0, bounds (2, 2): proper solution (1, 1).
  std::vector<LinearRow> rows{{{{0, 1}, {1, -1}}}};
  const std::vector<std::int64_t> twos{2, 2};
  const std::vector<std::int64_t> ones{1, 1};
  const std::vector<std::size_t> order{0, 1};
  const auto r = detail::find_proper_solution(rows, twos, order, 1000);
  REQUIRE(r.outcome == detail::BoxSearchResult::Outcome::Found);
  CHECK(r.solution == std::vector<std::int64_t>{1, 1});
  const auto none = detail::find_proper_solution(rows, ones, order, 1000);
  CHECK(none.outcome == detail::BoxSearchResult::Outcome::Exhausted);
}
