#include <doctest.h>

#include <numeric>
#include <random>

#include "lensurf/construction.hpp"
#include "lensurf/errors.hpp"
#include "lensurf/q_theory.hpp"
#include "oracles.hpp"

using namespace lensurf;

namespace {

std::vector<std::int64_t> raw(const QVector& v) { return {v.entries().begin(), v.entries().end()}; }
oracle::Counts raw(const HakenVector& v) { return {v.counts().begin(), v.counts().end()}; }

// Minimum triangle count over each vertex class must be zero: slots 0, 1
// form one class and slots 2, 3 the other.
bool vertex_classes_minimal(const HakenVector& v) {
  std::int64_t lo_pm = INT64_MAX;
  std::int64_t lo_eq = INT64_MAX;
  for (int t = 1; t <= v.tets(); ++t) {
    lo_pm = std::min({lo_pm, v.at(t, DiskKind::TriVPlus), v.at(t, DiskKind::TriVMinus)});
    lo_eq = std::min({lo_eq, v.at(t, DiskKind::TriVLow), v.at(t, DiskKind::TriVHigh)});
  }
  return lo_pm == 0 && lo_eq == 0;
}

}  // namespace

TEST_CASE("basis vectors match their definitions") {
  for (auto [p, q] : {std::pair{8, 3}, {11, 3}, {13, 5}, {30, 11}}) {
    for (int i = 1; i <= p; ++i) {
      CHECK(raw(basis_s(p, i)) == oracle::s_vec(p, i));
      CHECK(raw(basis_t(p, q, i)) == oracle::t_vec(p, q, i));
    }
  }
}

TEST_CASE("t_1 on T(8,3) is admissible and s_i satisfy the quad matching conditions") {
  const LensParams params = LensParams::make(8, 3);
  const Triangulation tri = build_triangulation(params);
  CHECK(is_admissible(tri, basis_t(8, 3, 1)));
  for (int i = 1; i <= 8; ++i) {
    CHECK(is_admissible(tri, basis_t(8, 3, i)));
    CHECK(satisfies_q_matching(tri, basis_s(8, i)));
    // (1,1,1) puts three quad types in one block.
    CHECK_FALSE(is_admissible(tri, basis_s(8, i)));
  }
}

TEST_CASE("reconstruction satisfies matching and is minimal per vertex class") {
  const Triangulation tri = build_triangulation(LensParams::make(8, 3));
  for (int i = 1; i <= 8; ++i) {
    const HakenVector v = reconstruct_tdisks(tri, basis_t(8, 3, i));
    CHECK(oracle::matching(8, 3, raw(v)));
    CHECK(vertex_classes_minimal(v));
    CHECK(quad_part(v) == basis_t(8, 3, i));
  }
}

TEST_CASE("adding a vertex link keeps matching but breaks minimality") {
  const Triangulation tri = build_triangulation(LensParams::make(8, 3));
  const HakenVector v = reconstruct_tdisks(tri, basis_t(8, 3, 2)) + vertex_link(tri, 0);
  CHECK(oracle::matching(8, 3, raw(v)));
  CHECK_FALSE(vertex_classes_minimal(v));
}

TEST_CASE("inadmissible vectors report the offending place") {
  const Triangulation tri = build_triangulation(LensParams::make(8, 3));
  QVector lone(8);
  lone.at(1, 2) = 1;
  try {
    reconstruct_tdisks(tri, lone);
    FAIL("expected InadmissibleError");
  } catch (const InadmissibleError& e) {
    CHECK(e.kind() == ErrorKind::Inadmissible);
    CHECK(e.tet() >= 1);
    CHECK(e.tet() <= 8);
    CHECK(e.face_opposite() >= 0);
    CHECK(e.corner() >= 0);
  }
  QVector negative = basis_t(8, 3, 1);
  negative.at(3, 1) = -1;
  CHECK_THROWS_AS(reconstruct_tdisks(tri, negative), InadmissibleError);
  CHECK_FALSE(is_admissible(tri, negative));
}

TEST_CASE("basis hypotheses") {
  CHECK_THROWS_AS(q_basis(LensParams::make(4, 1)), Error);
  CHECK_THROWS_AS(q_basis(LensParams::make(8, 5)), Error);  // q >= p/2
  CHECK_THROWS_AS(q_basis(LensParams::make(7, 1)), Error);
  CHECK_NOTHROW(q_basis(LensParams::make(7, 2)));
}

TEST_CASE("basis has rank 2p") {
  for (auto [p, q] : {std::pair{8, 3}, {11, 3}, {13, 5}, {12, 5}, {9, 4}}) {
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i <= p; ++i) {
      rows.push_back(oracle::s_vec(p, i));
      rows.push_back(oracle::t_vec(p, q, i));
    }
    CHECK(oracle::rank(rows) == 2 * p);
  }
}

TEST_CASE("span of the basis equals the vectors with a triangle completion") {
  const LensParams params = LensParams::make(11, 3);
  const Triangulation tri = build_triangulation(params);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 150; ++trial) {
    QVector v(11);
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(rng);
    } else {
      for (int i = 1; i <= 11; ++i) v += coeff(rng) * basis_s(11, i) + coeff(rng) * basis_t(11, 3, i);
    }
    CHECK(in_solution_space(params, v).has_value() == satisfies_q_matching(tri, v));
  }
}

TEST_CASE("h_0 solves to half of every odd t") {
  const LensParams params = LensParams::make(8, 3);
  const auto c = in_solution_space(params, h0(params));
  REQUIRE(c.has_value());
  for (int i = 1; i <= 8; ++i) {
    CHECK(c->a[static_cast<std::size_t>(i - 1)] == 0);
    CHECK(c->b[static_cast<std::size_t>(i - 1)] == (i % 2 == 1 ? Rational(1, 2) : Rational(0)));
  }
  const auto combined = combine_basis(params, *c);
  for (std::size_t i = 0; i < combined.size(); ++i) CHECK(combined[i] == h0(params)[i]);
}

TEST_CASE("solution-space constraints cut out the span") {
  const LensParams params = LensParams::make(8, 3);
  const auto rows = solution_space_constraints(params);
  CHECK(rows.size() == 8);
  auto apply = [&](const QVector& v) {
    for (const auto& r : rows) {
      BigInt s = 0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * v[i];
      if (s != 0) return false;
    }
    return true;
  };
  for (int i = 1; i <= 8; ++i) {
    CHECK(apply(basis_s(8, i)));
    CHECK(apply(basis_t(8, 3, i)));
  }
  QVector lone(8);
  lone.at(1, 2) = 1;
  CHECK_FALSE(apply(lone));
}

TEST_CASE("pretty printer") {
  CHECK(format_blocks(h0(LensParams::make(8, 3))) ==
        "0 1 0 | 0 0 1 | 0 1 0 | 0 0 1 | 0 1 0 | 0 0 1 | 0 1 0 | 0 0 1");
}
