#include <doctest.h>

#include <set>

#include "lensurf/construction.hpp"
#include "lensurf/errors.hpp"
#include "oracles.hpp"

using namespace lensurf;

namespace {

oracle::Counts raw(const HakenVector& v) { return {v.counts().begin(), v.counts().end()}; }

QVector blocks(std::vector<std::int64_t> e) {
  const int p = static_cast<int>(e.size() / 3);
  return QVector(p, std::move(e));
}

std::vector<std::int64_t> tets_of(const CompressionSchedule& s, int step, std::int64_t disk) {
  std::vector<std::int64_t> out;
  for (const auto& pl : s.placements) {
    if (pl.step == step && pl.disk == disk) out.push_back(pl.tet);
  }
  return out;
}

}  // namespace

TEST_CASE("h_0 on L(8,3)") {
  const LensParams params = LensParams::make(8, 3);
  const QVector h = h0(params);
  CHECK(h == blocks({0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1}));
  const Triangulation tri = build_triangulation(params);
  const HakenVector v = reconstruct_tdisks(tri, h);
  CHECK(euler_characteristic(tri, v) == -2);
  CHECK(oracle::euler(8, 3, raw(v)) == -2);
}

TEST_CASE("h_0 preconditions") {
  CHECK_THROWS_AS(h0(LensParams::make(7, 3)), Error);
  try {
    h0(LensParams::make(7, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddP);
  }
  try {
    h0(LensParams::make(8, 1));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
}

TEST_CASE("step 1 on L(8,3) gives the Klein bottle") {
  const QVector h1 = apply_step(h0(LensParams::make(8, 3)), 2, 1);
  CHECK(h1 == blocks({0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1}));
  CHECK(h1 == h0(LensParams::make(8, 3)) - basis_t(8, 3, 1));
  const Triangulation tri = build_triangulation(LensParams::make(8, 3));
  CHECK(oracle::euler(8, 3, raw(reconstruct_tdisks(tri, h1))) == 0);
}

TEST_CASE("apply_step validates its step") {
  const QVector h = h0(LensParams::make(8, 3));
  CHECK_THROWS_AS(apply_step(h, 2, 2), Error);
  CHECK_THROWS_AS(apply_step(h, 2, 0), Error);
  // Applying step 1 twice goes negative.
  const QVector h1 = apply_step(h, 2, 1);
  try {
    apply_step(h1, 2, 1);
    FAIL("expected NegativeCoordinate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeCoordinate);
  }
}

TEST_CASE("schedule for L(8,3)") {
  const CompressionSchedule s = compression_schedule(2);
  CHECK(tets_of(s, 1, 1) == std::vector<std::int64_t>{1, 2, 4, 5});
  CHECK(s.placements.size() == 4);
  CHECK(s.placements.front().kind == PatchKind::Trigonal);
}

TEST_CASE("schedule for L(30,11)") {
  const CompressionSchedule s = compression_schedule(3);
  const LensInstance inst = lens_instance(3);
  CHECK(inst.disk_count(2) == 1);
  CHECK(inst.disk_count(1) == 5);
  // Step 2, disk 1, second pair: 3 q_n + 2i - 1 = 34, reduced to 4 = q_{n-1} + 2i - 1.
  const std::vector<std::int64_t> step2 = tets_of(s, 2, 1);
  REQUIRE(step2.size() == 8);
  CHECK(step2[2] == 4);
  CHECK((3 * 11 + 1 - step2[2]) % 30 == 0);
  CHECK(step2[2] == inst.q[2] + 1);
  for (const auto& pl : s.placements) {
    if (pl.step == 2) CHECK((pl.kind == PatchKind::Trigonal) == (pl.pair == 1 || pl.pair == 4));
  }
}

TEST_CASE("schedule and step terms are two views of the same disks") {
  for (int n = 2; n <= 6; ++n) {
    const CompressionSchedule s = compression_schedule(n);
    const LensInstance inst = lens_instance(n);
    const int p = static_cast<int>(inst.pn());
    for (int k = 1; k <= n - 1; ++k) {
      for (const CompressionTerms& terms : step_terms(n, k)) {
        std::vector<std::int64_t> lead;
        std::vector<std::int64_t> inner;
        for (const auto& pl : s.placements) {
          if (pl.step != k || pl.disk != terms.disk) continue;
          if (pl.role == PatchRole::Leading && pl.pair <= inst.q[static_cast<std::size_t>(k)]) lead.push_back(pl.tet);
          if (pl.kind == PatchKind::Quadrilateral) inner.push_back(pl.tet);
        }
        std::vector<std::int64_t> t_reduced;
        for (auto i : terms.t_indices) t_reduced.push_back(wrap_index(i, p));
        std::vector<std::int64_t> s_reduced;
        for (auto i : terms.s_indices) s_reduced.push_back(wrap_index(i, p));
        CHECK(t_reduced == lead);
        CHECK(s_reduced == inner);
      }
    }
  }
}

TEST_CASE("construct_surface for n = 2, 3, 4") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const SurfaceReport r = construct_surface(n);
    for (const Check& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK(r.euler == 2 - n);
    CHECK(r.connected == true);
    CHECK(r.orientable == false);
    CHECK(r.orientable_propagation == false);
    CHECK(r.fundamental_criterion);
    const int p = r.p;
    CHECK(oracle::euler(p, r.q, raw(r.haken)) == 2 - n);
    CHECK(oracle::matching(p, r.q, raw(r.haken)));
  }
}

TEST_CASE("construct_surface reports skipped connectivity above the disk threshold") {
  AnalysisOptions options;
  options.max_disks_for_components = 10;
  const SurfaceReport r = construct_surface(3, options);
  CHECK(r.connectivity_skipped);
  CHECK_FALSE(r.connected.has_value());
  CHECK(r.passed());
}

TEST_CASE("sheet counts") {
  CHECK(sheet_count(construction_history(3).back(), 4) == 1);
  CHECK(sheet_count(construction_history(4).back(), 15) == 2);
  CHECK(sheet_count(construction_history(2).back(), 1) == 0);
  CHECK_THROWS_AS(sheet_count(construction_history(2).back(), 9), Error);
  CHECK_THROWS_AS(sheet_count(construction_history(2).back(), 0), Error);
}

TEST_CASE("sheet counts at all four positions for n = 2..7") {
  for (int n = 2; n <= 7; ++n) {
    const LensInstance inst = lens_instance(n);
    const QVector h = construction_history(n).back();
    const std::int64_t lo = inst.q_sum(n - 1);
    const std::int64_t hi = inst.q_sum(n);
    for (std::int64_t m : {lo, lo + 1, hi, hi + 1}) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(sheet_count(h, m) == n - 2);
    }
  }
}

TEST_CASE("euler bookkeeping identity") {
  for (int n = 2; n <= 12; ++n) {
    const LensInstance inst = lens_instance(n);
    std::int64_t chi = 2 - inst.pn() / 2;
    for (int k = 1; k <= n - 1; ++k) chi += inst.q[static_cast<std::size_t>(n - k + 1)] - 1;
    CHECK(chi == 2 - n);
  }
}

TEST_CASE("placement checks pass for n = 2..6") {
  for (int n = 2; n <= 6; ++n) {
    const PlacementReport rep = verify_placements(n);
    CAPTURE(n);
    for (const auto& v : rep.violations) {
      CAPTURE(v.message);
      CHECK(false);
    }
    CHECK(rep.assertions.at('a') > 0);
    CHECK(rep.assertions.at('c') > 0);
    CHECK(rep.assertions.at('f') > 0);
    if (n >= 3) {
      CHECK(rep.assertions.at('b') > 0);
      CHECK(rep.assertions.at('d') > 0);
      CHECK(rep.assertions.at('e') > 0);
    }
  }
}

TEST_CASE("forbidden tetrahedra of L(30,11) stay free") {
  std::set<std::int64_t> used;
  for (const auto& pl : compression_schedule(3).placements) used.insert(pl.tet);
  for (std::int64_t t : {11, 22, 30}) CHECK(used.count(t) == 0);
  std::set<std::int64_t> used2;
  for (const auto& pl : compression_schedule(2).placements) used2.insert(pl.tet);
  for (std::int64_t t : {3, 6, 8}) CHECK(used2.count(t) == 0);
}

TEST_CASE("lens_instance limits") {
  CHECK_THROWS_AS(lens_instance(0), Error);
  CHECK_THROWS_AS(lens_instance(40), Error);
  CHECK(lens_instance(5).pn() == 418);
  CHECK_THROWS_AS(compression_schedule(1), Error);
  CHECK_THROWS_AS(construct_surface(1), Error);
}
