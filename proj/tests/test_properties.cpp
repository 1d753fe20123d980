#include <doctest.h>

#include <random>

#include "lensurf/construction.hpp"
#include "lensurf/fundamentality.hpp"
#include "oracles.hpp"

using namespace lensurf;

namespace {

oracle::Counts raw(const HakenVector& v) { return {v.counts().begin(), v.counts().end()}; }

// Surfaces that can be added without breaking the square condition: vertex
// links and the odd t_i (Q2 on odd blocks, Q3 on even ones when q is odd).
struct Family {
  LensParams params;
  Triangulation tri;
  std::vector<HakenVector> members;
};

Family family(int p, int q) {
  const LensParams params = LensParams::make(p, q);
  Family f{params, build_triangulation(params), {}};
  f.members.push_back(vertex_link(f.tri, 0));
  f.members.push_back(vertex_link(f.tri, 1));
  for (int i = 1; i <= p; i += 2) f.members.push_back(reconstruct_tdisks(f.tri, basis_t(p, q, i)));
  return f;
}

const std::vector<std::pair<int, int>> kInstances{{8, 3}, {12, 5}, {14, 3}, {30, 11}};

}  // namespace

TEST_CASE("edge weights and euler characteristic are linear") {
  std::mt19937 rng(1016);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (auto [p, q] : kInstances) {
    const Family f = family(p, q);
    for (int trial = 0; trial < 40; ++trial) {
      HakenVector sum(p);
      std::int64_t chi = 0;
      std::map<EdgeName, std::int64_t> weights;
      for (const HakenVector& m : f.members) {
        const int c = coeff(rng);
        if (c == 0) continue;
        sum += c * m;
        chi += c * euler_characteristic(f.tri, m);
        for (const auto& [name, w] : edge_weights(f.tri, m)) weights[name] += c * w;
      }
      if (sum.is_zero()) continue;
      CAPTURE(p);
      CHECK(euler_characteristic(f.tri, sum) == chi);
      CHECK(oracle::euler(p, q, raw(sum)) == chi);
      for (const auto& [name, w] : edge_weights(f.tri, sum)) CHECK(w == weights[name]);
    }
  }
}

TEST_CASE("reconstruction round trip and vertex-class minimality") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> coeff(0, 2);
  for (auto [p, q] : kInstances) {
    const Triangulation tri = build_triangulation(LensParams::make(p, q));
    for (int trial = 0; trial < 40; ++trial) {
      QVector qv(p);
      for (int i = 1; i <= p; i += 2) qv += coeff(rng) * basis_t(p, q, i);
      const HakenVector v = reconstruct_tdisks(tri, qv);
      CHECK(quad_part(v) == qv);
      CHECK(oracle::matching(p, q, raw(v)));
      std::int64_t lo_pm = INT64_MAX;
      std::int64_t lo_eq = INT64_MAX;
      for (int t = 1; t <= p; ++t) {
        lo_pm = std::min({lo_pm, v.at(t, DiskKind::TriVPlus), v.at(t, DiskKind::TriVMinus)});
        lo_eq = std::min({lo_eq, v.at(t, DiskKind::TriVLow), v.at(t, DiskKind::TriVHigh)});
      }
      CHECK(lo_pm == 0);
      CHECK(lo_eq == 0);
      // Extra vertex links disappear again.
      const HakenVector padded = v + coeff(rng) * vertex_link(tri, 0) + coeff(rng) * vertex_link(tri, 1);
      CHECK(reconstruct_tdisks(tri, quad_part(padded)) == v);
    }
  }
}

TEST_CASE("oracle verdicts are deterministic") {
  std::mt19937 rng(99);
  const Family f = family(8, 3);
  std::uniform_int_distribution<std::size_t> pick(0, f.members.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const HakenVector v = f.members[pick(rng)] + f.members[pick(rng)];
    const auto a = minimality_oracle(f.tri, v);
    const auto b = minimality_oracle(f.tri, v);
    CHECK(a.status == b.status);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes_explored == b.nodes_explored);
    if (a.witness) CHECK(verify_haken_witness(f.tri, v, *a.witness));
  }
}

TEST_CASE("every intermediate h_k is non-negative and square for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    const Triangulation tri = build_triangulation(lens_instance(n).params());
    const std::vector<QVector> hs = construction_history(n);
    CHECK(hs.size() == static_cast<std::size_t>(n));
    for (const QVector& h : hs) {
      CHECK(h.is_non_negative());
      CHECK(h.square_condition());
      CHECK(is_admissible(tri, h));
    }
  }
}
