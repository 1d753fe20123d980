#include <doctest.h>

#include <numeric>
#include <set>

#include "lensurf/errors.hpp"
#include "lensurf/lens_triangulation.hpp"
#include "oracles.hpp"

using namespace lensurf;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Consistency;
}

}  // namespace

TEST_CASE("L(8,3) has ten edge classes with the expected degrees") {
  const Triangulation tri = build_triangulation(LensParams::make(8, 3));
  CHECK(tri.edge_classes().size() == 10);
  CHECK(edge_degree(tri, "E_v") == 8);
  CHECK(edge_degree(tri, "E_h") == 8);
  CHECK(edge_degree(tri, "e_1") == 4);
  CHECK(tri.vertex_classes().size() == 2);
  CHECK(tri.glued_face_count() == 16);
}

TEST_CASE("L(2,1) is the smallest instance") {
  const Triangulation tri = build_triangulation(LensParams::make(2, 1));
  CHECK(tri.size() == 2);
  CHECK(tri.edge_classes().size() == 4);
  CHECK(edge_degree(tri, "E_v") == 2);
  CHECK(edge_degree(tri, "e_1") == 4);
  CHECK(tri.euler_characteristic() == 0);
}

TEST_CASE("parameter validation") {
  CHECK(kind_of([] { LensParams::make(8, 6); }) == ErrorKind::NonCoprime);
  CHECK(kind_of([] { LensParams::make(7, 0); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { LensParams::make(1, 1); }) == ErrorKind::OutOfRange);
  CHECK(LensParams::make(8, 11).q() == 3);
  CHECK(LensParams::make(8, -5).q() == 3);
}

TEST_CASE("edge names parse and reject garbage") {
  CHECK(EdgeName::parse("E_v") == EdgeName::vertical());
  CHECK(EdgeName::parse("e_17") == EdgeName::spoke(17));
  CHECK(EdgeName::parse("e_3").to_string() == "e_3");
  for (const char* bad : {"", "E_x", "e_", "e_0", "e_-1", "e_3a", "ev"}) {
    CHECK(kind_of([&] { EdgeName::parse(bad); }) == ErrorKind::UnknownEdge);
  }
  const Triangulation tri = build_triangulation(LensParams::make(8, 3));
  CHECK(kind_of([&] { edge_degree(tri, "e_9"); }) == ErrorKind::UnknownEdge);
}

TEST_CASE("edge classes agree with the vertex-label model") {
  for (int p = 2; p <= 24; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      const Triangulation tri = build_triangulation(LensParams::make(p, q));
      const oracle::Census census = oracle::census(p, q);
      CHECK(tri.edge_classes().size() == census.degree.size());
      CHECK(static_cast<int>(tri.vertex_classes().size()) == census.vertex_classes);
      for (const EdgeClass& e : tri.edge_classes()) CHECK(e.degree() == census.degree.at(e.name.to_string()));
      for (int t = 1; t <= p; ++t) {
        for (int a = 0; a < 4; ++a) {
          for (int b = a + 1; b < 4; ++b) {
            const EdgeClass& e = tri.edge_classes()[tri.edge_class_index(t, a, b)];
            CHECK(e.name.to_string() == oracle::edge_name(p, q, t, a, b));
          }
        }
      }
    }
  }
}

TEST_CASE("gluings agree with the vertex-label model and form an involution") {
  for (auto [p, q] : {std::pair{2, 1}, {3, 1}, {5, 2}, {8, 3}, {30, 11}}) {
    const Triangulation tri = build_triangulation(LensParams::make(p, q));
    CHECK(tri.gluings().size() == static_cast<std::size_t>(4 * p));
    for (const Gluing& g : tri.gluings()) {
      auto [partner, map] = oracle::glue(p, q, {g.face.tet, g.face.opposite});
      CHECK(g.partner.tet == partner.tet);
      CHECK(g.partner.opposite == partner.opposite);
      for (int s = 0; s < 4; ++s) {
        if (s != g.face.opposite) CHECK(g.slot_map[static_cast<std::size_t>(s)] == map[static_cast<std::size_t>(s)]);
      }
      const Gluing& back = tri.gluing(g.partner);
      CHECK(back.partner == g.face);
    }
  }
}

TEST_CASE("tetrahedra carry consecutive equatorial labels") {
  const Triangulation tri = build_triangulation(LensParams::make(8, 3));
  CHECK(tri.tetrahedron(1).low == 1);
  CHECK(tri.tetrahedron(1).high == 2);
  CHECK(tri.tetrahedron(8).high == 1);
  CHECK(kind_of([&] { tri.tetrahedron(9); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("wrap_index") {
  CHECK(wrap_index(0, 8) == 8);
  CHECK(wrap_index(9, 8) == 1);
  CHECK(wrap_index(-1, 8) == 7);
  CHECK(wrap_index(34, 30) == 4);
}
