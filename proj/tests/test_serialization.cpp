#include <doctest.h>

#include "lensurf/errors.hpp"
#include "lensurf/serialization.hpp"

using namespace lensurf;

TEST_CASE("triangulation JSON") {
  const Json doc = to_json(build_triangulation(LensParams::make(8, 3)));
  CHECK(doc.at("p") == 8);
  CHECK(doc.at("tetrahedra").size() == 8);
  CHECK(doc.at("tetrahedra")[0].at("vertices") == Json::array({"v+", "v-", "v_1", "v_2"}));
  CHECK(doc.at("gluings").size() == 16);
  CHECK(doc.at("edges").size() == 10);
  CHECK(doc.at("edges")[0].at("name") == "E_v");
  CHECK(doc.at("edges")[0].at("degree") == 8);
  CHECK(doc.at("vertices").size() == 2);
}

TEST_CASE("Haken vector round trip") {
  const LensParams params = LensParams::make(8, 3);
  const Triangulation tri = build_triangulation(params);
  const HakenVector v = vertex_link(tri, 1) + heegaard_torus(tri);
  const Json doc = to_json(params, v);
  CHECK(doc.at("layout") == kHakenLayout);
  const HakenInput back = parse_haken(Json::parse(doc.dump()));
  CHECK(back.params == params);
  CHECK(back.vector == v);
  CHECK(to_csv(v).rfind("tet,Tv+,Tv-,Tvlow,Tvhigh,Q1,Q2,Q3\n1,", 0) == 0);
}

TEST_CASE("Q vector round trip") {
  const LensParams params = LensParams::make(8, 3);
  const QVector qv = h0(params);
  const Json doc = to_json(params, qv);
  CHECK(doc.dump() ==
        R"({"blocks":[[0,1,0],[0,0,1],[0,1,0],[0,0,1],[0,1,0],[0,0,1],[0,1,0],[0,0,1]],"p":8,"q":3})");
  CHECK(parse_qvector(doc).vector == qv);
}

TEST_CASE("malformed inputs") {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Consistency;
  };
  CHECK(kind([] { parse_qvector(Json::array()); }) == ErrorKind::Parse);
  CHECK(kind([] { parse_qvector(Json{{"p", 8}, {"q", 3}}); }) == ErrorKind::Parse);
  CHECK(kind([] { parse_qvector(Json{{"p", 8}, {"q", 3}, {"blocks", Json::array({{0, 1}})}}); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind([] { parse_qvector(Json{{"p", 8}, {"q", 6}, {"blocks", Json::array()}}); }) == ErrorKind::NonCoprime);
  CHECK(kind([] { parse_haken(Json{{"p", 8}, {"q", 3}, {"counts", Json::array({1, 2})}}); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind([] { parse_haken(Json{{"p", 8}, {"q", 3}, {"layout", "other"}, {"counts", Json::array()}}); }) ==
        ErrorKind::Parse);
  CHECK(kind([] { parse_haken(Json{{"p", "8"}, {"q", 3}, {"counts", Json::array()}}); }) == ErrorKind::Parse);
}

TEST_CASE("sequence and crosscap JSON") {
  CHECK(to_json(lens_sequence(2, 2)).dump() == R"({"kappa":2,"terms":[[0,1],[2,1],[8,3]]})");
  CHECK(to_json(bredon_wood(8, 3)).dump() == R"({"b":[2,0,2],"cf":[2,1,2],"crosscap":2})");
}

TEST_CASE("big integers become strings") {
  CHECK(bigint_json(BigInt(5)) == 5);
  const BigInt big = BigInt(1) << 70;
  CHECK(bigint_json(big) == big.str());
}

TEST_CASE("schedule CSV") {
  const std::string csv = to_csv(compression_schedule(2));
  CHECK(csv ==
        "step,disk,pair,role,tet,kind,region\n"
        "1,1,1,leading,1,trigonal,first\n"
        "1,1,1,following,2,trigonal,first\n"
        "1,1,2,leading,4,trigonal,second\n"
        "1,1,2,following,5,trigonal,second\n");
}

TEST_CASE("surface report JSON") {
  const Json doc = to_json(construct_surface(2));
  CHECK(doc.at("euler") == 0);
  CHECK(doc.at("connected") == true);
  CHECK(doc.at("orientable") == false);
  CHECK(doc.at("weights").at("E_v") == 1);
  CHECK(doc.at("passed") == true);
  CHECK(doc.at("haken").at("counts").size() == 56);
}
