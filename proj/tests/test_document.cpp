#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/random_fans.hpp"

using namespace torquot;
using namespace fixtures;

namespace {

void checkParseError(const std::string& text) {
  CAPTURE(text);
  try {
    fanFromJson(parseDocument(text));
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

}  // namespace

TEST_CASE("fan documents are canonical") {
  const char* expected =
      "{\n"
      "  \"formatVersion\": 1,\n"
      "  \"latticeRank\": 2,\n"
      "  \"rays\": [\n"
      "    [-1,-1],\n"
      "    [0,1],\n"
      "    [1,0]\n"
      "  ],\n"
      "  \"cones\": [\n"
      "    [0,1],\n"
      "    [0,2],\n"
      "    [1,2]\n"
      "  ]\n"
      "}\n";
  CHECK(canonicalDump(fanToJson(p2())) == expected);

  // Unsorted, non-primitive input canonicalizes to the same bytes.
  ConeSystem parsed = fanFromJson(parseDocument(R"({"formatVersion":1,"latticeRank":2,
      "rays":[[0,3],[2,0],[-1,-1]],"cones":[[2,1],[0,2],[1,0]]})"));
  CHECK(parsed == p2());
  CHECK(canonicalDump(fanToJson(parsed)) == expected);
}

TEST_CASE("zero fan") {
  CHECK(canonicalDump(fanToJson(zeroFan())) ==
        "{\n  \"formatVersion\": 1,\n  \"latticeRank\": 0,\n  \"rays\": [],\n  \"cones\": [[]]\n}\n");
  CHECK(fanFromJson(fanToJson(zeroFan())) == zeroFan());
}

TEST_CASE("lineality generators") {
  ConeSystem halfplane = fanFromJson(parseDocument(R"({"formatVersion":1,"latticeRank":2,
      "rays":[[0,1]],"linealityGenerators":[[1,0]],"cones":[[0]]})"));
  CHECK(halfplane == fan(2, {cone(2, {{0, 1}, {1, 0}, {-1, 0}})}));
  // Written back with the lineality as a pair of opposite rays.
  CHECK(fanFromJson(fanToJson(halfplane)) == halfplane);
  CHECK(fanToJson(halfplane)["rays"].size() == 3);
}

TEST_CASE("parse errors") {
  checkParseError(R"({"formatVersion":1,"latticeRank":2,"rays":[[1,0]],"cones":[[0]],"extra":1})");
  checkParseError(R"({"formatVersion":2,"latticeRank":2,"rays":[[1,0]],"cones":[[0]]})");
  checkParseError(R"({"formatVersion":1,"latticeRank":2,"rays":[[0,0]],"cones":[[0]]})");
  checkParseError(R"({"formatVersion":1,"latticeRank":2,"rays":[[1,0]],"cones":[[1]]})");
  checkParseError(R"({"formatVersion":1,"latticeRank":2,"rays":[[1,0,0]],"cones":[[0]]})");
  checkParseError(R"({"formatVersion":1,"latticeRank":2,"rays":[[1,"x"]],"cones":[[0]]})");
  checkParseError(R"({"formatVersion":1,"latticeRank":2,"rays":[[1,0]]})");
  checkParseError(R"({"formatVersion":1,"latticeRank":2,"ray":[[1,0]],"cones":[[0]]})");
  checkParseError("{not json");
}

TEST_CASE("big integers") {
  Integer big("123456789012345678901234567890");
  CHECK(integerToJson(big) == Json("123456789012345678901234567890"));
  CHECK(integerFromJson(integerToJson(big)) == big);
  CHECK(integerToJson(Integer(-7)) == Json(-7));
  CHECK_THROWS_AS(integerFromJson(Json("12a")), Error);
  CHECK_THROWS_AS(integerFromJson(Json(1.5)), Error);
}

TEST_CASE("sublattice documents") {
  Json doc = parseDocument(R"({"formatVersion":1,"ambientRank":2,"basis":[[2,4]]})");
  CHECK_THROWS_AS(sublatticeFromJson(doc), Error);
  CHECK(sublatticeFromJson(doc, true) == lattice(2, {{1, 2}}));
  CHECK_THROWS_AS(sublatticeFromJson(parseDocument(R"({"formatVersion":1,"ambientRank":2,"basis":[[1,1],[2,2]]})")),
                  Error);
  SublatticeBasis l = lattice(3, {{1, 0, 2}, {0, 1, 1}});
  CHECK(sublatticeFromJson(sublatticeToJson(l)) == l);
}

TEST_CASE("matrix and cone documents") {
  IntegerMatrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(matrixFromJson(matrixToJson(m)) == m);
  CHECK(matrixFromJson(matrixToJson(IntegerMatrix(0, 2))) == IntegerMatrix(0, 2));
  CHECK_THROWS_AS(matrixFromJson(parseDocument(R"({"formatVersion":1,"rows":2,"cols":1,"entries":[[1]]})")), Error);
  Cone c = cone(3, {{1, 0, 0}, {1, 1, 1}, {0, 1, 0}});
  CHECK(coneFromJson(coneToJson(c)) == c);
}

TEST_CASE("quotient result documents") {
  QuotientResult q = quotientFan(c2(), lattice(2, {{1, -2}}));
  Json j = quotientResultToJson(q);
  CHECK(j["projection"]["entries"] == Json::parse("[[2,1]]"));
  CHECK(fanFromJson(j["quotientFan"]) == rayFan(1, {1}));
  CHECK_FALSE(j.contains("trace"));
  Json t = quotientResultToJson(quotientFan(loopExample(), lattice(3, {{0, 0, 1}})), true);
  REQUIRE(t["trace"].size() == 2);
  CHECK(t["trace"][0] == "init cones=2 incidences=6");
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(randomfans::uniform(rng, 1, 4));
    ConeSystem f = randomfans::randomFan(n, rng, 2);
    std::string text = canonicalDump(fanToJson(f));
    ConeSystem back = fanFromJson(parseDocument(text));
    REQUIRE(back == f);
    REQUIRE(canonicalDump(fanToJson(back)) == text);
    // Non-canonical layout parses to the same canonical bytes.
    REQUIRE(canonicalDump(fanToJson(fanFromJson(parseDocument(fanToJson(f).dump())))) == text);
  }
}
