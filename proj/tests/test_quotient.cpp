#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/random_fans.hpp"

using namespace torquot;
using namespace fixtures;

namespace {

// Every maximal cone of the quotient is the hull of the images of the faces
// of the input that land inside it.
bool reconstructs(const QuotientResult& q) {
  std::vector<Cone> allFaces = q.source.faceClosure().cones();
  std::vector<Cone> images;
  for (const auto& f : allFaces) images.push_back(imageCone(q.projection, f));
  for (const auto& tau : q.quotientFan.maximalCones()) {
    std::vector<Cone> inside;
    for (const auto& im : images)
      if (tau.containsCone(im)) inside.push_back(im);
    if (!(convexHull(tau.ambientRank(), inside) == tau)) return false;
  }
  return true;
}

std::string dump(const QuotientResult& q) { return canonicalDump(quotientResultToJson(q)); }

}  // namespace

TEST_CASE("affine plane by one-parameter subgroups") {
  SUBCASE("negative slope: quotient is a line") {
    for (auto l : {lattice(2, {{1, 0}}), lattice(2, {{1, -1}}), lattice(2, {{2, -3}}), lattice(2, {{1, -2}})}) {
      QuotientResult q = quotientFan(c2(), l);
      CHECK(q.enlargedKernel == l);
      CHECK(q.quotientFan == rayFan(1, {1}));
    }
    CHECK(quotientFan(c2(), lattice(2, {{1, -2}})).projection == IntegerMatrix{{2, 1}});
  }
  SUBCASE("positive slope: quotient is a point") {
    for (auto l : {lattice(2, {{1, 1}}), lattice(2, {{2, 3}}), lattice(2, {{1, 2}})}) {
      QuotientResult q = quotientFan(c2(), l);
      CHECK(q.enlargedKernel == SublatticeBasis::full(2));
      CHECK(q.quotientFan == zeroFan());
      CHECK(q.projection.rows() == 0);
    }
  }
}

TEST_CASE("quasifan before collapsing") {
  QuasifanResult q = quotientQuasifan(c2(), lattice(2, {{1, 2}}));
  CHECK(q.projection == IntegerMatrix{{2, -1}});
  CHECK(q.quasifan == fan(1, {cone(1, {{1}, {-1}})}));
  CHECK(q.trace.steps.empty());

  QuasifanResult r = quotientQuasifan(c2(), lattice(2, {{1, -2}}));
  CHECK(r.quasifan == rayFan(1, {1}));
}

TEST_CASE("blow-up by the anti-diagonal") {
  QuotientResult q = quotientFan(blowUp(), lattice(2, {{1, -1}}));
  CHECK(q.projection == IntegerMatrix{{1, 1}});
  CHECK(q.quotientFan == rayFan(1, {1}));
  CHECK(q.trace.steps.empty());
}

TEST_CASE("loop example") {
  QuotientResult q = quotientFan(loopExample(), lattice(3, {{0, 0, 1}}));
  CHECK(q.quotientFan == c2());
  CHECK(q.enlargedKernel == lattice(3, {{0, 0, 1}}));
  REQUIRE(q.trace.steps.size() == 1);
  const LoopStep& step = q.trace.steps.front();
  CHECK(step.replaced == LoopStep::Replaced::First);
  CHECK(step.replacement == cone(2, {{1, 0}, {0, 1}}));
  CHECK(q.trace.initialConeCount == 2);
  CHECK(step.coneCount == 1);
  CHECK(q.trace.measuresMonotone());
  CHECK(q.trace.lines().size() == 2);

  QuotientResult oracle = codim2QuotientOracle(loopExample(), lattice(3, {{0, 0, 1}}));
  CHECK(dump(oracle) == dump(q));
}

TEST_CASE("oracle on small fans") {
  CHECK(dump(codim2QuotientOracle(c2(), SublatticeBasis::zero(2))) == dump(quotientFan(c2(), SublatticeBasis::zero(2))));
  QuotientResult p = codim2QuotientOracle(p2(), SublatticeBasis::zero(2));
  CHECK(p.quotientFan == p2());
  CHECK(p.enlargedKernel.rank() == 0);
  CHECK_THROWS_AS(codim2QuotientOracle(c2(), lattice(2, {{1, -1}})), Error);
  ConeSystem improper = fan(2, {cone(2, {{1, 0}, {1, 2}}), cone(2, {{1, 1}, {0, 1}})});
  CHECK_THROWS_AS(codim2QuotientOracle(improper, SublatticeBasis::zero(2)), Error);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(quotientFan(c2(), SublatticeBasis(2, {v({2, 0})})), Error);
  CHECK_THROWS_AS(quotientFan(c2(), lattice(3, {{1, 0, 0}})), Error);
  CHECK_THROWS_AS(quotientFan(ConeSystem(2, {}), SublatticeBasis::zero(2)), Error);
}

TEST_CASE("general cone systems are accepted") {
  ConeSystem improper = fan(2, {cone(2, {{1, 0}, {1, 2}}), cone(2, {{1, 1}, {0, 1}})});
  QuotientResult q = quotientFan(improper, SublatticeBasis::zero(2));
  CHECK(q.quotientFan == c2());
  CHECK(q.trace.steps.size() == 1);
}

TEST_CASE("universal property on a known invariant map") {
  // (x, y) -> x + y is invariant under (1,-1) and maps the blow-up into R>=0.
  IntegerMatrix f{{1, 1}};
  QuotientResult q = quotientFan(blowUp(), lattice(2, {{1, -1}}));
  auto factor = factorThrough(f, q.projection);
  REQUIRE(factor.has_value());
  CHECK(isMapOfFans(*factor, q.quotientFan, rayFan(1, {1})).isMap);
}

TEST_CASE("random quotient properties") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(randomfans::uniform(rng, 2, 4));
    ConeSystem f = randomfans::randomFan(n, rng, 2);
    std::size_t k = static_cast<std::size_t>(randomfans::uniform(rng, 0, static_cast<long>(n)));
    SublatticeBasis l = randomfans::randomSublattice(n, k, rng);
    CAPTURE(f.toString());
    QuotientResult q = quotientFan(f, l);

    REQUIRE(validateFan(q.quotientFan).isFan());
    REQUIRE(isMapOfFans(q.projection, f, q.quotientFan).isMap);
    REQUIRE(q.trace.measuresMonotone());
    REQUIRE(reconstructs(q));
    for (const auto& b : l.basis()) REQUIRE(inSpan(q.enlargedKernel, b));

    // Quotienting the quotient by nothing changes nothing.
    QuotientResult again = quotientFan(q.quotientFan, SublatticeBasis::zero(q.quotientFan.ambientRank()));
    REQUIRE(again.quotientFan == q.quotientFan);
    REQUIRE(again.enlargedKernel.rank() == 0);

    // Quotienting by the enlarged kernel gives the same fan.
    QuotientResult tower = quotientFan(f, q.enlargedKernel);
    REQUIRE(tower.sameQuotient(q));

    // The projection is an L-invariant map of fans, so it factors through itself.
    auto self = factorThrough(q.projection, q.projection);
    REQUIRE(self.has_value());
    REQUIRE(*self == IntegerMatrix::identity(q.projection.rows()));
  }
}

TEST_CASE("random codimension-two oracle agreement") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(randomfans::uniform(rng, 3, 4));
    ConeSystem f = randomfans::randomFan(n, rng);
    SublatticeBasis l = randomfans::randomSublattice(n, n - 2, rng);
    CAPTURE(f.toString());
    REQUIRE(dump(quotientFan(f, l)) == dump(codim2QuotientOracle(f, l)));
  }
}

TEST_CASE("faces are generated by the generators they contain") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(randomfans::uniform(rng, 1, 4));
    std::vector<IntegerVector> gens;
    std::size_t count = static_cast<std::size_t>(randomfans::uniform(rng, 1, 6));
    for (std::size_t i = 0; i < count; ++i) gens.push_back(randomfans::randomVector(n, rng, 2));
    Cone c = Cone::fromGenerators(n, gens);
    for (const auto& face : faces(c)) {
      std::vector<IntegerVector> inside;
      for (const auto& g : gens)
        if (face.contains(g)) inside.push_back(g);
      REQUIRE(Cone::fromGenerators(n, inside) == face);
    }
  }
}
