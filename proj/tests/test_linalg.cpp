#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/random_fans.hpp"

using namespace torquot;
using fixtures::v;

namespace {

IntegerMatrix randomMatrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, long bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = randomfans::uniform(rng, -bound, bound);
  return m;
}

bool isRowHermite(const IntegerMatrix& h) {
  std::size_t lastPivot = 0;
  bool seenZero = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (p == h.cols()) {
      seenZero = true;
      continue;
    }
    if (seenZero) return false;
    if (i > 0 && p <= lastPivot) return false;
    if (h(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
    lastPivot = p;
  }
  return true;
}

}  // namespace

TEST_CASE("vector helpers") {
  CHECK(content(v({4, -6, 10})) == 2);
  CHECK(primitive(v({4, -6, 10})) == v({2, -3, 5}));
  CHECK(primitive(v({0, 0})) == v({0, 0}));
  CHECK(dot(v({1, 2, 3}), v({-1, 0, 2})) == 5);
  CHECK(compareLex(v({0, 1}), v({1, 0})) < 0);
  CHECK(compareLex(v({-1, 5}), v({-1, 5})) == 0);
  CHECK(toString(v({1, -2})) == "(1,-2)");
}

TEST_CASE("rank and determinant") {
  CHECK(rank(IntegerMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntegerMatrix{{1, 2}, {3, 4}}) == 2);
  CHECK(rank(IntegerMatrix(0, 3)) == 0);
  CHECK(determinant(IntegerMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(determinant(IntegerMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}) == -3);
  CHECK(isUnimodular(IntegerMatrix{{2, 1}, {1, 1}}));
  CHECK_FALSE(isUnimodular(IntegerMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("hermite normal form") {
  IntegerMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  HermiteDecomposition h = hermiteNormalForm(m);
  CHECK(isRowHermite(h.form));
  CHECK(h.transform * m == h.form);
  CHECK(isUnimodular(h.transform));
  CHECK(h.form == IntegerMatrix{{2, 4, 4}, {0, 6, 0}, {0, 0, 12}});

  SUBCASE("column form is the transpose") {
    HermiteDecomposition c = columnHermiteForm(m);
    CHECK(c.form == hermiteNormalForm(m.transpose()).form.transpose());
    CHECK(m * c.transform == c.form);
  }
}

TEST_CASE("smith normal form") {
  IntegerMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithDecomposition s = smithNormalForm(m);
  CHECK(s.left * m * s.right == s.form);
  CHECK(s.form(0, 0) == 2);
  CHECK(s.form(1, 1) == 6);
  CHECK(s.form(2, 2) == 12);
  CHECK(isUnimodular(s.left));
  CHECK(isUnimodular(s.right));
}

TEST_CASE("random normal forms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = static_cast<std::size_t>(randomfans::uniform(rng, 1, 4));
    std::size_t c = static_cast<std::size_t>(randomfans::uniform(rng, 1, 4));
    IntegerMatrix m = randomMatrix(r, c, rng, 5);
    HermiteDecomposition h = hermiteNormalForm(m);
    REQUIRE(isRowHermite(h.form));
    REQUIRE(h.transform * m == h.form);
    REQUIRE(isUnimodular(h.transform));
    SmithDecomposition s = smithNormalForm(m);
    REQUIRE(s.left * m * s.right == s.form);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) REQUIRE(s.form(i, j) == 0);
    std::size_t d = std::min(r, c);
    for (std::size_t i = 0; i + 1 < d; ++i)
      if (s.form(i + 1, i + 1) != 0) REQUIRE(mpz_divisible_p(s.form(i + 1, i + 1).get_mpz_t(), s.form(i, i).get_mpz_t()));
  }
}

TEST_CASE("sublattices") {
  SublatticeBasis l(3, {v({2, 0, 0}), v({0, 1, 1})});
  CHECK(l.rank() == 2);
  CHECK_FALSE(l.isPrimitive());
  CHECK(saturate(l).isPrimitive());
  CHECK(saturate(l) == SublatticeBasis(3, {v({1, 0, 0}), v({0, 1, 1})}));
  CHECK_THROWS_AS(SublatticeBasis(2, {v({1, 2}), v({2, 4})}), Error);
  CHECK(SublatticeBasis::saturatedSpan(2, {v({2, 4}), v({1, 2})}) == SublatticeBasis(2, {v({1, 2})}));
  CHECK(SublatticeBasis::full(2).isPrimitive());
  CHECK(SublatticeBasis::zero(3).rank() == 0);
  CHECK(inSpan(l, v({1, 3, 3})));
  CHECK_FALSE(inSpan(l, v({1, 3, 2})));
}

TEST_CASE("kernel basis") {
  SublatticeBasis k = kernelBasis(IntegerMatrix{{1, 1, 1}});
  CHECK(k.rank() == 2);
  CHECK(k.isPrimitive());
  for (const auto& b : k.basis()) CHECK(dot(b, v({1, 1, 1})) == 0);
  CHECK(kernelBasis(IntegerMatrix{{1, 0}, {0, 1}}).rank() == 0);
  CHECK(kernelBasis(IntegerMatrix(0, 2)) == SublatticeBasis::full(2));
}

TEST_CASE("quotient projections") {
  CHECK(quotientProjection(fixtures::lattice(2, {{1, -1}})) == IntegerMatrix{{1, 1}});
  CHECK(quotientProjection(fixtures::lattice(2, {{1, -2}})) == IntegerMatrix{{2, 1}});
  CHECK(quotientProjection(fixtures::lattice(2, {{1, 2}})) == IntegerMatrix{{2, -1}});
  CHECK(quotientProjection(SublatticeBasis::full(2)).rows() == 0);
  CHECK(quotientProjection(SublatticeBasis::zero(2)) == IntegerMatrix::identity(2));
  CHECK_THROWS_AS(quotientProjection(SublatticeBasis(2, {v({2, 0})})), Error);
}

TEST_CASE("random projections kill exactly the sublattice") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(randomfans::uniform(rng, 1, 5));
    std::size_t k = static_cast<std::size_t>(randomfans::uniform(rng, 0, static_cast<long>(n)));
    SublatticeBasis l = randomfans::randomSublattice(n, k, rng, 3);
    IntegerMatrix p = quotientProjection(l);
    REQUIRE(p.rows() == n - k);
    for (const auto& b : l.basis()) REQUIRE(isZero(p.apply(b)));
    REQUIRE(kernelBasis(p) == l);
    auto r = rightInverse(p);
    REQUIRE(r.has_value());
    REQUIRE(p * *r == IntegerMatrix::identity(n - k));
    REQUIRE(preimage(p, SublatticeBasis::zero(n - k)) == l);
    REQUIRE(preimage(p, SublatticeBasis::full(n - k)) == SublatticeBasis::full(n));
  }
}

TEST_CASE("factor through") {
  IntegerMatrix p{{1, 1, 0}, {0, 0, 1}};
  IntegerMatrix f{{2, 2, 1}};
  auto x = factorThrough(f, p);
  REQUIRE(x.has_value());
  CHECK(*x * p == f);
  CHECK(*x == IntegerMatrix{{2, 1}});
  CHECK_FALSE(factorThrough(IntegerMatrix{{1, 0, 0}}, p).has_value());
}

TEST_CASE("orthogonal projection") {
  CHECK(projectOrthogonal(v({1, 1}), {v({1, -1})}) == v({1, 1}));
  CHECK(projectOrthogonal(v({1, 0}), {v({1, -1})}) == v({1, 1}));
  CHECK(projectOrthogonal(v({3, 1, 2}), {}) == v({3, 1, 2}));
}
