#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "kneserlab/enumerate.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/operators.hpp"
#include "kneserlab/subspace.hpp"

using namespace kneserlab;

namespace {

struct Gf16 : ::testing::Test {
  TowerPtr L = finite_field(2, 4);
  Element one = L->one();
  Element a = L->basis(1);
  Element a2 = L->basis(2);
  Element a3 = L->basis(3);
  Subspace gf4 = span(*L, {one, a * a + a});
};

// All elements of a subspace over a finite base, by brute force.
std::vector<Element> elements_of(const Subspace& x) {
  const auto& tower = x.ambient();
  const auto field = tower.base().elements();
  std::vector<Element> out{tower.zero()};
  for (const auto& b : x.basis()) {
    std::vector<Element> next;
    for (const auto& e : out)
      for (const auto& c : field) next.push_back(e + c * b);
    out = std::move(next);
  }
  return out;
}

std::vector<Element> all_elements(const Tower& t) { return elements_of(full_space(t)); }

Subspace random_subspace(const Tower& t, std::mt19937_64& rng) {
  const std::size_t k = rng() % (t.dim() + 1);
  std::vector<Element> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(random_element(t, rng, 1));
  return span(t, vs);
}

}  // namespace

TEST_F(Gf16, SpanExamples) {
  EXPECT_EQ(span(*L, {}).dim(), 0u);
  EXPECT_EQ(span(*L, {a, a}).dim(), 1u);
  EXPECT_EQ(span(*L, {one, a, one + a}).dim(), 2u);
}

TEST_F(Gf16, RrefIsCanonical) {
  EXPECT_EQ(span(*L, {one + a, a}), span(*L, {a, one}));
  const Subspace x = span(*L, {one + a + a3, a2 + a3});
  for (std::size_t i = 0; i < x.dim(); ++i) {
    EXPECT_TRUE(x.rows()[i][x.pivots()[i]].is_one());
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (j != i) EXPECT_TRUE(x.rows()[j][x.pivots()[i]].is_zero());
  }
}

TEST_F(Gf16, SumAndIntersectionExamples) {
  const Subspace x = span(*L, {one}), y = span(*L, {a});
  EXPECT_EQ(sum(x, y).dim(), 2u);
  EXPECT_EQ(intersect(x, y).dim(), 0u);
  EXPECT_EQ(sum(x, x), x);
  EXPECT_EQ(intersect(x, x), x);
  EXPECT_EQ(intersect(span(*L, {one, a}), span(*L, {a, a2})), span(*L, {a}));
}

TEST_F(Gf16, ProductExamples) {
  const Subspace s = span(*L, {one, a});
  EXPECT_EQ(product(s, s), span(*L, {one, a, a2}));
  EXPECT_EQ(product(gf4, gf4), gf4);
  EXPECT_EQ(product(s, unit_space(*L)), s);
}

TEST_F(Gf16, BoundaryExamples) {
  const Subspace s = span(*L, {one, a, a2});
  EXPECT_EQ(boundary(s, unit_space(*L)), 2u);
  EXPECT_EQ(boundary(s, full_space(*L)), 0u);
  EXPECT_EQ(boundary(span(*L, {one, a}), span(*L, {one, a, a2})), 1u);
  try {
    boundary(span(*L, {a}), unit_space(*L));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnitNotInSpan);
  }
  // permissive variant: dim XS - dim(X n XS)
  EXPECT_EQ(boundary(span(*L, {a}), unit_space(*L), BoundaryMode::permissive), 1u);
}

TEST(InseparableProduct, RootSquaresIntoBase) {
  auto L = inseparable(2, {"t"});
  const Subspace s = span(*L, {L->one(), L->basis(1)});
  EXPECT_EQ(product(s, s), s);
}

TEST(Subspace, MixingTowersThrows) {
  auto a = finite_field(2, 3), b = finite_field(2, 3);
  try {
    (void)sum(unit_space(*a), unit_space(*b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TowerMismatch);
  }
}

TEST(Subspace, SerializationRoundTrip) {
  auto L = inseparable(2, {"t", "s"});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const Subspace x = random_subspace(*L, rng);
    EXPECT_EQ(deserialize_subspace(*L, x.serialize()), x);
  }
}

TEST(Subspace, IntersectionMatchesBruteForceMembership) {
  auto L = finite_field(3, 3);
  std::mt19937_64 rng(1);
  const auto everything = all_elements(*L);
  for (int i = 0; i < 40; ++i) {
    const Subspace x = random_subspace(*L, rng), y = random_subspace(*L, rng);
    const Subspace z = intersect(x, y);
    std::size_t count = 0;
    for (const auto& e : everything)
      if (x.contains(e) && y.contains(e)) {
        ++count;
        ASSERT_TRUE(z.contains(e));
      }
    std::size_t expected = 1;
    for (std::size_t k = 0; k < z.dim(); ++k) expected *= 3;
    ASSERT_EQ(count, expected);
    ASSERT_EQ(sum(x, y).dim() + z.dim(), x.dim() + y.dim());
  }
}

TEST(Subspace, ProductPropertiesOnRandomSpaces) {
  for (auto L : {finite_field(2, 5), inseparable(2, {"t", "s"})}) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 40; ++i) {
      const Subspace x = random_subspace(*L, rng), y = random_subspace(*L, rng), z = random_subspace(*L, rng);
      ASSERT_EQ(product(x, y), product(y, x));
      ASSERT_EQ(product(product(x, y), z), product(x, product(y, z)));
      ASSERT_LE(product(x, y).dim(), x.dim() * y.dim());
      ASSERT_TRUE(product(sum(x, z), y).contains(product(x, y)));
      ASSERT_EQ(product(x, unit_space(*L)), x);
      if (!x.is_zero() && !y.is_zero())
        ASSERT_GE(product(x, y).dim() + stabilizer(product(x, y)).dim(), x.dim() + y.dim());
    }
  }
}

TEST(Subspace, SnakeIdentity) {
  auto L = finite_field(2, 5);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Subspace a1 = random_subspace(*L, rng), b1 = random_subspace(*L, rng);
    const Subspace a = intersect(a1, random_subspace(*L, rng)), b = intersect(b1, random_subspace(*L, rng));
    const long lhs = static_cast<long>(sum(a1, b1).dim()) - static_cast<long>(sum(a, b).dim());
    const long rhs = static_cast<long>(a1.dim() - a.dim()) + static_cast<long>(b1.dim() - b.dim()) -
                     (static_cast<long>(intersect(a1, b1).dim()) - static_cast<long>(intersect(a, b).dim()));
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(Subspace, SubmodularityOnInseparableTower) {
  auto L = inseparable(2, {"t", "s"});
  std::mt19937_64 rng(21);
  const Subspace s = span(*L, {L->one(), L->basis(1), L->basis(2)});
  for (int i = 0; i < 60; ++i) {
    const Subspace x = random_subspace(*L, rng), y = random_subspace(*L, rng);
    ASSERT_LE(boundary(s, sum(x, y)) + boundary(s, intersect(x, y)), boundary(s, x) + boundary(s, y));
  }
}

TEST_F(Gf16, SaturationExamples) {
  const Subspace s = span(*L, {one, a});
  EXPECT_EQ(saturate(s, full_space(*L)), full_space(*L));
  EXPECT_EQ(saturate(s, span(*L, {one, a, a2})), full_space(*L));
  EXPECT_EQ(saturate(gf4, unit_space(*L)), gf4);
}

TEST(Saturation, InseparableExample) {
  auto L = inseparable(2, {"t", "s"});
  const Subspace s = span(*L, {L->one(), L->basis(1), L->basis(2)});
  EXPECT_EQ(saturate(s, unit_space(*L)), unit_space(*L));
}

TEST_F(Gf16, PerpAndDualExamples) {
  const DualityContext ctx(L, L->default_sigma());
  EXPECT_EQ(perp(ctx, zero_space(*L)), full_space(*L));
  EXPECT_EQ(perp(ctx, full_space(*L)), zero_space(*L));
  const Subspace gp = perp(ctx, gf4);
  EXPECT_EQ(gp.dim(), 2u);
  for (const auto& x : gf4.basis())
    for (const auto& y : gp.basis()) EXPECT_TRUE(ctx.pairing(x, y).is_zero());
  const Subspace s = span(*L, {one, a});
  EXPECT_EQ(dual(ctx, s, full_space(*L)), zero_space(*L));
  EXPECT_EQ(dual(ctx, s, zero_space(*L)), full_space(*L));
  EXPECT_EQ(dual(ctx, s, unit_space(*L)), perp(ctx, s));
  EXPECT_EQ(dual(ctx, s, unit_space(*L)).dim(), 2u);
}

TEST(Perp, MatchesBruteForceOverGF3) {
  auto L = finite_field(3, 3);
  const auto everything = all_elements(*L);
  std::mt19937_64 rng(2);
  const DualityContext ctx(L, {Scalar::from_int(L->base(), 1), Scalar::from_int(L->base(), 2),
                               Scalar::from_int(L->base(), 0)});
  for (int i = 0; i < 25; ++i) {
    const Subspace x = random_subspace(*L, rng);
    const Subspace p = perp(ctx, x);
    ASSERT_EQ(p.dim() + x.dim(), L->dim());
    std::size_t count = 0;
    for (const auto& y : everything) {
      bool orth = true;
      for (const auto& b : x.basis()) orth = orth && ctx.pairing(b, y).is_zero();
      if (orth) {
        ++count;
        ASSERT_TRUE(p.contains(y));
      }
    }
    std::size_t expected = 1;
    for (std::size_t k = 0; k < p.dim(); ++k) expected *= 3;
    ASSERT_EQ(count, expected);
    ASSERT_EQ(perp(ctx, p), x);
  }
}

TEST(DualityContextTest, RejectsZeroForm) {
  auto L = finite_field(2, 3);
  try {
    DualityContext ctx(L, std::vector<Scalar>(3, Scalar::zero(L->base())));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateForm);
  }
}

TEST_F(Gf16, StabilizerExamples) {
  EXPECT_EQ(stabilizer(gf4), gf4);
  EXPECT_EQ(stabilizer(span(*L, {one, a})), unit_space(*L));
  EXPECT_EQ(stabilizer(zero_space(*L)), full_space(*L));
  EXPECT_EQ(stabilizer(full_space(*L)), full_space(*L));
}

TEST(Stabilizer, InseparableExample) {
  auto L = inseparable(2, {"t", "s"});
  const Element uv = L->basis(1) + L->basis(2);
  const Subspace x = span(*L, {L->one(), uv});
  EXPECT_EQ(stabilizer(x), x);
  EXPECT_TRUE(is_subfield(x));
}

TEST(Stabilizer, MatchesBruteForce) {
  auto L = finite_field(2, 6);
  const auto everything = all_elements(*L);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const Subspace x = random_subspace(*L, rng);
    const Subspace h = stabilizer(x);
    EXPECT_TRUE(h.contains(L->one()));
    std::size_t count = 0;
    for (const auto& k : everything)
      if (x.contains(scale(k, x))) {
        ++count;
        ASSERT_TRUE(h.contains(k));
      }
    ASSERT_EQ(count, std::size_t{1} << h.dim());
    if (!x.is_zero()) ASSERT_TRUE(is_subfield(h));
  }
}

TEST(Operators, ClosureAndSigmaIndependence) {
  for (auto L : {finite_field(2, 5), inseparable(2, {"t", "s"})}) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 25; ++i) {
      Subspace s = sum(unit_space(*L), random_subspace(*L, rng));
      const Subspace x = random_subspace(*L, rng), y = random_subspace(*L, rng);
      const Subspace sx = saturate(s, x);
      ASSERT_TRUE(sx.contains(x));
      ASSERT_EQ(saturate(s, sx), sx);
      ASSERT_EQ(product(sx, s), product(x, s));
      ASSERT_TRUE(saturate(s, sum(x, y)).contains(sx));
      ASSERT_TRUE(stabilizer(sx).contains(stabilizer(x)));
      std::vector<Scalar> sigma2;
      for (std::size_t k = 0; k < L->dim(); ++k) sigma2.push_back(random_scalar(L->base(), rng, 1));
      if (is_zero_row(sigma2)) continue;
      const DualityContext c1(L, L->default_sigma()), c2(L, sigma2);
      ASSERT_EQ(dual(c1, s, sx).dim(), dual(c2, s, sx).dim());
      ASSERT_EQ(boundary(s, dual(c1, s, sx)), boundary(s, dual(c2, s, sx)));
      ASSERT_EQ(dual(c1, s, dual(c1, s, x)), sx);
      ASSERT_EQ(dual(c2, s, dual(c2, s, x)), sx);
    }
  }
}

TEST(GeneratedSubfield, Examples) {
  auto L = finite_field(2, 6);
  const Element b = L->basis(1);
  EXPECT_EQ(generated_subfield(span(*L, {L->one(), b})), full_space(*L));
  const Element c = L->basis(0);
  EXPECT_EQ(generated_subfield(span(*L, {c})), unit_space(*L));
  auto I = inseparable(2, {"t", "s", "r"});
  const Subspace s = span(*I, {I->one(), I->basis(1), I->basis(2)});
  EXPECT_EQ(generated_subfield(s).dim(), 4u);
}

TEST(Restriction, SubTowerRoundTrip) {
  auto I = inseparable(2, {"t", "s", "r"});
  const Subspace s = span(*I, {I->one(), I->basis(1), I->basis(2)});
  const SubTower sub = restrict_to_subfield(generated_subfield(s));
  EXPECT_EQ(sub.ambient().dim(), 4u);
  const Subspace pushed = sub.push(s);
  EXPECT_EQ(sub.lift(pushed), s);
  EXPECT_EQ(sub.lift(product(pushed, pushed)), product(s, s));
}

TEST(Enumerate, GaussianBinomials) {
  EXPECT_EQ(count_subspaces(2, 4).value(), 67u);
  EXPECT_EQ(count_subspaces(2, 6).value(), 2825u);
  EXPECT_EQ(gaussian_binomial(2, 6, 3).value(), 1395u);
  EXPECT_EQ(gaussian_binomial(3, 3, 1).value(), 13u);
  EXPECT_EQ(gaussian_binomial(2, 4, 5).value(), 0u);
}

TEST(Enumerate, GenericEnumerationIsCompleteAndDistinct) {
  auto L = finite_field(3, 3);
  const auto all = enumerate_subspaces(*L);
  EXPECT_EQ(all.size(), count_subspaces(3, 3).value());
  std::unordered_set<Subspace, SubspaceHash> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), all.size());
  EXPECT_EQ(enumerate_subspaces(*L, kDefaultEnumerationCap, 0).size(), 1u);
  for (const auto& x : all) ASSERT_EQ(span_rows(x.tower_ptr(), x.rows()), x);
}

TEST(Enumerate, Errors) {
  auto I = inseparable(2, {"t"});
  try {
    enumerate_subspaces(*I);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfiniteBaseField);
  }
  auto L = finite_field(2, 6);
  try {
    enumerate_subspaces(*L, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EnumerationTooLarge);
  }
}
