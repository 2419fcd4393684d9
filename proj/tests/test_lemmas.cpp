#include <gtest/gtest.h>

#include <random>

#include "kneserlab/enumerate.hpp"
#include "kneserlab/lemmas.hpp"
#include "kneserlab/sampling.hpp"
#include "kneserlab/suites.hpp"

using namespace kneserlab;

namespace {

struct Tally {
  std::array<std::size_t, kLemmaCount> checked{}, vacuous{}, violated{};
  void add(const LemmaRow& row) {
    for (std::size_t l = 0; l < kLemmaCount; ++l) {
      if (!row[l].hypothesis) ++vacuous[l];
      else ++checked[l];
      if (row[l].violated()) ++violated[l];
    }
  }
};

// Saturated subspaces of an algebra for S, straight from the definition.
std::vector<gf2::Space> saturated_family(const gf2::Space& s, const std::vector<gf2::Space>& all) {
  std::vector<gf2::Space> out;
  for (const auto& x : all)
    if (gf2::saturate(s, x) == x) out.push_back(x);
  return out;
}

}  // namespace

TEST(Lemmas, ExhaustiveOverGf8ForEveryFormAndS) {
  const auto tower = build_tower("gf:2:3");
  const auto all = enumerate_subspaces(*tower, 1000);
  ASSERT_EQ(all.size(), 16u);
  std::vector<DualityContext> forms = sigma_family(*tower, 7, 3);
  ASSERT_EQ(forms.size(), 7u);
  Tally t;
  for (const auto& ctx : forms)
    for (const auto& s : all) {
      if (!s.contains(tower->one())) continue;
      for (const auto& x : all)
        for (const auto& y : all) t.add(lemma_suite(ctx, s, x, y));
    }
  for (std::size_t l = 0; l < kLemmaCount; ++l) {
    EXPECT_EQ(t.violated[l], 0u) << kLemmaNames[l];
    EXPECT_GT(t.checked[l], 0u) << kLemmaNames[l];
  }
  EXPECT_GT(t.vacuous[static_cast<std::size_t>(Lemma::sum_closure_proper)], 0u);
}

TEST(Lemmas, EnginesAgreeOnGf32) {
  const auto tower = build_tower("gf:2:5");
  const gf2::Algebra algebra(*tower);
  std::mt19937_64 rng(11);
  const auto forms = sigma_family(*tower, 2, 9);
  for (int i = 0; i < 60; ++i) {
    const auto& ctx = forms[i % forms.size()];
    gf2::Mask mask = 0;
    for (std::size_t k = 0; k < ctx.sigma().size(); ++k)
      if (!ctx.sigma()[k].is_zero()) mask |= gf2::Mask{1} << k;
    const gf2::DualityContext fast(algebra, mask);
    const Subspace s = random_subspace_with_one(*tower, rng, 1 + rng() % 4, 1);
    const Subspace x = random_subspace(*tower, rng, rng() % 6, 1);
    const Subspace y = random_subspace(*tower, rng, rng() % 6, 1);
    const LemmaRow slow = lemma_suite(ctx, s, x, y);
    const LemmaRow quick =
        lemma_suite(fast, gf2::from_generic(algebra, s), gf2::from_generic(algebra, x), gf2::from_generic(algebra, y));
    for (std::size_t l = 0; l < kLemmaCount; ++l) {
      EXPECT_EQ(slow[l].hypothesis, quick[l].hypothesis) << kLemmaNames[l];
      EXPECT_EQ(slow[l].conclusion, quick[l].conclusion) << kLemmaNames[l];
    }
  }
}

TEST(Lemmas, SaturatedFamilyIsALatticeUnderMeetAndClosure) {
  const auto tower = build_tower("gf:2:4");
  const gf2::Algebra a(*tower);
  const auto all = gf2::enumerate_subspaces(a, 1000);
  const gf2::DualityContext ctx(a, gf2::Mask{1} << 3);
  for (const auto& s : all) {
    if (!s.contains(a.one()) || s.dim() < 2) continue;
    const auto family = saturated_family(s, all);
    for (const auto& x : family) {
      EXPECT_EQ(gf2::dual(ctx, s, gf2::dual(ctx, s, x)), x);
      EXPECT_TRUE(gf2::is_subfield(gf2::stabilizer(x)));
      for (const auto& y : family) EXPECT_EQ(gf2::saturate(s, gf2::intersect(x, y)), gf2::intersect(x, y));
    }
  }
}

TEST(Lemmas, SubmodularityOnEveryPairOfGf16) {
  const auto tower = build_tower("gf:2:4");
  const gf2::Algebra a(*tower);
  const auto all = gf2::enumerate_subspaces(a, 1000);
  ASSERT_EQ(all.size(), 67u);
  std::size_t pairs = 0;
  for (const auto& s : all) {
    if (!s.contains(a.one())) continue;
    for (const auto& x : all)
      for (const auto& y : all) {
        ASSERT_TRUE(submodularity_holds(s, x, y));
        ++pairs;
      }
  }
  EXPECT_EQ(pairs, 16u * 67u * 67u);
}

TEST(Lemmas, CorruptedMultiplicationIsCaught) {
  const auto bad = corrupt_tensor_entry(*build_tower("gf:2:4"));
  const gf2::Algebra a(*bad);
  const auto all = gf2::enumerate_subspaces(a, 1000);
  const auto forms = gf2::sigma_family(a, 3, 42);
  ASSERT_FALSE(forms.empty());
  Tally t;
  for (const auto& ctx : forms)
    for (const auto& s : all) {
      if (!s.contains(a.one())) continue;
      for (const auto& x : all) t.add(lemma_suite(ctx, s, x, x));
    }
  std::size_t total = 0;
  for (auto v : t.violated) total += v;
  EXPECT_GT(total, 0u);
}
