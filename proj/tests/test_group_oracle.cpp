#include <gtest/gtest.h>

#include <random>

#include "kneserlab/error.hpp"
#include "kneserlab/group_oracle.hpp"

using namespace kneserlab;

namespace {

std::vector<std::size_t> cyclic_sumset(std::size_t n, const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
  std::vector<bool> hit(n);
  for (auto a : s)
    for (auto b : t) hit[(a + b) % n] = true;
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

}  // namespace

TEST(Group, ElementsAreIndexedLexicographically) {
  const AbelianGroup g({2, 4});
  EXPECT_EQ(g.size(), 8u);
  EXPECT_EQ(g.name(), "Z2xZ4");
  EXPECT_EQ(g.element(5), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(g.index({1, 3}), 7u);
  EXPECT_EQ(g.format(g.add(g.index({1, 3}), g.index({1, 2}))), "(0,1)");
  for (std::size_t a = 0; a < g.size(); ++a) EXPECT_EQ(g.add(a, g.neg(a)), 0u);
  EXPECT_THROW(AbelianGroup({0}), Error);
  EXPECT_THROW(AbelianGroup({8, 9}), Error);
}

TEST(Group, SumsetExamples) {
  const AbelianGroup z6({6});
  EXPECT_EQ(sumset(GroupSubset(z6, {0, 1}), GroupSubset(z6, {0, 1, 2})).elements(),
            (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(sumset(GroupSubset(z6, {0, 2, 4}), GroupSubset(z6, {0, 2})).elements(),
            (std::vector<std::size_t>{0, 2, 4}));
  const GroupSubset t(z6, {1, 3, 4});
  EXPECT_EQ(sumset(GroupSubset(z6, {0}), t), t);
}

TEST(Group, SumsetErrors) {
  const AbelianGroup z6({6}), z23({2, 3});
  try {
    sumset(GroupSubset(z6, {0}), GroupSubset(z23, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupMismatch);
  }
  try {
    sumset(GroupSubset(z6, {0}), GroupSubset::from_mask(z6, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
  EXPECT_THROW(group_stabilizer(GroupSubset::from_mask(z6, 0)), Error);
  EXPECT_THROW(GroupSubset(z6, {6}), Error);
}

TEST(Group, StabilizerExamples) {
  const AbelianGroup z6({6});
  EXPECT_EQ(group_stabilizer(GroupSubset(z6, {0, 2, 4})).elements(), (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(group_stabilizer(GroupSubset(z6, {0, 1})).elements(), (std::vector<std::size_t>{0}));
  EXPECT_EQ(group_stabilizer(GroupSubset::from_mask(z6, z6.full_mask())).size(), 6u);
}

TEST(Group, SubgroupLatticeSizes) {
  const std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> cases = {
      {{12}, 6}, {{7}, 2}, {{1}, 1}, {{2, 4}, 8}, {{2, 2, 2}, 16}, {{3, 3}, 6}};
  for (const auto& [orders, count] : cases) {
    const AbelianGroup g(orders);
    ASSERT_EQ(g.subgroups().size(), count) << g.name();
    EXPECT_EQ(g.subgroups().front(), g.full_mask());
    EXPECT_EQ(g.subgroups().back(), GroupMask{1});
    for (GroupMask h : g.subgroups()) EXPECT_EQ(sumset_mask(g, h, h), h);
  }
}

TEST(Group, MaskArithmeticMatchesDirectModularSums) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {5u, 12u, 20u}) {
    const AbelianGroup g({static_cast<std::uint32_t>(n)});
    for (int i = 0; i < 200; ++i) {
      const GroupMask a = (rng() & g.full_mask()) | 1, b = (rng() & g.full_mask()) | 2;
      const auto s = GroupSubset::from_mask(g, a), t = GroupSubset::from_mask(g, b);
      ASSERT_EQ(sumset(s, t).elements(), cyclic_sumset(n, s.elements(), t.elements()));
      ASSERT_EQ(sumset(s, t), sumset(t, s));
      std::vector<std::size_t> stab;
      for (std::size_t x = 0; x < n; ++x)
        if (cyclic_sumset(n, {x}, s.elements()) == s.elements()) stab.push_back(x);
      ASSERT_EQ(group_stabilizer(s).elements(), stab);
    }
  }
}

TEST(Group, KneserReportOnPeriodicSumset) {
  const AbelianGroup z6({6});
  const auto r = check_kneser_group(GroupSubset(z6, {0, 2, 4}), GroupSubset(z6, {0, 2}));
  EXPECT_TRUE(r.deficient);
  EXPECT_EQ(r.size_h, 3u);
  EXPECT_TRUE(r.holds());
}

TEST(Group, BalandraudFindsCommonSubgroup) {
  const AbelianGroup z6({6});
  std::vector<GroupSubset> ts;
  for (GroupMask t = 1; t <= z6.full_mask(); ++t) ts.push_back(GroupSubset::from_mask(z6, t));
  const auto r = check_balandraud(GroupSubset(z6, {0, 2, 4}), ts);
  EXPECT_EQ(r.t_count, 63u);
  EXPECT_GT(r.deficient, 0u);
  ASSERT_TRUE(r.h_max && r.h_min);
  EXPECT_EQ(r.h_max->elements(), (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(r.h_min->elements(), (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_TRUE(r.holds);
}

TEST(Group, CauchyDavenportInPrimeOrder) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const AbelianGroup g({p});
    for (GroupMask s = 1; s <= g.full_mask(); s += 2)
      for (GroupMask t = 1; t <= g.full_mask(); t += 2) {
        const auto r = check_kneser_group(GroupSubset::from_mask(g, s), GroupSubset::from_mask(g, t));
        ASSERT_GE(r.size_st, std::min<std::size_t>(p, r.size_s + r.size_t - 1));
        if (r.deficient) ASSERT_EQ(r.size_h, p);
      }
  }
}

TEST(Group, FullSetAbsorbs) {
  const AbelianGroup g({2, 2, 2});
  const auto all = GroupSubset::from_mask(g, g.full_mask());
  for (GroupMask t = 1; t <= g.full_mask(); ++t) {
    const auto r = check_kneser_group(all, GroupSubset::from_mask(g, t));
    EXPECT_EQ(r.size_st, 8u);
    EXPECT_EQ(r.size_h, 8u);
    EXPECT_EQ(r.deficient, r.size_t >= 2);
  }
}
