#include <gtest/gtest.h>

#include <random>

#include "kneserlab/cells.hpp"
#include "kneserlab/sampling.hpp"

using namespace kneserlab;

namespace {

gf2::Mask element_of_degree(const gf2::Algebra& a, std::size_t degree) {
  for (gf2::Mask x = 2; x <= a.full_mask(); ++x)
    if (gf2::generated_subfield(gf2::span_masks(a, {x})).dim() == degree) return x;
  return 0;
}

gf2::Space subfield_of_degree(const gf2::Algebra& a, std::size_t degree) {
  return gf2::generated_subfield(gf2::span_masks(a, {element_of_degree(a, degree)}));
}

std::vector<gf2::Space> containing_one(const std::vector<gf2::Space>& all) {
  std::vector<gf2::Space> out;
  for (const auto& x : all)
    if (x.contains(x.ambient().one())) out.push_back(x);
  return out;
}

// Saturation straight from the definition, element by element.
gf2::Space brute_saturate(const gf2::Space& s, const gf2::Space& x) {
  const gf2::Algebra& a = s.ambient();
  const gf2::Space xs = gf2::product(x, s);
  std::vector<gf2::Mask> members;
  for (gf2::Mask y = 0; y <= a.full_mask(); ++y) {
    bool in = true;
    for (auto b : s.basis()) in = in && xs.contains(a.mul({y}, b));
    if (in) members.push_back(y);
  }
  return gf2::span_masks(a, members);
}

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Unsupported;
}

}  // namespace

TEST(Cells, SaturationAgreesWithElementwiseDefinition) {
  const auto t = finite_field(2, 4);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  for (const auto& s : containing_one(all))
    for (const auto& x : all) ASSERT_EQ(gf2::saturate(s, x), brute_saturate(s, x));
}

TEST(Cells, DegenerateSpectrumForWholeField) {
  const auto t = finite_field(2, 2);
  const gf2::Algebra a(*t);
  const auto spec = lambda_spectrum(gf2::full_space(a));
  EXPECT_TRUE(spec.degenerate);
  EXPECT_EQ(spec.lambdas, std::vector<std::size_t>{0});
  EXPECT_EQ(spec.n, 0u);
}

TEST(Cells, SpectrumOfPowerSpanInGf16) {
  const auto t = finite_field(2, 4);
  const gf2::Algebra a(*t);
  const gf2::Space s = gf2::span_masks(a, {1, 2, 4});
  const auto spec = lambda_spectrum(s);
  ASSERT_FALSE(spec.lambdas.empty());
  EXPECT_EQ(spec.lambdas.front(), 0u);
  EXPECT_EQ(spec.lambdas[spec.n], 2u);
  EXPECT_FALSE(spec.degenerate);
}

TEST(Cells, SpectrumOfPowerSpanInGf64) {
  const auto t = finite_field(2, 6);
  const gf2::Algebra a(*t);
  const auto spec = lambda_spectrum(gf2::span_masks(a, {1, 2, 4}));
  for (auto l : spec.lambdas) EXPECT_LE(l, 2u);
  EXPECT_EQ(spec.lambdas[spec.n], 2u);
}

TEST(Cells, AdmissibilityErrors) {
  const auto t16 = finite_field(2, 4);
  const gf2::Algebra a16(*t16);
  try {
    lambda_spectrum(subfield_of_degree(a16, 2));
    FAIL();
  } catch (const StabilizerNotTrivial& e) {
    EXPECT_EQ(e.code(), ErrorCode::StabilizerNotTrivial);
    EXPECT_EQ(e.subfield(), subfield_of_degree(a16, 2).serialize());
  }
  const auto t64 = finite_field(2, 6);
  const gf2::Algebra a64(*t64);
  const gf2::Mask beta = element_of_degree(a64, 3);
  EXPECT_EQ(code_of([&] { lambda_spectrum(gf2::span_masks(a64, {1, beta})); }), ErrorCode::GeneratesProperSubfield);
  EXPECT_EQ(code_of([&] { lambda_spectrum(gf2::span_masks(a16, {2, 4})); }), ErrorCode::UnitNotInSpan);
  const auto insep = inseparable(2, {"t", "s"});
  EXPECT_EQ(code_of([&] { lambda_spectrum(span(*insep, {insep->one(), insep->basis(1), insep->basis(2)})); }),
            ErrorCode::InfiniteBaseField);
}

TEST(Cells, KernelChainHoldsForEveryAdmissibleSInGf32) {
  const auto t = finite_field(2, 5);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  const auto sigmas = gf2::sigma_family(a, 3, 11);
  std::size_t admissible = 0;
  for (const auto& s : containing_one(all)) {
    if (s.dim() < 2 || s.is_full()) continue;
    const auto r = kernel_chain(s, all, sigmas);
    ++admissible;
    ASSERT_TRUE(r.violations.empty()) << r.violations.front().check;
    ASSERT_TRUE(r.complete());
    ASSERT_EQ(r.chain.back(), gf2::unit_space(a));
    for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) ASSERT_TRUE(r.chain[i].contains(r.chain[i + 1]));
  }
  EXPECT_EQ(admissible, 15u + 35u + 15u);  // GF(32) has no intermediate subfields
}

TEST(Cells, EnginesProduceTheSameChain) {
  const auto t = finite_field(2, 4);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  const auto all_generic = enumerate_subspaces(*t);
  for (const auto& s : containing_one(all)) {
    if (s.dim() < 2 || s.is_full() || gf2::stabilizer(s).dim() > 1) continue;
    const auto fast = kernel_chain(s, all, {});
    const auto slow = kernel_chain(gf2::to_generic(t, s), all_generic, {});
    ASSERT_EQ(fast.spectrum.lambdas, slow.spectrum.lambdas);
    ASSERT_EQ(fast.chain.size(), slow.chain.size());
    for (std::size_t i = 0; i < fast.chain.size(); ++i) ASSERT_EQ(fast.chain[i].serialize(), slow.chain[i].serialize());
    ASSERT_EQ(fast.cells_per_index, slow.cells_per_index);
  }
}

TEST(Cells, ParallelCellTableIsIdentical) {
  const auto t = finite_field(2, 6);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  const gf2::Space s = gf2::span_masks(a, {1, 2, 8});
  const auto one = cell_table(s, all, 1);
  const auto four = cell_table(s, all, 4);
  ASSERT_EQ(one.cells.size(), four.cells.size());
  for (std::size_t i = 0; i < one.cells.size(); ++i) ASSERT_EQ(one.cells[i].space, four.cells[i].space);
}

TEST(Hou, Examples) {
  const auto t16 = finite_field(2, 4);
  const gf2::Algebra a(*t16);
  const gf2::Space gf4 = subfield_of_degree(a, 2);
  auto r = check_hou_bound(gf4, gf4);
  EXPECT_EQ(r.dim_st, 2u);
  EXPECT_EQ(r.dim_h, 2u);
  EXPECT_TRUE(r.deficient);
  EXPECT_TRUE(r.holds());
  const gf2::Space s = gf2::span_masks(a, {1, 2});
  r = check_hou_bound(s, s);
  EXPECT_EQ(r.dim_st, 3u);
  EXPECT_EQ(r.dim_h, 1u);
  EXPECT_FALSE(r.deficient);

  const auto insep = inseparable(2, {"t"});
  const Subspace su = span(*insep, {insep->one(), insep->basis(1)});
  const auto ri = check_hou_bound(su, su);
  EXPECT_EQ(ri.dim_st, 2u);
  EXPECT_EQ(ri.dim_h, 2u);
  EXPECT_TRUE(ri.deficient);
  EXPECT_TRUE(ri.holds());
  EXPECT_THROW(check_hou_bound(su, zero_space(*insep)), Error);
}

TEST(Hou, ExhaustiveOverGf16) {
  const auto t = finite_field(2, 4);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  for (const auto& s : all)
    for (const auto& x : all)
      if (!s.is_zero() && !x.is_zero()) ASSERT_TRUE(check_hou_bound(s, x).holds());
}

TEST(OneSided, SubfieldSIsItsOwnK) {
  const auto t = finite_field(2, 4);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  const gf2::Space gf4 = subfield_of_degree(a, 2);
  const auto r = check_one_sided(gf4, all);
  EXPECT_EQ(r.source, KSource::stabilizer_of_s);
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, gf4);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GT(r.deficient, 0u);
  EXPECT_TRUE(r.proper_generated_field);
}

TEST(OneSided, KernelChainKInGf16) {
  const auto t = finite_field(2, 4);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  for (const auto& s : containing_one(all)) {
    if (s.dim() < 2) continue;
    const auto r = check_one_sided(s, all);
    ASSERT_TRUE(r.violations.empty()) << s.to_string() << ": " << r.violations.front().check;
    ASSERT_GT(r.k->dim(), 1u);
    ASSERT_TRUE(r.k_minimal->contains(*r.k));
  }
}

TEST(OneSided, ProperGeneratedFieldInGf64) {
  const auto t = finite_field(2, 6);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  const gf2::Mask beta = element_of_degree(a, 3);
  const gf2::Space s = gf2::span_masks(a, {1, beta});
  const auto r = check_one_sided(s, all);
  EXPECT_TRUE(r.proper_generated_field);
  EXPECT_EQ(r.source, KSource::kernel_chain);
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, subfield_of_degree(a, 3));
  EXPECT_GT(r.decompositions, 0u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(OneSided, NoDeficientTIsReported) {
  const auto t = finite_field(2, 4);
  const gf2::Algebra a(*t);
  const gf2::Space s = gf2::span_masks(a, {1, 2});
  EXPECT_EQ(code_of([&] { check_one_sided(s, {gf2::span_masks(a, {1}), gf2::span_masks(a, {1, 2})}); }),
            ErrorCode::NoDeficientT);
}

TEST(OneSided, InseparableTowerGivesWholeField) {
  const auto t = inseparable(2, {"t", "s"});
  const Subspace s = span(*t, {t->one(), t->basis(1), t->basis(2)});
  std::vector<Subspace> ts;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 12; ++i) ts.push_back(random_subspace(*t, rng, 2 + i % 3));
  const auto r = check_one_sided(s, ts);
  EXPECT_EQ(r.source, KSource::stabilizer_intersection);
  EXPECT_FALSE(r.proper_generated_field);
  ASSERT_TRUE(r.k);
  EXPECT_TRUE(r.k->is_full());
  EXPECT_TRUE(r.violations.empty());
}

TEST(OneSided, InseparableTowerWithProperGeneratedField) {
  const auto t = build_tower("insep:2:t,s:x^2+x+1");
  ASSERT_EQ(t->dim(), 8u);
  const Subspace s = span(*t, {t->one(), t->basis(1), t->basis(2)});
  const Subspace field = generated_subfield(s);
  ASSERT_EQ(field.dim(), 4u);
  std::mt19937_64 rng(9);
  std::vector<Subspace> ts;
  const Element w = t->basis(4);  // outside F(S)
  const auto fb = field.basis();
  for (int i = 0; i < 6; ++i) {
    Subspace y = zero_space(*t);
    while (y.dim() != 3) {
      std::vector<Element> gens;
      for (int g = 0; g < 3; ++g) {
        Element e = t->zero();
        for (const auto& b : fb)
          if (rng() & 1) e = e + b;
        gens.push_back(e);
      }
      y = span(*t, gens);
    }
    ts.push_back(sum(field, scale(w, y)));
  }
  const auto r = check_one_sided(s, ts);
  EXPECT_TRUE(r.proper_generated_field);
  EXPECT_EQ(r.source, KSource::stabilizer_intersection);
  EXPECT_GT(r.decompositions, 0u);
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, field);
  EXPECT_EQ(r.deficient, 6u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Correspondence, Gf16Table) {
  const auto t = finite_field(2, 4);
  const gf2::Algebra a(*t);
  const auto all = gf2::enumerate_subspaces(a, kDefaultEnumerationCap);
  const auto r = check_group_correspondence(gf2::span_masks(a, {1, 2}), all);
  EXPECT_EQ(r.group, "Z4");
  EXPECT_EQ(r.field_side.t_count, 66u);
  EXPECT_EQ(r.group_side.t_count, 15u);
  const auto again = check_group_correspondence(gf2::span_masks(a, {1, 2}), all);
  EXPECT_EQ(r.field_side.stabilizer_sizes, again.field_side.stabilizer_sizes);
  const auto whole = check_group_correspondence(gf2::full_space(a), all);
  // With S = L every T of dimension (size) at least 2 is deficient.
  EXPECT_EQ(whole.field_side.deficient, 66u - 15u);
  EXPECT_EQ(whole.group_side.deficient, 15u - 4u);
}
