#include <gtest/gtest.h>

#include <random>

#include "kneserlab/error.hpp"
#include "kneserlab/tower.hpp"

using namespace kneserlab;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Unsupported;
}

Element power(const Element& a, unsigned e) {
  Element r = a.tower().one();
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace

TEST(FiniteField, GeneratorSatisfiesModulus) {
  auto L = finite_field(2, 4);
  const Element a = L->basis(1);
  EXPECT_EQ(power(a, 4), a + L->one());
  EXPECT_EQ(L->spec().labels, (std::vector<std::string>{"1", "a", "a^2", "a^3"}));
}

TEST(FiniteField, CubeRootOfUnityGeneratesGF4) {
  auto L = finite_field(2, 4);
  const Element a = L->basis(1);
  const Element w = a * a + a;
  EXPECT_EQ(w * w, w + L->one());
  EXPECT_EQ(power(w, 3), L->one());
}

TEST(FiniteField, EveryNonzeroElementIsInvertible) {
  auto L = finite_field(3, 3);
  const auto elems = L->base().elements();
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems) {
        const Element e = L->element({x, y, z});
        if (e.is_zero()) continue;
        ASSERT_EQ(e * e.inverse(), L->one());
      }
}

TEST(FiniteField, CustomModulusAndReducibleModulus) {
  auto L = build_tower("gf:2:4:x^4+x^3+1");
  const Element a = L->basis(1);
  EXPECT_EQ(power(a, 4), power(a, 3) + L->one());
  EXPECT_EQ(code_of([] { build_tower("gf:2:4:x^4+x^2+1"); }), ErrorCode::ReducibleModulus);
  EXPECT_EQ(code_of([] { build_tower("gf:4:2"); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { build_tower("gf:2"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { build_tower("cyclo:2:3"); }), ErrorCode::Parse);
}

TEST(FiniteField, DimensionCap) {
  EXPECT_EQ(code_of([] { finite_field(2, 65); }), ErrorCode::DimensionOverflow);
  TowerOptions small;
  small.max_dim = 4;
  EXPECT_EQ(code_of([&] { finite_field(2, 5, std::nullopt, small); }), ErrorCode::DimensionOverflow);
}

TEST(Inseparable, RootsRaiseToVariables) {
  auto L = inseparable(2, {"t", "s"});
  ASSERT_EQ(L->dim(), 4u);
  EXPECT_EQ(L->spec().labels, (std::vector<std::string>{"1", "u", "v", "uv"}));
  const FieldDescriptor& F = L->base();
  const Element u = L->basis(1), v = L->basis(2);
  EXPECT_EQ(u * u, Scalar::generator(F, 0) * L->one());
  EXPECT_EQ(v * v, Scalar::generator(F, 1) * L->one());
  EXPECT_EQ(u * v, L->basis(3));
  // (u + v)^2 = t + s in characteristic 2
  EXPECT_EQ((u + v) * (u + v), (Scalar::generator(F, 0) + Scalar::generator(F, 1)) * L->one());
}

TEST(Inseparable, InverseOfRandomElements) {
  auto L = inseparable(3, {"t"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < L->dim(); ++k) c.push_back(random_scalar(L->base(), rng, 1));
    const Element e = L->element(c);
    if (e.is_zero()) continue;
    ASSERT_EQ(e * e.inverse(), L->one());
  }
}

TEST(TensorProduct, OfTwoInseparableTowersIsAssociativeField) {
  auto F = FieldDescriptor::rational_function(2, {"t", "s"});
  auto A = simple_extension(F, {-Scalar::generator(*F, 0), Scalar::zero(*F), Scalar::one(*F)});
  auto B = simple_extension(F, {-Scalar::generator(*F, 1), Scalar::zero(*F), Scalar::one(*F)});
  auto L = tensor_product(*A, *B);
  EXPECT_EQ(L->dim(), 4u);
  auto direct = inseparable(2, {"t", "s"});
  EXPECT_EQ(L->spec().tensor, direct->spec().tensor);
}

TEST(TensorProduct, OfFiniteFieldsOfCoprimeDegree) {
  auto L = tensor_product(*finite_field(2, 2), *finite_field(2, 3));
  EXPECT_EQ(L->dim(), 6u);
}

TEST(TowerSpec, InvariantViolationsAreRejected) {
  auto good = finite_field(2, 3);
  {
    TowerSpec s = good->spec();
    s.c(1, 2, 0) = s.c(1, 2, 0) + Scalar::one(*s.base);
    EXPECT_EQ(code_of([&] { Tower::create(s); }), ErrorCode::TowerInvariant);  // commutativity
  }
  {
    TowerSpec s = good->spec();
    s.c(0, 1, 1) = Scalar::zero(*s.base);
    s.c(1, 0, 1) = Scalar::zero(*s.base);
    EXPECT_EQ(code_of([&] { Tower::create(s); }), ErrorCode::TowerInvariant);  // unit
  }
  {
    // GF(2)[x]/(x^3+x) is commutative and unital but has zero divisors
    TowerSpec s = good->spec();
    TowerOptions opt;
    auto F = s.base;
    auto bad = simple_extension(F, {Scalar::zero(*F), Scalar::one(*F), Scalar::zero(*F), Scalar::one(*F)},
                                TowerOptions{64, false});
    EXPECT_EQ(code_of([&] { bad->check_invariants(opt); }), ErrorCode::TowerInvariant);
  }
  {
    TowerSpec s = good->spec();
    s.sigma = std::vector<Scalar>(3, Scalar::zero(*s.base));
    EXPECT_EQ(code_of([&] { Tower::create(s); }), ErrorCode::TowerInvariant);
  }
  {
    TowerSpec s = good->spec();
    s.tensor.pop_back();
    EXPECT_EQ(code_of([&] { Tower::create(s); }), ErrorCode::TowerInvariant);
  }
}

TEST(TowerSpec, AssociativityFailureIsDetected) {
  // The basis order swapped in only one product breaks associativity.
  auto good = finite_field(2, 3);
  TowerSpec s = good->spec();
  for (std::size_t k = 0; k < 3; ++k) std::swap(s.c(1, 1, k), s.c(1, 2, k));
  for (std::size_t k = 0; k < 3; ++k) s.c(2, 1, k) = s.c(1, 2, k);
  EXPECT_EQ(code_of([&] { Tower::create(s); }), ErrorCode::TowerInvariant);
}

TEST(Tower, SingularMultiplicationWithoutValidation) {
  auto F = FieldDescriptor::prime(2);
  auto bad = simple_extension(F, {Scalar::zero(*F), Scalar::one(*F), Scalar::zero(*F), Scalar::one(*F)},
                              TowerOptions{64, false});
  const Element x = bad->basis(1);
  EXPECT_EQ(code_of([&] { (void)x.inverse(); }), ErrorCode::SingularMultiplicationMap);
  EXPECT_EQ(code_of([&] { (void)bad->zero().inverse(); }), ErrorCode::DivisionByZero);
}

TEST(Tower, MixingTowersThrows) {
  auto a = finite_field(2, 3);
  auto b = finite_field(2, 3);
  EXPECT_EQ(code_of([&] { (void)(a->one() + b->one()); }), ErrorCode::TowerMismatch);
  EXPECT_EQ(code_of([&] { (void)(a->one() * b->one()); }), ErrorCode::TowerMismatch);
}

TEST(Tower, HashIsStableAndDiscriminating) {
  EXPECT_EQ(finite_field(2, 4)->hash(), finite_field(2, 4)->hash());
  EXPECT_NE(finite_field(2, 4)->hash(), build_tower("gf:2:4:x^4+x^3+1")->hash());
  EXPECT_EQ(finite_field(2, 4)->hash().size(), 16u);
}

TEST(Tower, DefaultSigmaIsLastCoordinate) {
  auto L = finite_field(2, 4);
  auto s = L->default_sigma();
  ASSERT_EQ(s.size(), 4u);
  EXPECT_TRUE(s[3].is_one());
  EXPECT_TRUE(s[0].is_zero());
}
