#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "kneserlab/gf2.hpp"
#include "kneserlab/operators.hpp"

namespace kneserlab {

enum class Lemma : std::size_t {
  double_dual_contains,      // X in X**
  triple_dual,               // X* = X***
  dual_boundary_le,          // dX* <= dX
  dual_saturated,            // X* saturated
  double_dual_is_saturation, // X** = saturation of X
  family_dual_closed,        // X in S: X* in S and X** = X
  family_boundary_eq,        // X in S: dX = dX*
  family_stabilizer_dual,    // X in S: kX in X iff kX* in X*
  family_stabilizer_subfield,// X in S: H(X) is a subfield
  family_intersection,       // X, Y in S: X n Y in S
  family_sum_closure,        // X, Y in S: (X+Y)** in S
  sum_closure_proper,        // dim XS <= dim X + dim S - 1, dim(X n Y) >= 1, dim X <= dim Y*: (X+Y)** != L
};

inline constexpr std::size_t kLemmaCount = 12;
inline constexpr std::size_t kFirstPairLemma = static_cast<std::size_t>(Lemma::family_intersection);

inline constexpr std::array<std::string_view, kLemmaCount> kLemmaNames = {
    "double_dual_contains",      "triple_dual",
    "dual_boundary_le",          "dual_saturated",
    "double_dual_is_saturation", "family_dual_closed",
    "family_boundary_eq",        "family_stabilizer_dual",
    "family_stabilizer_subfield","family_intersection",
    "family_sum_closure",        "sum_closure_proper",
};

inline constexpr std::array<std::string_view, kLemmaCount> kLemmaStatements = {
    "X is contained in X**",
    "X* = X***",
    "boundary of X* <= boundary of X",
    "X* is saturated",
    "X** is the saturation of X",
    "X saturated implies X* saturated and X** = X",
    "X saturated implies boundary of X = boundary of X*",
    "X saturated implies kX in X iff kX* in X*, i.e. H(X) = H(X*)",
    "X saturated implies H(X) is a subfield",
    "X, Y saturated implies X n Y saturated",
    "X, Y saturated implies (X+Y)** saturated",
    "dim XS <= dim X + dim S - 1, dim(X n Y) >= 1, dim X <= dim Y* imply (X+Y)** != L",
};

// A lemma whose hypothesis is not met counts as a vacuous pass.
struct LemmaOutcome {
  bool hypothesis = true;
  bool conclusion = true;
  bool violated() const { return hypothesis && !conclusion; }
};

using LemmaRow = std::array<LemmaOutcome, kLemmaCount>;

// Everything about one X that the lemmas refer to.
template <class Sp>
struct LemmaFacts {
  Sp x, xs, star, star2, star3, saturation, stab;
  std::size_t boundary = 0, boundary_star = 0;
  bool saturated = false;
};

template <class Sp>
LemmaFacts<Sp> lemma_facts(const typename Sp::duality_type& ctx, const Sp& s, const Sp& x) {
  LemmaFacts<Sp> f{x, product(x, s), x, x, x, x, x};
  f.star = perp(ctx, f.xs);
  f.star2 = dual(ctx, s, f.star);
  f.star3 = dual(ctx, s, f.star2);
  f.saturation = saturate(s, x);
  f.stab = stabilizer(x);
  f.boundary = f.xs.dim() - x.dim();
  f.boundary_star = boundary(s, f.star);
  f.saturated = f.saturation == x;
  return f;
}

// Fills the single-space lemmas of row.
template <class Sp>
void single_lemmas(const Sp& s, const LemmaFacts<Sp>& f, LemmaRow& row) {
  auto at = [&](Lemma l) -> LemmaOutcome& { return row[static_cast<std::size_t>(l)]; };
  at(Lemma::double_dual_contains).conclusion = f.star2.contains(f.x);
  at(Lemma::triple_dual).conclusion = f.star == f.star3;
  at(Lemma::dual_boundary_le).conclusion = f.boundary_star <= f.boundary;
  at(Lemma::dual_saturated).conclusion = is_saturated(s, f.star);
  at(Lemma::double_dual_is_saturation).conclusion = f.star2 == f.saturation;
  for (Lemma l : {Lemma::family_dual_closed, Lemma::family_boundary_eq, Lemma::family_stabilizer_dual,
                  Lemma::family_stabilizer_subfield})
    at(l).hypothesis = f.saturated;
  if (!f.saturated) return;
  at(Lemma::family_dual_closed).conclusion = is_saturated(s, f.star) && f.star2 == f.x;
  at(Lemma::family_boundary_eq).conclusion = f.boundary == f.boundary_star;
  at(Lemma::family_stabilizer_dual).conclusion = f.stab == stabilizer(f.star);
  at(Lemma::family_stabilizer_subfield).conclusion = is_subfield(f.stab);
}

// Fills the two-space lemmas of row.
template <class Sp>
void pair_lemmas(const typename Sp::duality_type& ctx, const Sp& s, const LemmaFacts<Sp>& fx,
                 const LemmaFacts<Sp>& fy, LemmaRow& row) {
  auto at = [&](Lemma l) -> LemmaOutcome& { return row[static_cast<std::size_t>(l)]; };
  const Sp cap = intersect(fx.x, fy.x);
  at(Lemma::family_intersection).hypothesis = fx.saturated && fy.saturated;
  at(Lemma::family_sum_closure).hypothesis = fx.saturated && fy.saturated;
  auto& proper = at(Lemma::sum_closure_proper);
  proper.hypothesis = fx.xs.dim() + 1 <= fx.x.dim() + s.dim() && cap.dim() >= 1 && fx.x.dim() <= fy.star.dim();
  const bool need_sum = at(Lemma::family_sum_closure).hypothesis || proper.hypothesis;
  if (at(Lemma::family_intersection).hypothesis) at(Lemma::family_intersection).conclusion = is_saturated(s, cap);
  if (!need_sum) return;
  const Sp closure = dual(ctx, s, dual(ctx, s, sum(fx.x, fy.x)));
  if (at(Lemma::family_sum_closure).hypothesis) at(Lemma::family_sum_closure).conclusion = is_saturated(s, closure);
  if (proper.hypothesis) proper.conclusion = !closure.is_full();
}

// Every lemma for one (sigma, S, X, Y).
template <class Sp>
LemmaRow lemma_suite(const typename Sp::duality_type& ctx, const Sp& s, const Sp& x, const Sp& y) {
  LemmaRow row{};
  const auto fx = lemma_facts(ctx, s, x);
  const auto fy = lemma_facts(ctx, s, y);
  single_lemmas(s, fx, row);
  pair_lemmas(ctx, s, fx, fy, row);
  return row;
}

// d(X+Y) + d(X n Y) <= dX + dY
template <class Sp>
bool submodularity_holds(const Sp& s, const Sp& x, const Sp& y) {
  return boundary(s, sum(x, y)) + boundary(s, intersect(x, y)) <= boundary(s, x) + boundary(s, y);
}

}  // namespace kneserlab
