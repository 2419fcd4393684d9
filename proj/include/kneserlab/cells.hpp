#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kneserlab/enumerate.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/gf2.hpp"
#include "kneserlab/group_oracle.hpp"
#include "kneserlab/operators.hpp"
#include "kneserlab/parallel.hpp"
#include "kneserlab/witness.hpp"

namespace kneserlab {

inline bool finite_base(const Tower& tower) { return tower.is_finite_base(); }
namespace gf2 {
inline bool finite_base(const Algebra&) { return true; }
}  // namespace gf2

// Thrown when H(S) != F; carries the stabilizing subfield.
class StabilizerNotTrivial : public Error {
 public:
  explicit StabilizerNotTrivial(std::vector<std::string> subfield)
      : Error(ErrorCode::StabilizerNotTrivial, "H(S) has dimension " + std::to_string(subfield.size())),
        subfield_(std::move(subfield)) {}
  const std::vector<std::string>& subfield() const { return subfield_; }

 private:
  std::vector<std::string> subfield_;
};

struct LambdaSpectrum {
  std::vector<std::size_t> lambdas;  // 0 = lambda_0 < lambda_1 < ... < lambda_n < dim S
  std::size_t n = 0;
  bool degenerate = false;  // S = L, where only {0} and L are saturated
};

template <class Sp>
struct CellRecord {
  Sp space;
  std::size_t boundary = 0;
  std::size_t index = 0;  // position of the boundary in the spectrum
  bool is_kernel = false;  // smallest dimension among cells of its index
  bool contains_one = false;
};

template <class Sp>
struct CellTable {
  LambdaSpectrum spectrum;
  std::vector<CellRecord<Sp>> cells;  // saturated subspaces with boundary < dim S, enumeration order
  std::size_t enumerated = 0;
  std::size_t saturated = 0;
};

// 1 in S, finite base, H(S) = F and F(S) = L.
// Errors: UnitNotInSpan, InfiniteBaseField, StabilizerNotTrivial, GeneratesProperSubfield.
template <class Sp>
void require_admissible(const Sp& s) {
  if (!s.contains(s.ambient().one())) throw Error(ErrorCode::UnitNotInSpan, "S must contain 1");
  if (!finite_base(s.ambient())) throw Error(ErrorCode::InfiniteBaseField, "cells are enumerated over finite bases only");
  const Sp h = stabilizer(s);
  if (h.dim() > 1) throw StabilizerNotTrivial(h.serialize());
  if (!generated_subfield(s).is_full()) throw Error(ErrorCode::GeneratesProperSubfield, "F(S) is a proper subfield of L");
}

// Cells of S among `all`, which must list every subspace of L.
template <class Sp>
CellTable<Sp> cell_table(const Sp& s, const std::vector<Sp>& all, unsigned jobs = 1) {
  CellTable<Sp> table;
  table.enumerated = all.size();
  if (s.is_full()) {
    if (!s.contains(s.ambient().one())) throw Error(ErrorCode::UnitNotInSpan, "S must contain 1");
    table.spectrum = {{0}, 0, true};
    for (const auto& x : all)
      if (x.is_zero() || x.is_full()) table.cells.push_back({x, 0, 0, x.is_zero(), x.contains(s.ambient().one())});
    table.saturated = table.cells.size();
    return table;
  }
  require_admissible(s);
  const auto boundaries = parallel_map<std::optional<std::size_t>>(all.size(), jobs, [&](std::size_t i) {
    return is_saturated(s, all[i]) ? std::optional<std::size_t>(boundary(s, all[i])) : std::nullopt;
  });
  std::set<std::size_t> values;
  for (const auto& b : boundaries) {
    if (!b) continue;
    ++table.saturated;
    if (*b < s.dim()) values.insert(*b);
  }
  table.spectrum.lambdas.assign(values.begin(), values.end());
  table.spectrum.n = table.spectrum.lambdas.empty() ? 0 : table.spectrum.lambdas.size() - 1;
  std::vector<std::size_t> min_dim(values.size(), SIZE_MAX);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!boundaries[i] || *boundaries[i] >= s.dim()) continue;
    const auto& lambdas = table.spectrum.lambdas;
    const std::size_t idx = std::lower_bound(lambdas.begin(), lambdas.end(), *boundaries[i]) - lambdas.begin();
    table.cells.push_back({all[i], *boundaries[i], idx, false, all[i].contains(s.ambient().one())});
    min_dim[idx] = std::min(min_dim[idx], all[i].dim());
  }
  for (auto& c : table.cells) c.is_kernel = c.space.dim() == min_dim[c.index];
  return table;
}

template <class Sp>
LambdaSpectrum lambda_spectrum(const Sp& s, std::uint64_t cap = kDefaultEnumerationCap, unsigned jobs = 1) {
  return cell_table(s, enumerate_subspaces(s.ambient(), cap), jobs).spectrum;
}

template <class Sp>
struct KernelChainReport {
  LambdaSpectrum spectrum;
  std::vector<Sp> chain;  // F_1, ..., F_n; shorter when a kernel is missing or not unique
  std::vector<std::size_t> cells_per_index;
  std::vector<std::size_t> kernels_per_index;  // i-kernels containing 1
  std::uint64_t checks = 0;
  std::vector<Violation> violations;
  bool complete() const { return chain.size() == spectrum.n; }
};

// Builds F_1 ... F_n for an admissible S and checks the chain, subfield,
// stabilization, uniqueness, "no i-cell is stabilized by F_{i-1}" and, for
// each form in `sigmas`, that duality preserves the cell index.
template <class Sp>
KernelChainReport<Sp> kernel_chain(const Sp& s, const std::vector<Sp>& all,
                                   const std::vector<typename Sp::duality_type>& sigmas, unsigned jobs = 1) {
  KernelChainReport<Sp> r;
  const CellTable<Sp> table = cell_table(s, all, jobs);
  r.spectrum = table.spectrum;
  const std::size_t n = r.spectrum.n;
  const auto& lambdas = r.spectrum.lambdas;
  auto fail = [&](std::string check, std::string detail, std::vector<std::pair<std::string, std::vector<std::string>>> spaces) {
    spaces.insert(spaces.begin(), named("S", s));
    r.violations.push_back({std::move(check), std::move(detail), std::move(spaces)});
  };
  if (r.spectrum.degenerate) return r;

  ++r.checks;
  if (lambdas.empty() || lambdas.front() != 0 || lambdas.back() + 1 != s.dim())
    fail("lambda_n", "spectrum does not run from 0 to dim S - 1", {});
  r.cells_per_index.assign(lambdas.size(), 0);
  r.kernels_per_index.assign(lambdas.size(), 0);
  for (const auto& c : table.cells) {
    ++r.cells_per_index[c.index];
    if (c.is_kernel && c.contains_one) ++r.kernels_per_index[c.index];
  }
  ++r.checks;
  for (const auto& c : table.cells)
    if (c.index == 0 && !c.space.is_zero() && !c.space.is_full())
      fail("zero_cells", "a 0-cell other than {0} and L", {named("X", c.space)});

  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Sp> kernels;
    for (const auto& c : table.cells)
      if (c.index == i && c.is_kernel && c.contains_one) kernels.push_back(c.space);
    ++r.checks;
    if (kernels.size() != 1) {
      std::vector<std::pair<std::string, std::vector<std::string>>> spaces;
      for (std::size_t k = 0; k < kernels.size(); ++k) spaces.push_back(named("kernel" + std::to_string(k), kernels[k]));
      fail("kernel_unique", std::to_string(kernels.size()) + " kernels containing 1 at index " + std::to_string(i),
           std::move(spaces));
      return r;
    }
    r.chain.push_back(kernels.front());
  }

  const Sp unit = unit_space(s.ambient());
  const Sp whole = full_space(s.ambient());
  ++r.checks;
  if (n > 0 && !(r.chain.back() == unit)) fail("last_kernel_is_base", "F_n != F", {named("F_n", r.chain.back())});
  for (std::size_t i = 0; i < n; ++i) {
    r.checks += 2;
    if (!is_subfield(r.chain[i])) fail("kernel_subfield", "F_" + std::to_string(i + 1) + " is not a subfield", {named("F_i", r.chain[i])});
    if (i + 1 < n && (!r.chain[i].contains(r.chain[i + 1]) || r.chain[i] == r.chain[i + 1]))
      fail("chain_strict", "F_" + std::to_string(i + 2) + " is not strictly inside F_" + std::to_string(i + 1),
           {named("F_i", r.chain[i]), named("F_i+1", r.chain[i + 1])});
  }

  // Per-cell checks, each cell independently.
  auto per_cell = parallel_map<std::vector<Violation>>(table.cells.size(), jobs, [&](std::size_t k) {
    std::vector<Violation> out;
    const auto& c = table.cells[k];
    if (c.index == 0) return out;
    const Sp& fi = r.chain[c.index - 1];
    const Sp& prev = c.index >= 2 ? r.chain[c.index - 2] : whole;
    if (!(product(c.space, fi) == c.space))
      out.push_back({"cell_stabilized", "an " + std::to_string(c.index) + "-cell is not stabilized by F_i",
                     {named("S", s), named("X", c.space), named("F_i", fi)}});
    if (product(c.space, prev) == c.space)
      out.push_back({"cell_not_stabilized_by_previous", "an " + std::to_string(c.index) + "-cell is stabilized by F_{i-1}",
                     {named("S", s), named("X", c.space), named("F_i-1", prev)}});
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
      const Sp d = dual(sigmas[j], s, c.space);
      if (!is_saturated(s, d) || boundary(s, d) != c.boundary)
        out.push_back({"dual_cell_index", "sigma #" + std::to_string(j) + ": the dual of a cell changes index",
                       {named("S", s), named("X", c.space), named("X*", d)}});
    }
    return out;
  });
  for (std::size_t k = 0; k < per_cell.size(); ++k) {
    if (table.cells[k].index == 0) continue;
    r.checks += 2 + sigmas.size();
    for (auto& v : per_cell[k]) r.violations.push_back(std::move(v));
  }
  return r;
}

struct HouReport {
  std::size_t dim_s = 0, dim_t = 0, dim_st = 0, dim_h = 0;
  bool deficient = false;         // dim ST < dim S + dim T - 1
  bool bound_holds = true;        // dim ST >= dim S + dim T - dim H(ST)
  bool dichotomy_holds = true;    // not deficient, or H(ST) != F
  bool stabilizer_is_subfield = true;
  bool holds() const { return bound_holds && dichotomy_holds && stabilizer_is_subfield; }
};

template <class Sp>
HouReport check_hou_bound(const Sp& s, const Sp& t) {
  if (s.is_zero() || t.is_zero()) throw Error(ErrorCode::EmptyInput, "S and T must be nonzero");
  const Sp st = product(s, t);
  const Sp h = stabilizer(st);
  HouReport r{s.dim(), t.dim(), st.dim(), h.dim()};
  r.deficient = r.dim_st + 1 < r.dim_s + r.dim_t;
  r.bound_holds = r.dim_st + r.dim_h >= r.dim_s + r.dim_t;
  r.dichotomy_holds = !r.deficient || r.dim_h > 1;
  r.stabilizer_is_subfield = is_subfield(h);
  return r;
}

enum class KSource { stabilizer_of_s, kernel_chain, stabilizer_intersection };

inline const char* to_string(KSource k) {
  switch (k) {
    case KSource::stabilizer_of_s: return "stabilizer_of_s";
    case KSource::kernel_chain: return "kernel_chain";
    case KSource::stabilizer_intersection: return "stabilizer_intersection";
  }
  return "?";
}

template <class Sp>
struct OneSidedReport {
  KSource source = KSource::stabilizer_of_s;
  std::optional<Sp> k;
  std::optional<Sp> k_minimal;  // intersection of H(ST) over the deficient sample
  bool proper_generated_field = false;  // F(S) != L
  std::size_t sample_size = 0, deficient = 0, decompositions = 0;
  std::uint64_t checks = 0;
  std::vector<Violation> violations;
  bool k_is_minimal() const { return k && k_minimal && *k == *k_minimal; }
};

namespace detail {

template <class Sp>
Sp meet(const std::optional<Sp>& a, const Sp& b) {
  return a ? intersect(*a, b) : b;
}

// F_{n-1} for an admissible S of a finite tower (F_0 = L).
template <class Sp>
Sp one_sided_kernel(const Sp& s, unsigned jobs, std::uint64_t cap, std::vector<Violation>& violations,
                    std::uint64_t& checks) {
  const auto all = enumerate_subspaces(s.ambient(), cap);
  auto chain = kernel_chain(s, all, {}, jobs);
  checks += chain.checks;
  for (auto& v : chain.violations) violations.push_back(std::move(v));
  if (!chain.complete()) throw Error(ErrorCode::TheoremViolation, "kernel chain is incomplete");
  const std::size_t n = chain.spectrum.n;
  return n >= 2 ? chain.chain[n - 2] : full_space(s.ambient());
}

}  // namespace detail

// Looks for one subfield K != F, depending only on S, with STK = ST for every
// deficient T of the sample. When F(S) != L each deficient T is also split as
// T = T_t + T' with T_t = tF(S) n T and the pieces are checked separately.
// Errors: UnitNotInSpan, NoDeficientT.
template <class Sp>
OneSidedReport<Sp> check_one_sided(const Sp& s, const std::vector<Sp>& ts, unsigned jobs = 1,
                                   std::uint64_t cap = kDefaultEnumerationCap) {
  const auto& ambient = s.ambient();
  if (!s.contains(ambient.one())) throw Error(ErrorCode::UnitNotInSpan, "S must contain 1");
  OneSidedReport<Sp> r;
  r.sample_size = ts.size();
  const auto products = parallel_map<std::optional<Sp>>(ts.size(), jobs, [&](std::size_t i) -> std::optional<Sp> {
    if (ts[i].is_zero()) return std::nullopt;
    Sp st = product(s, ts[i]);
    if (st.dim() + 1 < s.dim() + ts[i].dim()) return st;
    return std::nullopt;
  });
  std::vector<std::size_t> deficient;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (products[i]) deficient.push_back(i);
  r.deficient = deficient.size();
  if (deficient.empty()) throw Error(ErrorCode::NoDeficientT, "no deficient T in the sample");

  const auto stabs = parallel_map<Sp>(deficient.size(), jobs, [&](std::size_t k) { return stabilizer(*products[deficient[k]]); });
  for (const auto& h : stabs) r.k_minimal = detail::meet(r.k_minimal, h);

  const Sp field = generated_subfield(s);
  r.proper_generated_field = !field.is_full();
  const Sp hs = stabilizer(s);
  const bool finite = finite_base(ambient);

  // Pieces T_t = tF(S) n T = tY with Y = {y in F(S) : ty in T}, for t over a
  // basis of T and the sum of that basis. Since ST_t = t(SY), the piece is
  // handled through SY, which lies in F(S) and has the same dimension and
  // stabilizer.
  using Elem = typename Sp::element_type;
  struct Piece {
    Elem t;
    Sp y, sy;
  };
  std::vector<std::vector<Piece>> pieces;
  if (r.proper_generated_field) {
    pieces = parallel_map<std::vector<Piece>>(deficient.size(), jobs, [&](std::size_t k) {
      const Sp& t = ts[deficient[k]];
      auto elems = t.basis();
      if (elems.size() > 1) {
        auto total = elems.front();
        for (std::size_t j = 1; j < elems.size(); ++j) total = total + elems[j];
        elems.push_back(total);
      }
      std::vector<Piece> out;
      for (const auto& e : elems) {
        Sp y = transporter_in(t, field, {e});
        Sp sy = product(s, y);
        out.push_back({e, std::move(y), std::move(sy)});
      }
      return out;
    });
  }

  if (hs.dim() > 1) {
    r.source = KSource::stabilizer_of_s;
    r.k = hs;
  } else if (finite) {
    r.source = KSource::kernel_chain;
    if (!r.proper_generated_field) {
      r.k = detail::one_sided_kernel(s, jobs, cap, r.violations, r.checks);
    } else {
      const auto sub = restrict_to_subfield(field);
      r.k = sub.lift(detail::one_sided_kernel(sub.push(s), jobs, cap, r.violations, r.checks));
    }
  } else {
    r.source = KSource::stabilizer_intersection;
    if (!r.proper_generated_field) {
      r.k = r.k_minimal;
    } else {
      std::optional<Sp> k;
      for (const auto& ps : pieces)
        for (const auto& p : ps)
          if (p.sy.dim() + 1 < s.dim() + p.y.dim()) k = detail::meet(k, stabilizer(p.sy));
      r.k = k ? *k : field;
    }
  }

  const Sp& k = *r.k;
  auto fail = [&](std::string check, std::string detail, std::vector<std::pair<std::string, std::vector<std::string>>> spaces) {
    spaces.insert(spaces.begin(), named("S", s));
    r.violations.push_back({std::move(check), std::move(detail), std::move(spaces)});
  };
  r.checks += 2;
  if (k.dim() <= 1) fail("k_proper", "K = F", {named("K", k)});
  if (!is_subfield(k)) fail("k_subfield", "K is not a subfield", {named("K", k)});
  const auto stable = parallel_map<bool>(deficient.size(), jobs, [&](std::size_t j) {
    const Sp& st = *products[deficient[j]];
    return product(st, k) == st;
  });
  for (std::size_t j = 0; j < deficient.size(); ++j) {
    ++r.checks;
    if (!stable[j])
      fail("stk_equals_st", "STK != ST", {named("T", ts[deficient[j]]), named("K", k)});
  }

  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const Sp& t = ts[deficient[j]];
    const Sp& st = *products[deficient[j]];
    for (const auto& p : pieces[j]) {
      ++r.decompositions;
      r.checks += 3;
      auto piece = [&] { return named("T_t", scale(p.t, p.y)); };
      const std::size_t dim_rest = t.dim() - p.y.dim();
      if (st.dim() < p.sy.dim() + dim_rest)
        fail("split_dimension", "dim ST < dim ST_t + dim T'", {named("T", t), piece()});
      if (!(p.sy.dim() + 1 < s.dim() + p.y.dim()))
        fail("split_deficient", "ST_t is not deficient", {named("T", t), piece()});
      else if (!(product(p.sy, k) == p.sy))
        fail("split_stabilized", "ST_t K != ST_t", {named("T", t), piece(), named("K", k)});
    }
  }
  return r;
}

struct CorrespondenceSide {
  std::size_t t_count = 0;
  std::size_t deficient = 0;
  std::map<std::size_t, std::size_t> stabilizer_sizes;  // dim H(ST) or |H(S+T)| over deficient T
};

struct CorrespondenceReport {
  std::string group;
  std::size_t group_s_size = 0;
  CorrespondenceSide field_side, group_side;
};

// Field side over every nonzero T in `all`; group side over every nonempty T
// in Z_m (m = [L:F] <= 14) with S = {0, ..., dim S - 1}. Descriptive only.
template <class Sp>
CorrespondenceReport check_group_correspondence(const Sp& s, const std::vector<Sp>& all) {
  CorrespondenceReport r;
  for (const auto& t : all) {
    if (t.is_zero()) continue;
    ++r.field_side.t_count;
    const Sp st = product(s, t);
    if (st.dim() + 1 < s.dim() + t.dim()) {
      ++r.field_side.deficient;
      ++r.field_side.stabilizer_sizes[stabilizer(st).dim()];
    }
  }
  const std::size_t m = s.ambient().dim();
  if (m > AbelianGroup::kTableOrder) throw Error(ErrorCode::Unsupported, "group side needs [L:F] <= 14");
  const AbelianGroup g({static_cast<std::uint32_t>(m)});
  r.group = g.name();
  r.group_s_size = s.dim();
  const GroupMask gs = (GroupMask{1} << s.dim()) - 1;
  for (GroupMask t = 1; t <= g.full_mask(); ++t) {
    ++r.group_side.t_count;
    const GroupMask st = sumset_mask(g, gs, t);
    const std::size_t size_t_ = static_cast<std::size_t>(std::popcount(t));
    if (static_cast<std::size_t>(std::popcount(st)) + 1 < s.dim() + size_t_) {
      ++r.group_side.deficient;
      ++r.group_side.stabilizer_sizes[static_cast<std::size_t>(std::popcount(stabilizer_mask(g, st)))];
    }
  }
  return r;
}

}  // namespace kneserlab
