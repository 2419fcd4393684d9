#include "kneserlab/sampling.hpp"

#include <set>

#include "kneserlab/error.hpp"

namespace kneserlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kMaxDraws = 4096;

template <class Space, class Draw>
Space grow_to(Space s, std::size_t dim, Draw&& draw) {
  for (int attempt = 0; s.dim() < dim; ++attempt) {
    if (attempt == kMaxDraws) throw Error(ErrorCode::Unsupported, "could not sample an independent vector");
    auto v = draw();
    if (!s.contains(v)) s = sum(s, span(s.ambient(), {v}));
  }
  return s;
}

}  // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

Element random_sparse_element(const Tower& tower, std::mt19937_64& rng, unsigned max_degree) {
  if (tower.is_finite_base()) return random_element(tower, rng);
  std::vector<Scalar> c;
  c.reserve(tower.dim());
  for (std::size_t i = 0; i < tower.dim(); ++i)
    c.push_back(rng() % 3 == 0 ? Scalar::from_int(tower.base(), 0) : random_scalar(tower.base(), rng, max_degree));
  return tower.element(std::move(c));
}

Subspace random_subspace(const Tower& tower, std::mt19937_64& rng, std::size_t dim, unsigned max_degree) {
  if (dim > tower.dim()) throw Error(ErrorCode::DimensionOverflow, "subspace dimension exceeds [L:F]");
  return grow_to(zero_space(tower), dim, [&] { return random_sparse_element(tower, rng, max_degree); });
}

Subspace random_subspace_with_one(const Tower& tower, std::mt19937_64& rng, std::size_t dim, unsigned max_degree) {
  if (dim == 0 || dim > tower.dim()) throw Error(ErrorCode::DimensionOverflow, "invalid dimension for S");
  return grow_to(unit_space(tower), dim, [&] { return random_sparse_element(tower, rng, max_degree); });
}

std::vector<DualityContext> sigma_family(const Tower& tower, std::size_t count, std::uint64_t seed) {
  const TowerPtr ptr = tower.shared_from_this();
  std::vector<DualityContext> out;
  std::set<std::vector<std::int64_t>> seen;
  auto add = [&](const std::vector<std::int64_t>& v) {
    if (!seen.insert(v).second) return;
    std::vector<Scalar> sigma;
    for (auto c : v) sigma.push_back(Scalar::from_int(tower.base(), c));
    try {
      out.emplace_back(ptr, std::move(sigma));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateForm) throw;
    }
  };
  const std::vector<Scalar> def = tower.default_sigma();
  std::vector<std::int64_t> first;
  for (const auto& c : def) first.push_back(c.is_zero() ? 0 : 1);
  if (count > 0) {
    seen.insert(first);
    try {
      out.emplace_back(ptr, def);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateForm) throw;
    }
  }
  const std::uint32_t p = tower.base().characteristic();
  std::mt19937_64 rng = instance_rng(seed, 0x5167);
  for (int attempt = 0; out.size() < count && attempt < kMaxDraws; ++attempt) {
    std::vector<std::int64_t> v(tower.dim());
    bool nonzero = false;
    for (auto& c : v) nonzero |= (c = static_cast<std::int64_t>(rng() % p)) != 0;
    if (nonzero) add(v);
  }
  return out;
}

namespace gf2 {

Space random_subspace(const Algebra& algebra, std::mt19937_64& rng, std::size_t dim) {
  if (dim > algebra.dim()) throw Error(ErrorCode::DimensionOverflow, "subspace dimension exceeds [L:F]");
  return grow_to(zero_space(algebra), dim, [&] { return random_element(algebra, rng); });
}

Space random_subspace_with_one(const Algebra& algebra, std::mt19937_64& rng, std::size_t dim) {
  if (dim == 0 || dim > algebra.dim()) throw Error(ErrorCode::DimensionOverflow, "invalid dimension for S");
  return grow_to(unit_space(algebra), dim, [&] { return random_element(algebra, rng); });
}

std::vector<DualityContext> sigma_family(const Algebra& algebra, std::size_t count, std::uint64_t seed, Mask first) {
  std::vector<DualityContext> out;
  if (count == 0) return out;
  const Mask def = first ? first : Mask{1} << (algebra.dim() - 1);
  std::set<Mask> seen;
  auto add = [&](Mask m) {
    if (!seen.insert(m).second) return;
    try {
      out.emplace_back(algebra, m);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateForm) throw;
    }
  };
  add(def);
  std::mt19937_64 rng = instance_rng(seed, 0x5167);
  for (int attempt = 0; out.size() < count && attempt < kMaxDraws; ++attempt)
    if (const Mask m = rng() & algebra.full_mask()) add(m);
  return out;
}

}  // namespace gf2

}  // namespace kneserlab
