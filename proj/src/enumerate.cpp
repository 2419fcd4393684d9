#include "kneserlab/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "kneserlab/error.hpp"

namespace kneserlab {

std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, std::size_t m, std::size_t r) {
  if (r > m) return 0;
  // prod_{i<r} (q^{m-i} - 1) / (q^{i+1} - 1), exact after each step
  unsigned __int128 value = 1;
  for (std::size_t i = 0; i < r; ++i) {
    unsigned __int128 num = 1, den = 1;
    for (std::size_t k = 0; k < m - i; ++k) {
      num *= q;
      if (num > (static_cast<unsigned __int128>(1) << 100)) return std::nullopt;
    }
    for (std::size_t k = 0; k < i + 1; ++k) den *= q;
    value = value * (num - 1);
    if (value > (static_cast<unsigned __int128>(1) << 120)) return std::nullopt;
    value /= (den - 1);
  }
  if (value > UINT64_MAX) return std::nullopt;
  return static_cast<std::uint64_t>(value);
}

std::optional<std::uint64_t> count_subspaces(std::uint64_t q, std::size_t m) {
  std::uint64_t total = 0;
  for (std::size_t r = 0; r <= m; ++r) {
    auto g = gaussian_binomial(q, m, r);
    if (!g || *g > UINT64_MAX - total) return std::nullopt;
    total += *g;
  }
  return total;
}

void for_each_pivot_set(std::size_t m, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (r > m) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t enumeration_cap(std::uint64_t configured) {
  if (const char* env = std::getenv("KNESERLAB_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return configured;
}

std::vector<Subspace> enumerate_subspaces(const Tower& tower, std::uint64_t cap, int dim_filter) {
  const FieldDescriptor& f = tower.base();
  if (!f.is_finite()) throw Error(ErrorCode::InfiniteBaseField, "cannot enumerate subspaces over " + f.name());
  const auto q = f.order();
  const std::size_t m = tower.dim();
  std::optional<std::uint64_t> total;
  if (q) total = dim_filter < 0 ? count_subspaces(*q, m) : gaussian_binomial(*q, m, static_cast<std::size_t>(dim_filter));
  if (!total || *total > cap)
    throw Error(ErrorCode::EnumerationTooLarge, "subspace count exceeds the enumeration cap " + std::to_string(cap));
  const auto elems = f.elements();
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  const TowerPtr t = tower.shared_from_this();
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(*total));
  for (std::size_t r = 0; r <= m; ++r) {
    if (dim_filter >= 0 && r != static_cast<std::size_t>(dim_filter)) continue;
    for_each_pivot_set(m, r, [&](const std::vector<std::size_t>& piv) {
      std::vector<bool> is_pivot(m, false);
      for (auto p : piv) is_pivot[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = piv[i] + 1; c < m; ++c)
          if (!is_pivot[c]) slots.push_back({i, c});
      std::vector<std::size_t> digit(slots.size(), 0);
      while (true) {
        std::vector<Row> rows(r, Row(m, zero));
        for (std::size_t i = 0; i < r; ++i) rows[i][piv[i]] = one;
        for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = elems[digit[s]];
        out.emplace_back(t, std::move(rows), piv);
        std::size_t s = 0;
        while (s < digit.size() && ++digit[s] == elems.size()) digit[s++] = 0;
        if (s == digit.size()) break;
      }
    });
  }
  return out;
}

}  // namespace kneserlab
