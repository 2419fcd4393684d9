#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kneserlab/subspace.hpp"

namespace kneserlab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Number of r-dimensional subspaces of GF(q)^m; nullopt on overflow.
std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, std::size_t m, std::size_t r);
// Total number of subspaces of GF(q)^m; nullopt on overflow.
std::optional<std::uint64_t> count_subspaces(std::uint64_t q, std::size_t m);

// Visits the r-element subsets of {0..m-1} in lexicographic order.
void for_each_pivot_set(std::size_t m, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn);

// The cap in effect: KNESERLAB_MAX_ENUM when set to a positive integer,
// otherwise the given value.
std::uint64_t enumeration_cap(std::uint64_t configured = kDefaultEnumerationCap);

// Every subspace of a tower over a finite base, each exactly once, in
// canonical order (dimension, pivot set, free entries).
// Errors: InfiniteBaseField, EnumerationTooLarge.
std::vector<Subspace> enumerate_subspaces(const Tower& tower, std::uint64_t cap = kDefaultEnumerationCap,
                                          int dim_filter = -1);

}  // namespace kneserlab
