#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kneserlab/gf2.hpp"
#include "kneserlab/operators.hpp"

namespace kneserlab {

// Generator for item `index` of a run seeded with `seed`; items are
// independent, so any one of them can be replayed alone.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

// Random element with roughly a third of its coordinates zero; rational
// function coefficients have numerator and denominator degree <= max_degree.
Element random_sparse_element(const Tower& tower, std::mt19937_64& rng, unsigned max_degree = 2);

// Uniform-ish subspace of the requested dimension (rejection sampled).
Subspace random_subspace(const Tower& tower, std::mt19937_64& rng, std::size_t dim, unsigned max_degree = 2);
// As above, with 1 among the spanning vectors; dim >= 1.
Subspace random_subspace_with_one(const Tower& tower, std::mt19937_64& rng, std::size_t dim,
                                  unsigned max_degree = 2);

// Up to count nondegenerate forms: the tower's default first, then distinct
// random ones with coefficients in the prime field. Degenerate candidates,
// which only occur when L is not a field, are skipped.
std::vector<DualityContext> sigma_family(const Tower& tower, std::size_t count, std::uint64_t seed);

namespace gf2 {

Space random_subspace(const Algebra& algebra, std::mt19937_64& rng, std::size_t dim);
Space random_subspace_with_one(const Algebra& algebra, std::mt19937_64& rng, std::size_t dim);
// first = 0 stands for the default form (last coordinate). Skips degenerate
// forms as above.
std::vector<DualityContext> sigma_family(const Algebra& algebra, std::size_t count, std::uint64_t seed,
                                         Mask first = 0);

}  // namespace gf2

}  // namespace kneserlab
