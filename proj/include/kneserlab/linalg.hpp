#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kneserlab/scalar.hpp"

namespace kneserlab {

using Row = std::vector<Scalar>;

bool is_zero_row(const Row& r);

// Brings rows into reduced row echelon form in place and drops zero rows.
// Pivots are the leftmost nonzero entries, strictly increasing, equal to 1.
// Returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& rows, std::size_t ncols);

// Reduces v against rows already in RREF (pivots given).
void reduce_against(Row& v, const std::vector<Row>& rref_rows, const std::vector<std::size_t>& pivots);

// RREF basis of {c : sum_i c_i * rows[i] = 0}; rows all have ncols entries.
std::vector<Row> left_kernel(const std::vector<Row>& rows, std::size_t ncols, const FieldDescriptor& f);

// Coefficients c with sum_i c_i * rows[i] = target, or nullopt.
std::optional<Row> solve_left(const std::vector<Row>& rows, const Row& target, const FieldDescriptor& f);

}  // namespace kneserlab
