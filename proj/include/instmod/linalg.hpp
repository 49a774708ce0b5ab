#pragma once

#include "instmod/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace instmod {

using IntMat = std::vector<std::vector<Int>>;

/// In-place reduced row echelon form over Q with primitive integer rows
/// (content 1, positive pivot). Returns the rank; if `pivot_cols` is given
/// it receives the pivot column of each of the first `rank` rows.
std::size_t rref_int(IntMat& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank_int(IntMat m);

/// Basis of { x : m x = 0 }, one primitive integer vector per free column,
/// ordered by free column index.
IntMat nullspace_int(const IntMat& m);

/// Solve m x = b over the rationals. Empty result if inconsistent.
std::optional<std::vector<Rat>> solve_rational(const IntMat& m, const std::vector<Int>& b);

/// Solve m x = b over the integers (Hermite-style lattice elimination).
std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b);

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
std::vector<Int> smith_invariants(IntMat m);

/// Sorted sparse row: (column, coefficient) with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Int>>;

/// Exact rank of a sparse integer matrix. Rows are consumed. Pivots are
/// chosen shortest-row-first, which keeps fill and coefficient growth low
/// on the near-monomial matrices this is used for.
std::size_t rank_sparse(std::vector<SparseRow> rows, std::size_t ncols);

}  // namespace instmod
