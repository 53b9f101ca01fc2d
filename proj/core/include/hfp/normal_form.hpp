#pragma once

#include <cstdint>
#include <vector>

#include "hfp/int_matrix.hpp"

namespace hfp {

/// U * A * V == D, with U and V unimodular and D diagonal, nonnegative, and
/// d_1 | d_2 | ... (zeros trail).
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<std::int64_t> diagonal() const;
};

/// Pivot rule: smallest nonzero absolute value in the active block, ties
/// broken by lowest (row, col). Output is deterministic for a given input.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// U * A == H with U unimodular and H in row Hermite normal form: pivot
/// columns strictly increase, pivots are positive, entries above a pivot lie
/// in [0, pivot), zero rows are at the bottom.
struct HermiteDecomposition {
  IntMatrix U;
  IntMatrix H;
  std::size_t rank = 0;
};

HermiteDecomposition row_hermite_form(const IntMatrix& a);

/// A * V == H with H the column Hermite form (transpose of the row form of
/// A^T) and V unimodular.
struct ColumnHermiteDecomposition {
  IntMatrix V;
  IntMatrix H;
  std::size_t rank = 0;
};

ColumnHermiteDecomposition column_hermite_form(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0}, returned as the columns of a
/// cols x k matrix. The basis is saturated and Hermite-reduced, so the same
/// lattice always yields the same matrix.
IntMatrix integer_kernel(const IntMatrix& a);

std::size_t integer_rank(const IntMatrix& a);

}  // namespace hfp
