#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "invtqft/abelian.hpp"

namespace invtqft::homology {

using Coefficient = std::int64_t;

// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Coefficient>>;

/// Integer matrix stored by columns.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<SparseVector> columns;

  std::size_t nonzeros() const;
};

/// Accumulates (index, coefficient) terms and produces a canonical SparseVector.
/// Overflow of the 64-bit coefficients throws Error(BudgetExceeded).
SparseVector collapse_terms(std::vector<std::pair<std::uint32_t, Coefficient>> terms);

struct EliminationResult {
  std::size_t rank = 0;
  std::vector<abelian::Integer> torsion;  // Smith factors > 1, ascending
  std::size_t unit_pivots = 0;
  std::size_t residual_rows = 0;
  std::size_t residual_cols = 0;

  friend bool operator==(const EliminationResult&, const EliminationResult&) = default;
};

/// Rank and torsion coefficients of an integer matrix. Unit pivots are taken
/// sparsely (Markowitz-style choice, deterministic tie-breaking); whatever is
/// left is handed to the dense Smith form.
EliminationResult eliminate_serial(const SparseMatrix& m);

/// Same pivot sequence as eliminate_serial; the row updates of each pivot step
/// run in an OpenMP parallel loop. Results are identical to the serial kernel.
EliminationResult eliminate_parallel(const SparseMatrix& m);

}  // namespace invtqft::homology
