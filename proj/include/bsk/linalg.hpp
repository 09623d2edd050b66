#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bsk/rational.hpp"

namespace bsk {

/// One equation sum_j a_j x_j = rhs with entries sorted by column.
struct SparseEquation {
  std::vector<std::pair<std::size_t, Rational>> entries;
  Rational rhs;
};

struct LinearSolveStats {
  std::size_t rank = 0;
  std::size_t nonzeros = 0;
};

/// Exact solution of a sparse system over Q. Rows are scaled to integers and
/// eliminated fraction-free (integer row combinations, content removed); the
/// pivot for each column is the sparsest candidate row, ties to the lowest
/// row index. Free variables are set to zero. Returns nullopt when the
/// system is inconsistent. Throws BudgetExhausted above `max_nonzeros`.
std::optional<std::vector<Rational>> solve_sparse(std::size_t ncols, std::vector<SparseEquation> equations,
                                                  std::size_t max_nonzeros, LinearSolveStats* stats = nullptr);

/// Rank of a dense rational matrix (rows of equal length).
std::size_t dense_rank(std::vector<std::vector<Rational>> rows);

}  // namespace bsk
