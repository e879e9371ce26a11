#pragma once

#include <optional>
#include <vector>

#include "c2hom/matrix.hpp"

namespace c2hom {

/// Transforms to accumulate while reducing; skipping the unused ones keeps
/// the reduction cheap for wide relation matrices.
enum SmithWant : unsigned {
  kSmithNone = 0,
  kSmithLeft = 1u << 0,         // U
  kSmithLeftInverse = 1u << 1,  // U^{-1}
  kSmithRight = 1u << 2,        // V
  kSmithAll = kSmithLeft | kSmithLeftInverse | kSmithRight,
};

/// U * A * V = D with D diagonal, d_0 | d_1 | ... | d_{rank-1}, all positive.
///
/// Pivoting is deterministic: the smallest nonzero absolute value of the
/// active submatrix, ties broken by row-major position.
struct SmithForm {
  std::vector<Int> diag;  // the rank nonzero diagonal entries
  std::size_t rank = 0;
  Matrix U, Uinv, V;
};

SmithForm smith_form(Matrix a, unsigned want = kSmithAll);

/// Columns form a Z-basis of {x : A x = 0}.
Matrix integer_kernel(const Matrix& a);

/// Columns form a Z-basis of the column span of S.
Matrix column_span_basis(const Matrix& s);

/// Solves A X = B over Z column by column, reusing one Smith reduction.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a);

  /// std::nullopt when some column has no integral solution.
  std::optional<Matrix> solve(const Matrix& b) const;
  bool solvable(const Matrix& b) const { return solve(b).has_value(); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

 private:
  std::size_t rows_, cols_;
  SmithForm snf_;
};

}  // namespace c2hom
