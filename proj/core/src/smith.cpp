#include "c2hom/smith.hpp"

#include <algorithm>

namespace c2hom {
namespace {

// Applies elementary operations to A and mirrors them on the requested
// transforms.
struct Reducer {
  Matrix& a;
  unsigned want;
  Matrix U, Uinv, V;

  Reducer(Matrix& m, unsigned w) : a(m), want(w) {
    if (want & kSmithLeft) U = Matrix::identity(a.rows());
    if (want & kSmithLeftInverse) Uinv = Matrix::identity(a.rows());
    if (want & kSmithRight) V = Matrix::identity(a.cols());
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    if (want & kSmithLeft) U.swap_rows(i, j);
    if (want & kSmithLeftInverse) Uinv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    if (want & kSmithRight) V.swap_cols(i, j);
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Int& k) {
    a.add_row_multiple(i, j, k);
    if (want & kSmithLeft) U.add_row_multiple(i, j, k);
    if (want & kSmithLeftInverse) Uinv.add_col_multiple(j, i, -k);
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const Int& k) {
    a.add_col_multiple(i, j, k);
    if (want & kSmithRight) V.add_col_multiple(i, j, k);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    if (want & kSmithLeft) U.negate_row(i);
    if (want & kSmithLeftInverse) Uinv.negate_col(i);
  }
};

bool abs_less(const Int& x, const Int& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()) < 0; }

}  // namespace

SmithForm smith_form(Matrix a, unsigned want) {
  const std::size_t m = a.rows(), n = a.cols();
  Reducer red(a, want);
  std::size_t t = 0;
  Int q;
  while (t < std::min(m, n)) {
    // Global pivot: smallest |a_ij| in the active block, row-major ties.
    // A unit is unbeatable, so the scan stops at the first one.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        const Int& v = a(i, j);
        if (sgn(v) == 0) continue;
        if (pr == m || abs_less(v, a(pr, pc))) {
          pr = i;
          pc = j;
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) break;
        }
      }
      if (pr != m && mpz_cmpabs_ui(a(pr, pc).get_mpz_t(), 1) == 0) break;
    }
    if (pr == m) break;
    red.swap_rows(t, pr);
    red.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        red.add_row(i, t, -q);
        if (sgn(a(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        red.add_col(j, t, -q);
        if (sgn(a(t, j)) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(a(i, t)) != 0 && abs_less(a(i, t), a(br, bc))) {
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(a(t, j)) != 0 && abs_less(a(t, j), a(br, bc))) {
            br = t;
            bc = j;
          }
        red.swap_rows(t, br);
        red.swap_cols(t, bc);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            red.add_row(t, i, Int(1));
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (sgn(a(t, t)) < 0) red.negate_row(t);
    ++t;
  }

  SmithForm out;
  out.rank = t;
  out.diag.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.diag.push_back(a(i, i));
  out.U = std::move(red.U);
  out.Uinv = std::move(red.Uinv);
  out.V = std::move(red.V);
  return out;
}

Matrix integer_kernel(const Matrix& a) {
  SmithForm s = smith_form(a, kSmithRight);
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank; j < a.cols(); ++j) idx.push_back(j);
  return s.V.columns(idx);
}

Matrix column_span_basis(const Matrix& s) {
  SmithForm f = smith_form(s, kSmithLeftInverse);
  Matrix out(s.rows(), f.rank);
  for (std::size_t j = 0; j < f.rank; ++j)
    for (std::size_t i = 0; i < s.rows(); ++i) out(i, j) = f.Uinv(i, j) * f.diag[j];
  return out;
}

LinearSolver::LinearSolver(const Matrix& a)
    : rows_(a.rows()), cols_(a.cols()), snf_(smith_form(a, kSmithLeft | kSmithRight)) {}

std::optional<Matrix> LinearSolver::solve(const Matrix& b) const {
  if (b.rows() != rows_) return std::nullopt;
  Matrix ub = snf_.U * b;
  Matrix y(cols_, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const Int& v = ub(i, c);
      if (i < snf_.rank) {
        if (!mpz_divisible_p(v.get_mpz_t(), snf_.diag[i].get_mpz_t())) return std::nullopt;
        mpz_divexact(y(i, c).get_mpz_t(), v.get_mpz_t(), snf_.diag[i].get_mpz_t());
      } else if (sgn(v) != 0) {
        return std::nullopt;
      }
    }
  }
  return snf_.V * y;
}

}  // namespace c2hom
