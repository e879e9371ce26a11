#pragma once

#include <vector>

#include "c2hom/mackey.hpp"

namespace c2hom {

/// Orbit types of a permutation C2-module basis. A Fixed orbit is one basis
/// vector fixed by g; a Free orbit is a pair (x, gx).
enum class Orbit { Fixed, Free };

/// Bounded complex of permutation modules over the base ring. Applying the
/// fixed-point functor gives a complex of sums of Constant(R) and Induced(R).
///
/// The e-level basis of a degree lists its orbits in order, a Free orbit
/// contributing (x, gx). diffs[i] is the e-level matrix of
/// d_{lo+i+1}: C_{lo+i+1} -> C_{lo+i}; it commutes with the involution.
struct PermComplex {
  BaseRing base;
  int lo = 0;
  std::vector<std::vector<Orbit>> orbits;
  std::vector<Matrix> diffs;

  int hi() const { return lo + static_cast<int>(orbits.size()) - 1; }
  bool empty() const { return orbits.empty(); }
  const std::vector<Orbit>& at(int n) const;
  /// e-level differential d_n; a zero matrix of the right shape outside.
  Matrix diff(int n) const;
  std::size_t rank(int n) const;  // e-level rank
  std::size_t size() const;       // number of orbits overall
};

std::size_t e_rank(const std::vector<Orbit>& orbits);
Matrix involution(const std::vector<Orbit>& orbits);
MackeyFunctor perm_functor(const BaseRing& base, const std::vector<Orbit>& orbits);
/// The Mackey map induced by an equivariant e-level matrix.
MackeyHom perm_map(const BaseRing& base, const std::vector<Orbit>& src, const std::vector<Orbit>& tgt,
                   const Matrix& e);
/// Fixed-level matrix determined by an equivariant e-level matrix.
Matrix perm_fix_matrix(const std::vector<Orbit>& src, const std::vector<Orbit>& tgt, const Matrix& e);

PermComplex perm_unit(const BaseRing& base, std::size_t rank = 1);  // R^rank in degree 0
PermComplex perm_zero(const BaseRing& base);
/// Induced(R) -> Constant(R) in degrees 1, 0 (summation).
PermComplex k_sigma(const BaseRing& base);
/// Constant(R) -> Induced(R) in degrees 0, -1 (diagonal).
PermComplex k_minus_sigma(const BaseRing& base);

PermComplex perm_direct_sum(const PermComplex& a, const PermComplex& b);
PermComplex perm_shift(const PermComplex& c, int j);  // [j], differential sign (-1)^j
/// Tensor product with Koszul signs d(a (x) b) = da (x) b + (-1)^|a| a (x) db.
PermComplex perm_tensor(const PermComplex& a, const PermComplex& b);
/// Cancels invertible equivariant blocks of the differential (Gaussian
/// elimination); the result is chain homotopy equivalent.
PermComplex minimize(const PermComplex& c);
/// c tensored with K_sigma (k > 0) or K_{-sigma} (k < 0) |k| times, minimized.
PermComplex perm_sigma_shift(const PermComplex& c, int k);
/// R^rank[a + b sigma], minimized.
PermComplex sphere(const BaseRing& base, std::size_t rank, int a, int b);

bool perm_dd_zero(const PermComplex& c);
bool perm_equivariant(const PermComplex& c);

}  // namespace c2hom
