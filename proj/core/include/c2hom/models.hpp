#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "c2hom/slices.hpp"

namespace c2hom {

/// Complexes indexed by a monoid weight.
struct WeightGradedComplex {
  BaseRing base;
  std::map<int, MackeyComplex> pieces;
  std::string meta;
};

/// Sum of all pieces, in weight order.
MackeyComplex total(const WeightGradedComplex& w);

Int binomial(int n, int k);
/// Number of weight-w basis n-forms x^a dx_I in d variables (|I| = n,
/// |a| + n = w): C(d, n) C(w - n + d - 1, d - 1).
Int mu(int d, int n, int w);

/// d-fold tensor product of the one-variable model R + R[sigma] (weights
/// >= 1) and R (weight 0), split by total weight 0..wmax.
WeightGradedComplex hr_polynomial(const BaseRing& r, int d, int wmax);
/// The summand list (R^mu(n, w), n) of the weight-w piece.
std::vector<std::pair<FgModule, int>> hr_polynomial_parts(const BaseRing& r, int d, int w);

/// R[x, 1/x] with x -> 1/x. The involution swaps weights j and -j, so pieces
/// are keyed by the sector s = |j| (weights s and -s together).
struct LaurentModel {
  WeightGradedComplex plain;       // A + A[1] per sector
  WeightGradedComplex sigma_form;  // Omega^0 + Omega^1[sigma] per sector
  std::map<int, bool> agrees;      // homology tables of the two forms, per sector
  bool two_invertible = false;
  std::optional<std::string> obstruction;
  /// id on the degree-0 summands, x^j -> x^{nj} on the degree-1 summands,
  /// as an endomorphism of total(plain). Classes sent outside the sector
  /// window are dropped.
  std::optional<ChainMap> power_map;
  std::map<int, int> power_targets;  // sector s -> |n| s
};
/// Sectors 0..smax. ZeroPowerMap if power == 0.
LaurentModel hr_sign_laurent(const BaseRing& r, int smax, std::optional<int> power = std::nullopt);

/// R[a, b] with a <-> b, split by total weight 0..wmax.
struct ConjPlaneModel {
  /// A + (R[v,w] + R[x,y])[1] + A[1 + sigma]; the middle summand of weight
  /// w is spanned by the degree w - 1 monomials of both copies.
  WeightGradedComplex plain;
  /// Omega^0 + Omega^1[sigma] + Omega^2[2 sigma].
  WeightGradedComplex sigma_form;
  std::map<int, bool> agrees;
  bool two_invertible = false;
  std::optional<std::string> obstruction;
};
ConjPlaneModel hr_conjugation_plane(const BaseRing& r, int wmax);

/// Sum of Constant(R)[n + n sigma] for 0 <= n <= nmax. R must be Z/p^k
/// (UnsupportedBase otherwise).
MackeyComplex thr_perfectoid_model(const BaseRing& r, int nmax);
/// Multiplication by u: model[1 + sigma] -> model, the summand shift.
ChainMap perfectoid_u(const BaseRing& r, int nmax);

struct CofiberReport {
  MackeyComplex cone;
  Interval window;  // degrees in which the truncated model is exact
  std::vector<MackeyFunctor> homology;  // H_n(cone) for n in window
  bool matches_hr = false;
};
CofiberReport cofiber_u_check(const BaseRing& r, int nmax);

/// True when the table rows (homology invariants in every degree either
/// complex occupies) agree.
bool same_homology(const MackeyComplex& a, const MackeyComplex& b);

}  // namespace c2hom
