#pragma once

#include <map>
#include <utility>
#include <vector>

#include "c2hom/homalg.hpp"

namespace c2hom {

/// Closed integer interval [lo, hi].
struct Interval {
  int lo = 0;
  int hi = 0;
};

struct SliceTable {
  Interval range;
  std::map<int, MackeyFunctor> rho;
  bool even = false;
  bool very_even = false;
};

/// rho_{2n} = H_{n + n sigma}(c), rho_{2n+1} = p0 H_{(n+1) + n sigma}(c).
/// When c.slice_hi is set the range must end at or below it; otherwise every
/// required homology degree must be trusted. WindowTooSmall otherwise.
MackeyFunctor rho(const MackeyComplex& c, int k);
SliceTable rho_table(const MackeyComplex& c, Interval range);

/// Every rho in range vanishes and H_n(c) = 0 for every trusted degree n of c.
bool vanishing_test(const MackeyComplex& c, Interval range);

/// H_k of the e-level evaluation vanishes for every odd k in range.
bool e_level_even(const MackeyComplex& c, Interval range);

/// A sigma-sums object given by its summands (F_n, n): the sum of
/// Constant(F_n)[n sigma].
struct SigmaFiltration {
  FiltrationTower tower;  // stages[n] = Fil_n
  std::vector<MackeyComplex> gr;
  /// gr^n[-n sigma] has homology Constant(F_n) in degree 0 only, and
  /// H_n(i^* gr^n) = F_n.
  std::vector<bool> gr_matches;
  bool all_match = false;
};
/// NotSigmaSums for negative or repeated degrees.
SigmaFiltration sigma_filtration(const BaseRing& base, const std::vector<std::pair<FgModule, int>>& parts);

/// Constant(m)[n sigma] as a complex; uses a permutation model when m is free.
MackeyComplex constant_sigma_sphere(const FgModule& m, int n);

}  // namespace c2hom
