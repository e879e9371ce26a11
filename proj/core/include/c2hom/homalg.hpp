#pragma once

#include <climits>
#include <memory>
#include <optional>
#include <vector>

#include "c2hom/box.hpp"
#include "c2hom/perm.hpp"

namespace c2hom {

/// "Homology is trusted in every degree" sentinel for hom_hi.
inline constexpr int kUnbounded = INT_MAX / 4;

/// Bounded chain complex of Mackey functors, terms in degrees lo..hi.
///
/// hom_hi records the top degree in which homology is known to be correct
/// (truncated resolutions and truncated models lower it). slice_hi, when set,
/// is the top slice index the complex is known to model correctly.
struct MackeyComplex {
  BaseRing base;
  int lo = 0;
  std::vector<MackeyFunctor> terms;
  std::vector<MackeyHom> diffs;  // diffs[i] = d_{lo+i+1}
  std::optional<int> weight;
  int hom_hi = kUnbounded;
  std::optional<int> slice_hi;
  /// Present when every term is a sum of Constant(R) and Induced(R) and the
  /// complex was built from this permutation model.
  std::shared_ptr<const PermComplex> free_model;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool empty() const { return terms.empty(); }
  MackeyFunctor term(int n) const;
  /// d_n : C_n -> C_{n-1}; the zero map outside the window.
  MackeyHom diff(int n) const;
};

/// Checks shapes, equivariance and d o d = 0 (IllFormedHom / NotEquivariant).
MackeyComplex make_complex(const BaseRing& base, int lo, std::vector<MackeyFunctor> terms,
                           std::vector<MackeyHom> diffs);
MackeyComplex concentrated(const MackeyFunctor& m, int degree = 0);
MackeyComplex zero_complex(const BaseRing& base);
MackeyComplex from_perm(const PermComplex& p);
bool dd_zero(const MackeyComplex& c);

/// H_m computed pointwise; no trust check.
MackeyFunctor homology_raw(const MackeyComplex& c, int m);
/// H_{m + nsigma sigma}(c) = H_m(c[-nsigma sigma]). WindowTooSmall when m is
/// above the trusted range of the shifted complex.
MackeyFunctor homology(const MackeyComplex& c, int m, int nsigma = 0);
/// Ordinary homology of the evaluation at C2/e (resp. C2/C2).
FgModule e_homology(const MackeyComplex& c, int n);
FgModule fix_homology(const MackeyComplex& c, int n);
/// H_n(c) = 0 for every a <= n <= b.
bool acyclic_in(const MackeyComplex& c, int a, int b);

MackeyComplex shift(const MackeyComplex& c, int j);  // [j], differential sign (-1)^j
/// Tensor with K_sigma^k (k > 0) or K_{-sigma}^{-k} (k < 0), then [j].
MackeyComplex sigma_shift(const MackeyComplex& c, int k, int j = 0);
MackeyComplex direct_sum(const MackeyComplex& a, const MackeyComplex& b);

/// comps[i] : source.term(source.lo + i) -> target.term(source.lo + i).
struct ChainMap {
  MackeyComplex source;
  MackeyComplex target;
  std::vector<MackeyHom> comps;

  MackeyHom at(int n) const;
};
ChainMap identity_map(const MackeyComplex& c);
ChainMap scalar_map(const MackeyComplex& c, const Int& s);
ChainMap compose(const ChainMap& g, const ChainMap& f);
bool is_chain_map(const ChainMap& f);
/// Cone_n = Y_n + X_{n-1}, d = [[d_Y, f], [0, -d_X]].
MackeyComplex cone(const ChainMap& f);

/// Total complex of the degreewise relative box product, Koszul signs. Uses
/// the permutation fast path when both inputs carry free models and `over`
/// is the constant functor on the base.
MackeyComplex tensor_total(const MackeyComplex& a, const MackeyComplex& b, const MackeyFunctor& over);

/// Sum of a Constant(R) and b Induced(R), if the functor is one.
std::optional<std::pair<std::size_t, std::size_t>> recognize_free(const MackeyFunctor& m);
/// Bounded below with every term a finite sum of Constant(R), Induced(R).
bool is_pseudo_coherent(const MackeyComplex& c);

/// Free resolution P -> a, exact through degree `exact_through`.
struct FreeResolution {
  PermComplex model;
  MackeyComplex complex;
  ChainMap augmentation;
  int exact_through = kUnbounded;
};
FreeResolution free_resolution(const MackeyComplex& a, int length);
MackeyComplex resolve_and_derived_tensor(const MackeyComplex& a, const MackeyComplex& b, const MackeyFunctor& over,
                                         int length);

/// entries[k-1] = cone(p^k on c) = c tensor (R --p^k--> R); maps[k-1] :
/// entries[k] -> entries[k-1] is (y, x) |-> (y, p x).
struct PkTower {
  std::vector<MackeyComplex> entries;
  std::vector<ChainMap> maps;
  /// Smallest k from which all entries share homology invariants.
  int stable_from = 1;
  bool stable = false;
};
PkTower mod_pk_tower(const MackeyComplex& c, const Int& p, int kmax);

/// stages[0] = Fil_0, ...; maps[n] : stages[n+1] -> stages[n].
struct FiltrationTower {
  std::vector<MackeyComplex> stages;
  std::vector<ChainMap> maps;
};
struct TowerReport {
  std::vector<MackeyComplex> gr;
  bool complete_in_window = false;
  std::optional<std::size_t> vanishing_from;
};
/// gr^n = cone(Fil_{n+1} -> Fil_n); the last stage is its own graded piece.
TowerReport tower_gr_and_completeness(const FiltrationTower& t, int lo, int hi);

}  // namespace c2hom
