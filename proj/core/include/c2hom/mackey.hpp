#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c2hom/zlin.hpp"

namespace c2hom {

/// Lewis diagram of a C2-Mackey functor. `res` is me x mfix on generators,
/// `tr` is mfix x me, `w` is me x me.
struct MackeyFunctor {
  FgModule me;
  FgModule mfix;
  Matrix res;
  Matrix tr;
  Matrix w;

  MackeyFunctor() = default;
  /// Checks shapes and bases; does not check the axioms (see validate).
  MackeyFunctor(FgModule e, FgModule fix, Matrix res, Matrix tr, Matrix w);

  const BaseRing& base() const noexcept { return me.base(); }
  ModuleHom res_hom() const { return ModuleHom(mfix, me, res); }
  ModuleHom tr_hom() const { return ModuleHom(me, mfix, tr); }
  ModuleHom w_hom() const { return ModuleHom(me, me, w); }
};

struct MackeyHom {
  MackeyFunctor source;
  MackeyFunctor target;
  Matrix fe;    // target.me x source.me
  Matrix ffix;  // target.mfix x source.mfix

  MackeyHom() = default;
  MackeyHom(MackeyFunctor s, MackeyFunctor t, Matrix e, Matrix fix);

  static MackeyHom identity(const MackeyFunctor& m);
  static MackeyHom zero(const MackeyFunctor& s, const MackeyFunctor& t);
};

MackeyHom compose(const MackeyHom& g, const MackeyHom& f);  // g o f
MackeyHom operator+(const MackeyHom& f, const MackeyHom& g);
MackeyHom operator*(const Int& s, const MackeyHom& f);
bool is_zero_hom(const MackeyHom& f);
/// Well-defined at both levels and commutes with res, tr, w.
bool is_equivariant(const MackeyHom& f);

// ---- constructors -----------------------------------------------------------

enum class StandardKind { Constant, Induced, FixedPoint, Burnside };

MackeyFunctor make_standard(StandardKind kind, const BaseRing& base, const std::optional<FgModule>& m,
                            const std::optional<Matrix>& involution = std::nullopt);

MackeyFunctor constant(const FgModule& m);
MackeyFunctor constant(const BaseRing& base);  // the constant functor on the base itself
/// e-level generators are ordered (x_0, ..., x_{g-1}, g x_0, ..., g x_{g-1}).
MackeyFunctor induced(const FgModule& m);
MackeyFunctor induced(const BaseRing& base);
MackeyFunctor fixed_point(const FgModule& m, const Matrix& tau);
/// The Burnside functor over the base; fix-level basis ([C2/C2], [C2/e]).
MackeyFunctor burnside(const BaseRing& base);
MackeyFunctor zero_functor(const BaseRing& base);
/// Concentrated at the fixed level: <0, m>.
MackeyFunctor fix_only(const FgModule& m);
/// Concentrated at the underlying level with involution tau: <m with tau, 0>.
MackeyFunctor e_only(const FgModule& m, const Matrix& tau);

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b);
MackeyFunctor direct_sum(const std::vector<MackeyFunctor>& parts, const BaseRing& base);
MackeyHom direct_sum(const MackeyHom& f, const MackeyHom& g);

// ---- checks -----------------------------------------------------------------

struct ValidationReport {
  bool mackey_axioms = false;
  bool green_module = false;
};
ValidationReport validate(const MackeyFunctor& m);

bool is_zero_functor(const MackeyFunctor& m);
bool is_finite(const MackeyFunctor& m);
/// Upper bound on the number of elements (product of both level orders).
std::optional<Int> total_order(const MackeyFunctor& m);

/// Both levels in Smith normal form, with the generator transforms.
struct SimplifiedMackey {
  MackeyFunctor functor;
  Matrix to_e, from_e, to_fix, from_fix;
};
SimplifiedMackey simplify(const MackeyFunctor& m);

/// Isomorphism invariant: invariant factors of both levels and of the
/// kernels and cokernels of res, tr, w - 1, w + 1.
struct InvariantTuple {
  std::vector<std::vector<Int>> parts;
  bool operator==(const InvariantTuple& o) const { return parts == o.parts; }
  bool operator!=(const InvariantTuple& o) const { return parts != o.parts; }
  std::string str() const;
};
InvariantTuple invariant_tuple(const MackeyFunctor& m);
bool same_invariants(const MackeyFunctor& a, const MackeyFunctor& b);

/// Searches Hom(a, b) for an isomorphism. Enumerates the whole group when it
/// has at most `budget` elements and samples `budget` random elements
/// otherwise. Both functors must be finite.
std::optional<MackeyHom> find_isomorphism(const MackeyFunctor& a, const MackeyFunctor& b,
                                          std::size_t budget = 4096, std::uint64_t seed = 0x5eed);
bool is_isomorphism(const MackeyHom& f);

/// Presentations of Hom(a, b): every element is from * (coefficients) read
/// back as (fe, ffix).
struct HomGroup {
  FgModule group;
  std::vector<Matrix> fe_basis;    // one per group generator
  std::vector<Matrix> ffix_basis;
};
HomGroup hom_group(const MackeyFunctor& a, const MackeyFunctor& b);

/// Exact structural equality of presentations and matrices.
bool structurally_equal(const MackeyFunctor& a, const MackeyFunctor& b);

// ---- operations -------------------------------------------------------------

/// Kills ker(res) at the fixed level.
MackeyFunctor p0(const MackeyFunctor& m);

enum class PointwiseKind { Kernel, Cokernel, Image };
/// The subquotient together with its canonical map (into the source for
/// Kernel, out of the target for Cokernel, into the target for Image).
struct PointwiseResult {
  MackeyFunctor functor;
  MackeyHom map;
};
PointwiseResult pointwise(const MackeyHom& f, PointwiseKind which);
MackeyFunctor pointwise_subquotient(const MackeyHom& f, PointwiseKind which);

struct SkeletonReport {
  MackeyHom kernel_w_eq;  // Constant(mfix) -> m
  MackeyFunctor kernel;
  MackeyFunctor cokernel;
  /// layers[0] = kernel, layers[1] = cokernel; each has fix level 0 and w = -1.
  std::vector<MackeyFunctor> layers;
  bool layers_fix_zero = false;
  bool layers_w_minus_one = false;
};
SkeletonReport finite_mackey_skeleton(const MackeyFunctor& m);

/// Aligned text rendering of the Lewis diagram.
std::string lewis_diagram(const MackeyFunctor& m);
std::string summary(const MackeyFunctor& m);  // one line

}  // namespace c2hom
