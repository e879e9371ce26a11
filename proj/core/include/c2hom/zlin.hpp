#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "c2hom/matrix.hpp"
#include "c2hom/smith.hpp"

namespace c2hom {

/// Z or Z/m. Every module in the engine lives over one of these.
class BaseRing {
 public:
  enum class Kind { Integers, IntegersMod };

  BaseRing() = default;
  static BaseRing integers() { return BaseRing(); }
  static BaseRing integers_mod(const Int& m);

  Kind kind() const noexcept { return kind_; }
  bool is_mod() const noexcept { return kind_ == Kind::IntegersMod; }
  /// 0 for Z, m for Z/m.
  const Int& modulus() const noexcept { return modulus_; }

  bool is_unit(const Int& a) const;
  Int inverse(const Int& unit) const;
  bool two_invertible() const { return is_unit(Int(2)); }
  /// Reduces into [0, m) over Z/m; identity over Z.
  Int reduce(const Int& a) const;

  std::string name() const;
  bool operator==(const BaseRing& o) const { return kind_ == o.kind_ && modulus_ == o.modulus_; }
  bool operator!=(const BaseRing& o) const { return !(*this == o); }

 private:
  Kind kind_ = Kind::Integers;
  Int modulus_ = 0;
};

/// A finitely generated module over the base, given as the cokernel of its
/// relation matrix (one row per generator, one column per relator). Over
/// Z/m the relators m * e_i are implicit.
class FgModule {
 public:
  FgModule() : FgModule(BaseRing(), 0, Matrix(0, 0)) {}
  FgModule(BaseRing base, std::size_t gens, Matrix rels);

  static FgModule free(BaseRing base, std::size_t rank);
  /// Z/order as a module over `base` (order 0 gives a free rank-1 module).
  static FgModule cyclic(BaseRing base, const Int& order);
  static FgModule from_invariants(BaseRing base, const std::vector<Int>& factors);

  const BaseRing& base() const noexcept { return base_; }
  std::size_t gens() const noexcept { return gens_; }
  const Matrix& rels() const noexcept { return rels_; }
  /// Relations over Z, including m * e_i over Z/m.
  Matrix lifted_rels() const;

  /// Column-wise test whether vectors are zero in the module.
  bool is_zero_vectors(const Matrix& vecs) const;
  /// Reduces entries of vectors in this module to a canonical range when the
  /// presentation is monomial; otherwise only reduces mod m.
  void normalize(Matrix& vecs) const;

  /// Per-generator annihilator when every relator is monomial.
  const std::optional<std::vector<Int>>& row_moduli() const noexcept { return row_moduli_; }

 private:
  const LinearSolver& solver() const;

  BaseRing base_;
  std::size_t gens_;
  Matrix rels_;
  std::optional<std::vector<Int>> row_moduli_;
  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

/// Linear map on generators: target-gens x source-gens.
struct ModuleHom {
  FgModule source;
  FgModule target;
  Matrix matrix;

  ModuleHom() = default;
  ModuleHom(FgModule s, FgModule t, Matrix m);
  static ModuleHom identity(const FgModule& m);
  static ModuleHom zero(const FgModule& s, const FgModule& t);
};

/// Carries relations into relations.
bool is_well_defined(const ModuleHom& f);
/// f is zero as a map of modules.
bool is_zero_hom(const ModuleHom& f);
bool homs_equal(const ModuleHom& f, const ModuleHom& g);
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);  // g o f

/// d_1 | d_2 | ... with 0 for free Z summands; over Z/m a free summand
/// reports m.
std::vector<Int> invariant_factors(const FgModule& m);
bool is_zero_module(const FgModule& m);
/// Group order, std::nullopt when infinite.
std::optional<Int> order(const FgModule& m);
bool is_finite(const FgModule& m);
bool isomorphic(const FgModule& a, const FgModule& b);

/// SNF normal form of a module with the isomorphisms relating the old and new
/// generators: new = to * old, old = from * new (modulo relations).
struct Simplified {
  FgModule module;
  Matrix to;
  Matrix from;
};
Simplified simplify(const FgModule& m);

enum class Subquotient { Kernel, Image, Cokernel };

/// `map` goes into the source (Kernel), into the target (Image) or out of the
/// target (Cokernel). `projection` is source -> Image for Image; `section`
/// sends Cokernel generators back to target generators.
struct SubquotientResult {
  FgModule module;
  Matrix map;
  Matrix projection;
  Matrix section;
};
SubquotientResult subquotient(const ModuleHom& f, Subquotient which);

/// Lifts vectors of `m` through an injective map `incl: sub -> m`, i.e. solves
/// incl * y == v modulo the relations of m. Throws IllFormedHom if some
/// vector is not in the image.
class Lifter {
 public:
  Lifter(const Matrix& incl, const FgModule& m);
  Matrix lift(const Matrix& vecs) const;

 private:
  std::size_t sub_gens_;
  LinearSolver solver_;
};

enum class Combine { DirectSum, Tensor };
FgModule combine(const FgModule& a, const FgModule& b, Combine which);
FgModule direct_sum(const FgModule& a, const FgModule& b);
FgModule tensor(const FgModule& a, const FgModule& b);

/// Quotient of m by the span of the given columns, unsimplified.
FgModule quotient_raw(const FgModule& m, const Matrix& vecs);

std::string describe(const FgModule& m);  // "Z/2 + Z/4", "0", "Z^2"

}  // namespace c2hom
