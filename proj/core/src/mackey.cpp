#include "c2hom/mackey.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

#include "c2hom/error.hpp"

namespace c2hom {
namespace {

Matrix fit(Matrix m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() == rows && m.cols() == cols) return m;
  if (m.empty() && (rows == 0 || cols == 0)) return Matrix(rows, cols);
  fail(ErrorKind::SchemaError, std::string(what) + " has shape " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                                   std::to_string(cols));
}

Matrix swap_matrix(std::size_t g) {
  Matrix s(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    s(i, g + i) = 1;
    s(g + i, i) = 1;
  }
  return s;
}

}  // namespace

MackeyFunctor::MackeyFunctor(FgModule e, FgModule fix, Matrix r, Matrix t, Matrix ww)
    : me(std::move(e)), mfix(std::move(fix)) {
  if (me.base() != mfix.base()) fail(ErrorKind::BaseMismatch, "levels over different bases");
  res = fit(std::move(r), me.gens(), mfix.gens(), "res");
  tr = fit(std::move(t), mfix.gens(), me.gens(), "tr");
  w = fit(std::move(ww), me.gens(), me.gens(), "w");
  me.normalize(res);
  mfix.normalize(tr);
  me.normalize(w);
}

MackeyHom::MackeyHom(MackeyFunctor s, MackeyFunctor t, Matrix e, Matrix fix)
    : source(std::move(s)), target(std::move(t)) {
  if (source.base() != target.base()) fail(ErrorKind::BaseMismatch, "Mackey map between different bases");
  fe = fit(std::move(e), target.me.gens(), source.me.gens(), "fe");
  ffix = fit(std::move(fix), target.mfix.gens(), source.mfix.gens(), "ffix");
  target.me.normalize(fe);
  target.mfix.normalize(ffix);
}

MackeyHom MackeyHom::identity(const MackeyFunctor& m) {
  return MackeyHom(m, m, Matrix::identity(m.me.gens()), Matrix::identity(m.mfix.gens()));
}

MackeyHom MackeyHom::zero(const MackeyFunctor& s, const MackeyFunctor& t) {
  return MackeyHom(s, t, Matrix(t.me.gens(), s.me.gens()), Matrix(t.mfix.gens(), s.mfix.gens()));
}

MackeyHom compose(const MackeyHom& g, const MackeyHom& f) {
  return MackeyHom(f.source, g.target, g.fe * f.fe, g.ffix * f.ffix);
}

MackeyHom operator+(const MackeyHom& f, const MackeyHom& g) {
  return MackeyHom(f.source, f.target, f.fe + g.fe, f.ffix + g.ffix);
}

MackeyHom operator*(const Int& s, const MackeyHom& f) { return MackeyHom(f.source, f.target, s * f.fe, s * f.ffix); }

bool is_zero_hom(const MackeyHom& f) {
  return f.target.me.is_zero_vectors(f.fe) && f.target.mfix.is_zero_vectors(f.ffix);
}

bool is_equivariant(const MackeyHom& f) {
  const MackeyFunctor& s = f.source;
  const MackeyFunctor& t = f.target;
  if (!is_well_defined(ModuleHom(s.me, t.me, f.fe))) return false;
  if (!is_well_defined(ModuleHom(s.mfix, t.mfix, f.ffix))) return false;
  return t.me.is_zero_vectors(f.fe * s.res - t.res * f.ffix) && t.mfix.is_zero_vectors(f.ffix * s.tr - t.tr * f.fe) &&
         t.me.is_zero_vectors(f.fe * s.w - t.w * f.fe);
}

// ---- constructors -----------------------------------------------------------

MackeyFunctor constant(const FgModule& m) {
  const std::size_t g = m.gens();
  return MackeyFunctor(m, m, Matrix::identity(g), Matrix::scalar(g, 2), Matrix::identity(g));
}

MackeyFunctor constant(const BaseRing& base) { return constant(FgModule::free(base, 1)); }

MackeyFunctor induced(const FgModule& m) {
  const std::size_t g = m.gens();
  Matrix id = Matrix::identity(g);
  return MackeyFunctor(direct_sum(m, m), m, vstack(id, id), hstack(id, id), swap_matrix(g));
}

MackeyFunctor induced(const BaseRing& base) { return induced(FgModule::free(base, 1)); }

MackeyFunctor fixed_point(const FgModule& m, const Matrix& tau) {
  const std::size_t g = m.gens();
  if (tau.rows() != g || tau.cols() != g) fail(ErrorKind::NotAnInvolution, "involution has the wrong shape");
  if (!is_well_defined(ModuleHom(m, m, tau))) fail(ErrorKind::NotAnInvolution, "involution is not a module map");
  const Matrix id = Matrix::identity(g);
  if (!m.is_zero_vectors(tau * tau - id)) fail(ErrorKind::NotAnInvolution, "tau * tau != 1");
  SubquotientResult k = subquotient(ModuleHom(m, m, id - tau), Subquotient::Kernel);
  Matrix tr = Lifter(k.map, m).lift(id + tau);
  return MackeyFunctor(m, k.module, k.map, tr, tau);
}

MackeyFunctor burnside(const BaseRing& base) {
  return MackeyFunctor(FgModule::free(base, 1), FgModule::free(base, 2), Matrix{{1, 2}}, Matrix{{0}, {1}},
                       Matrix{{1}});
}

MackeyFunctor zero_functor(const BaseRing& base) {
  return MackeyFunctor(FgModule::free(base, 0), FgModule::free(base, 0), Matrix(), Matrix(), Matrix());
}

MackeyFunctor fix_only(const FgModule& m) {
  return MackeyFunctor(FgModule::free(m.base(), 0), m, Matrix(), Matrix(), Matrix());
}

MackeyFunctor e_only(const FgModule& m, const Matrix& tau) {
  return MackeyFunctor(m, FgModule::free(m.base(), 0), Matrix(), Matrix(), tau);
}

MackeyFunctor make_standard(StandardKind kind, const BaseRing& base, const std::optional<FgModule>& m,
                            const std::optional<Matrix>& involution) {
  if (kind == StandardKind::Burnside) return burnside(base);
  if (!m) fail(ErrorKind::MissingArgument, "module argument required");
  if (m->base() != base) fail(ErrorKind::BaseMismatch, "module is over " + m->base().name());
  switch (kind) {
    case StandardKind::Constant: return constant(*m);
    case StandardKind::Induced: return induced(*m);
    case StandardKind::FixedPoint:
      if (!involution) fail(ErrorKind::MissingArgument, "FixedPoint requires an involution");
      return fixed_point(*m, *involution);
    case StandardKind::Burnside: break;
  }
  return burnside(base);
}

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b) {
  return MackeyFunctor(direct_sum(a.me, b.me), direct_sum(a.mfix, b.mfix), block_diag(a.res, b.res),
                       block_diag(a.tr, b.tr), block_diag(a.w, b.w));
}

MackeyFunctor direct_sum(const std::vector<MackeyFunctor>& parts, const BaseRing& base) {
  MackeyFunctor out = zero_functor(base);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

MackeyHom direct_sum(const MackeyHom& f, const MackeyHom& g) {
  return MackeyHom(direct_sum(f.source, g.source), direct_sum(f.target, g.target), block_diag(f.fe, g.fe),
                   block_diag(f.ffix, g.ffix));
}

// ---- checks -----------------------------------------------------------------

ValidationReport validate(const MackeyFunctor& m) {
  ValidationReport out;
  if (!is_well_defined(m.res_hom()) || !is_well_defined(m.tr_hom()) || !is_well_defined(m.w_hom())) return out;
  const Matrix ide = Matrix::identity(m.me.gens());
  out.mackey_axioms = m.me.is_zero_vectors(m.w * m.w - ide) && m.me.is_zero_vectors(m.w * m.res - m.res) &&
                      m.mfix.is_zero_vectors(m.tr * m.w - m.tr) && m.me.is_zero_vectors(m.res * m.tr - ide - m.w);
  out.green_module =
      out.mackey_axioms && m.mfix.is_zero_vectors(m.tr * m.res - Matrix::scalar(m.mfix.gens(), 2));
  return out;
}

bool is_zero_functor(const MackeyFunctor& m) { return is_zero_module(m.me) && is_zero_module(m.mfix); }

bool is_finite(const MackeyFunctor& m) { return is_finite(m.me) && is_finite(m.mfix); }

std::optional<Int> total_order(const MackeyFunctor& m) {
  auto a = order(m.me);
  auto b = order(m.mfix);
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

SimplifiedMackey simplify(const MackeyFunctor& m) {
  Simplified se = simplify(m.me);
  Simplified sf = simplify(m.mfix);
  SimplifiedMackey out;
  out.functor = MackeyFunctor(se.module, sf.module, se.to * m.res * sf.from, sf.to * m.tr * se.from,
                              se.to * m.w * se.from);
  out.to_e = std::move(se.to);
  out.from_e = std::move(se.from);
  out.to_fix = std::move(sf.to);
  out.from_fix = std::move(sf.from);
  return out;
}

std::string InvariantTuple::str() const {
  static const char* names[] = {"e",        "fix",      "ker res",  "coker res", "ker tr",
                                "coker tr", "ker w-1",  "coker w-1", "ker w+1", "coker w+1"};
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "; ";
    os << (i < 10 ? names[i] : "?") << " (";
    for (std::size_t j = 0; j < parts[i].size(); ++j) os << (j ? "," : "") << parts[i][j].get_str();
    os << ')';
  }
  return os.str();
}

InvariantTuple invariant_tuple(const MackeyFunctor& mm) {
  MackeyFunctor m = simplify(mm).functor;
  InvariantTuple t;
  t.parts.push_back(invariant_factors(m.me));
  t.parts.push_back(invariant_factors(m.mfix));
  const Matrix ide = Matrix::identity(m.me.gens());
  const ModuleHom maps[] = {m.res_hom(), m.tr_hom(), ModuleHom(m.me, m.me, m.w - ide),
                            ModuleHom(m.me, m.me, m.w + ide)};
  for (const auto& h : maps) {
    t.parts.push_back(invariant_factors(subquotient(h, Subquotient::Kernel).module));
    t.parts.push_back(invariant_factors(subquotient(h, Subquotient::Cokernel).module));
  }
  return t;
}

bool same_invariants(const MackeyFunctor& a, const MackeyFunctor& b) {
  return a.base() == b.base() && invariant_tuple(a) == invariant_tuple(b);
}

bool structurally_equal(const MackeyFunctor& a, const MackeyFunctor& b) {
  auto mod_eq = [](const FgModule& x, const FgModule& y) {
    return x.base() == y.base() && x.gens() == y.gens() && x.rels() == y.rels();
  };
  return mod_eq(a.me, b.me) && mod_eq(a.mfix, b.mfix) && a.res == b.res && a.tr == b.tr && a.w == b.w;
}

// ---- Hom groups and isomorphism search -------------------------------------

namespace {

// Accumulates linear constraints "row block lies in the image of the target
// module relations" over the unknown entries of (fe, ffix).
class ConstraintBuilder {
 public:
  explicit ConstraintBuilder(std::size_t nvars) : nvars_(nvars) {}

  // Starts a block of rows that must be zero in module t; returns the offset.
  std::size_t block(const FgModule& t) {
    std::size_t off = rows_.size();
    for (std::size_t i = 0; i < t.gens(); ++i) rows_.emplace_back();
    blocks_.push_back({off, t.lifted_rels()});
    return off;
  }
  void add(std::size_t row, std::size_t var, const Int& coeff) {
    if (sgn(coeff) != 0) rows_[row].push_back({var, coeff});
  }

  // Lattice of variable vectors satisfying every block, as basis columns.
  Matrix solutions() const {
    std::size_t relcols = 0;
    for (const auto& b : blocks_) relcols += b.rels.cols();
    Matrix big(rows_.size(), nvars_ + relcols);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [v, c] : rows_[r]) big(r, v) += c;
    std::size_t col = nvars_;
    for (const auto& b : blocks_) {
      big.set_block(b.offset, col, b.rels);
      col += b.rels.cols();
    }
    if (rows_.empty()) return Matrix::identity(nvars_);
    Matrix k = integer_kernel(big);
    return column_span_basis(k.block(0, 0, nvars_, k.cols()));
  }

 private:
  struct Block {
    std::size_t offset;
    Matrix rels;
  };
  std::size_t nvars_;
  std::vector<std::vector<std::pair<std::size_t, Int>>> rows_;
  std::vector<Block> blocks_;
};

}  // namespace

HomGroup hom_group(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (a.base() != b.base()) fail(ErrorKind::BaseMismatch, "Hom between different bases");
  const std::size_t Ae = a.me.gens(), Af = a.mfix.gens(), Be = b.me.gens(), Bf = b.mfix.gens();
  const std::size_t ne = Be * Ae, nv = ne + Bf * Af;
  auto fe = [&](std::size_t i, std::size_t j) { return i * Ae + j; };
  auto ff = [&](std::size_t i, std::size_t j) { return ne + i * Af + j; };

  ConstraintBuilder cb(nv);
  const Matrix ra = a.me.lifted_rels(), rf = a.mfix.lifted_rels();
  for (std::size_t c = 0; c < ra.cols(); ++c) {
    std::size_t off = cb.block(b.me);
    for (std::size_t i = 0; i < Be; ++i)
      for (std::size_t j = 0; j < Ae; ++j) cb.add(off + i, fe(i, j), ra(j, c));
  }
  for (std::size_t c = 0; c < rf.cols(); ++c) {
    std::size_t off = cb.block(b.mfix);
    for (std::size_t i = 0; i < Bf; ++i)
      for (std::size_t j = 0; j < Af; ++j) cb.add(off + i, ff(i, j), rf(j, c));
  }
  // fe res_a = res_b ffix
  for (std::size_t c = 0; c < Af; ++c) {
    std::size_t off = cb.block(b.me);
    for (std::size_t i = 0; i < Be; ++i) {
      for (std::size_t j = 0; j < Ae; ++j) cb.add(off + i, fe(i, j), a.res(j, c));
      for (std::size_t k = 0; k < Bf; ++k) cb.add(off + i, ff(k, c), -b.res(i, k));
    }
  }
  // ffix tr_a = tr_b fe
  for (std::size_t c = 0; c < Ae; ++c) {
    std::size_t off = cb.block(b.mfix);
    for (std::size_t i = 0; i < Bf; ++i) {
      for (std::size_t j = 0; j < Af; ++j) cb.add(off + i, ff(i, j), a.tr(j, c));
      for (std::size_t k = 0; k < Be; ++k) cb.add(off + i, fe(k, c), -b.tr(i, k));
    }
  }
  // fe w_a = w_b fe
  for (std::size_t c = 0; c < Ae; ++c) {
    std::size_t off = cb.block(b.me);
    for (std::size_t i = 0; i < Be; ++i) {
      for (std::size_t j = 0; j < Ae; ++j) cb.add(off + i, fe(i, j), a.w(j, c));
      for (std::size_t k = 0; k < Be; ++k) cb.add(off + i, fe(k, c), -b.w(i, k));
    }
  }
  Matrix valid = cb.solutions();

  // Maps that vanish: every column of fe (resp. ffix) is a relation of b.
  const Matrix rbe = b.me.lifted_rels(), rbf = b.mfix.lifted_rels();
  Matrix zero(nv, Ae * rbe.cols() + Af * rbf.cols());
  std::size_t col = 0;
  for (std::size_t j = 0; j < Ae; ++j)
    for (std::size_t r = 0; r < rbe.cols(); ++r, ++col)
      for (std::size_t i = 0; i < Be; ++i) zero(fe(i, j), col) = rbe(i, r);
  for (std::size_t j = 0; j < Af; ++j)
    for (std::size_t r = 0; r < rbf.cols(); ++r, ++col)
      for (std::size_t i = 0; i < Bf; ++i) zero(ff(i, j), col) = rbf(i, r);

  auto rels = LinearSolver(valid).solve(zero);
  if (!rels) fail(ErrorKind::Internal, "zero maps fall outside the Hom lattice");
  Simplified s = simplify(FgModule(a.base(), valid.cols(), *rels));

  HomGroup out;
  out.group = s.module;
  Matrix gens = valid * s.from;
  for (std::size_t t = 0; t < gens.cols(); ++t) {
    Matrix e(Be, Ae), f(Bf, Af);
    for (std::size_t i = 0; i < Be; ++i)
      for (std::size_t j = 0; j < Ae; ++j) e(i, j) = gens(fe(i, j), t);
    for (std::size_t i = 0; i < Bf; ++i)
      for (std::size_t j = 0; j < Af; ++j) f(i, j) = gens(ff(i, j), t);
    out.fe_basis.push_back(std::move(e));
    out.ffix_basis.push_back(std::move(f));
  }
  return out;
}

bool is_isomorphism(const MackeyHom& f) {
  if (!is_equivariant(f)) return false;
  if (!isomorphic(f.source.me, f.target.me) || !isomorphic(f.source.mfix, f.target.mfix)) return false;
  // A surjection between isomorphic finitely generated modules is bijective.
  auto onto = [](const FgModule& s, const FgModule& t, const Matrix& m) {
    return is_zero_module(subquotient(ModuleHom(s, t, m), Subquotient::Cokernel).module);
  };
  return onto(f.source.me, f.target.me, f.fe) && onto(f.source.mfix, f.target.mfix, f.ffix);
}

std::optional<MackeyHom> find_isomorphism(const MackeyFunctor& a, const MackeyFunctor& b, std::size_t budget,
                                          std::uint64_t seed) {
  if (!same_invariants(a, b)) return std::nullopt;
  SimplifiedMackey sa = simplify(a), sb = simplify(b);
  const MackeyFunctor& A = sa.functor;
  const MackeyFunctor& B = sb.functor;
  HomGroup h = hom_group(A, B);
  const auto& mods = *h.group.row_moduli();
  const std::size_t n = h.group.gens();

  auto candidate = [&](const std::vector<Int>& coeff) -> std::optional<MackeyHom> {
    Matrix e(B.me.gens(), A.me.gens()), f(B.mfix.gens(), A.mfix.gens());
    for (std::size_t t = 0; t < n; ++t) {
      if (sgn(coeff[t]) == 0) continue;
      e = e + coeff[t] * h.fe_basis[t];
      f = f + coeff[t] * h.ffix_basis[t];
    }
    auto onto = [](const FgModule& s, const FgModule& t, const Matrix& m) {
      return is_zero_module(subquotient(ModuleHom(s, t, m), Subquotient::Cokernel).module);
    };
    if (!onto(A.me, B.me, e) || !onto(A.mfix, B.mfix, f)) return std::nullopt;
    return MackeyHom(a, b, sb.from_e * e * sa.to_e, sb.from_fix * f * sa.to_fix);
  };

  // Group size, capped; free summands count as "large".
  Int size = 1;
  bool infinite = false;
  for (const Int& d : mods) {
    if (sgn(d) == 0) infinite = true;
    else size *= d;
  }
  std::vector<Int> coeff(n, 0);
  if (!infinite && size <= Int(static_cast<unsigned long>(budget))) {
    for (;;) {
      if (auto iso = candidate(coeff)) return iso;
      std::size_t t = 0;
      for (; t < n; ++t) {
        coeff[t] += 1;
        if (coeff[t] < mods[t]) break;
        coeff[t] = 0;
      }
      if (t == n) break;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t it = 0; it < budget; ++it) {
    for (std::size_t t = 0; t < n; ++t) {
      if (sgn(mods[t]) == 0) {
        coeff[t] = static_cast<long>(rng() % 5) - 2;
      } else {
        Int r;
        mpz_class bound = mods[t];
        // 64 random bits reduced mod d_t is uniform enough for a witness search.
        r = static_cast<unsigned long>(rng());
        coeff[t] = mod_floor(r, bound);
      }
    }
    if (auto iso = candidate(coeff)) return iso;
  }
  return std::nullopt;
}

// ---- operations -------------------------------------------------------------

MackeyFunctor p0(const MackeyFunctor& m) {
  SubquotientResult im = subquotient(m.res_hom(), Subquotient::Image);
  return MackeyFunctor(m.me, im.module, im.map, im.projection * m.tr, m.w);
}

PointwiseResult pointwise(const MackeyHom& f, PointwiseKind which) {
  if (!is_equivariant(f)) fail(ErrorKind::NotEquivariant, "map does not commute with res, tr, w");
  const MackeyFunctor& s = f.source;
  const MackeyFunctor& t = f.target;
  ModuleHom he(s.me, t.me, f.fe), hf(s.mfix, t.mfix, f.ffix);
  PointwiseResult out;
  switch (which) {
    case PointwiseKind::Kernel:
    case PointwiseKind::Image: {
      const bool ker = which == PointwiseKind::Kernel;
      const Subquotient sq = ker ? Subquotient::Kernel : Subquotient::Image;
      const MackeyFunctor& amb = ker ? s : t;
      SubquotientResult e = subquotient(he, sq), x = subquotient(hf, sq);
      Lifter le(e.map, amb.me), lf(x.map, amb.mfix);
      out.functor = MackeyFunctor(e.module, x.module, le.lift(amb.res * x.map), lf.lift(amb.tr * e.map),
                                  le.lift(amb.w * e.map));
      out.map = MackeyHom(out.functor, amb, e.map, x.map);
      break;
    }
    case PointwiseKind::Cokernel: {
      SubquotientResult e = subquotient(he, Subquotient::Cokernel), x = subquotient(hf, Subquotient::Cokernel);
      out.functor = MackeyFunctor(e.module, x.module, e.map * t.res * x.section, x.map * t.tr * e.section,
                                  e.map * t.w * e.section);
      out.map = MackeyHom(t, out.functor, e.map, x.map);
      break;
    }
  }
  return out;
}

MackeyFunctor pointwise_subquotient(const MackeyHom& f, PointwiseKind which) { return pointwise(f, which).functor; }

SkeletonReport finite_mackey_skeleton(const MackeyFunctor& m) {
  if (!is_finite(m)) fail(ErrorKind::NotFinite, "both levels must be finite");
  if (!validate(m).green_module) fail(ErrorKind::NotGreenModule, "tr o res != 2");
  SkeletonReport out;
  out.kernel_w_eq = MackeyHom(constant(m.mfix), m, m.res, Matrix::identity(m.mfix.gens()));
  out.kernel = pointwise_subquotient(out.kernel_w_eq, PointwiseKind::Kernel);
  out.cokernel = pointwise_subquotient(out.kernel_w_eq, PointwiseKind::Cokernel);
  out.layers = {out.kernel, out.cokernel};
  out.layers_fix_zero = true;
  out.layers_w_minus_one = true;
  for (const auto& l : out.layers) {
    out.layers_fix_zero = out.layers_fix_zero && is_zero_module(l.mfix);
    out.layers_w_minus_one =
        out.layers_w_minus_one && l.me.is_zero_vectors(l.w + Matrix::identity(l.me.gens()));
  }
  return out;
}

std::string summary(const MackeyFunctor& m) {
  return "<e: " + describe(m.me) + ", fix: " + describe(m.mfix) + ">";
}

std::string lewis_diagram(const MackeyFunctor& m) {
  const std::string fix = describe(m.mfix), e = describe(m.me);
  const std::size_t width = std::max(fix.size(), e.size());
  std::ostringstream os;
  os << "  C2/C2 | " << std::left << std::setw(static_cast<int>(width)) << fix << " | gens " << m.mfix.gens()
     << '\n';
  os << "        | res " << m.res.str() << "  tr " << m.tr.str() << '\n';
  os << "  C2/e  | " << std::left << std::setw(static_cast<int>(width)) << e << " | gens " << m.me.gens()
     << "  w " << m.w.str() << '\n';
  return os.str();
}

}  // namespace c2hom
