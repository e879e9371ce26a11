#include "c2hom/box.hpp"

#include "c2hom/error.hpp"

namespace c2hom {

BoxProduct box_product(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (a.base() != b.base()) fail(ErrorKind::BaseMismatch, a.base().name() + " vs " + b.base().name());
  const BaseRing& base = a.base();
  const std::size_t ae = a.me.gens(), af = a.mfix.gens(), be = b.me.gens(), bf = b.mfix.gens();
  const std::size_t ge = ae * be, off = af * bf, nf = off + ge;

  FgModule e = tensor(a.me, b.me);
  Matrix we = kron(a.w, b.w);
  const Matrix ide = Matrix::identity(ge);

  // Relators of the raw fixed level, column by column.
  FgModule ff = tensor(a.mfix, b.mfix);
  const std::size_t nframe = ff.rels().cols() + e.rels().cols() + ge + af * be + ae * bf;
  Matrix rels(nf, nframe);
  std::size_t col = 0;
  rels.set_block(0, col, ff.rels());
  col += ff.rels().cols();
  rels.set_block(off, col, e.rels());
  col += e.rels().cols();
  rels.set_block(off, col, we - ide);  // orbit classes: [w y] = [y]
  col += ge;
  // x (x) tr z = [res x (x) z]
  for (std::size_t i = 0; i < af; ++i)
    for (std::size_t l = 0; l < be; ++l, ++col) {
      for (std::size_t j = 0; j < bf; ++j) rels(i * bf + j, col) += b.tr(j, l);
      for (std::size_t k = 0; k < ae; ++k) rels(off + k * be + l, col) -= a.res(k, i);
    }
  // tr y (x) z = [y (x) res z]
  for (std::size_t k = 0; k < ae; ++k)
    for (std::size_t j = 0; j < bf; ++j, ++col) {
      for (std::size_t i = 0; i < af; ++i) rels(i * bf + j, col) += a.tr(i, k);
      for (std::size_t l = 0; l < be; ++l) rels(off + k * be + l, col) -= b.res(l, j);
    }
  FgModule fix(base, nf, rels);

  Matrix res = hstack(kron(a.res, b.res), ide + we);
  Matrix tr = vstack(Matrix(off, ge), ide);

  Simplified se = simplify(e), sf = simplify(fix);
  BoxProduct out;
  out.functor = MackeyFunctor(se.module, sf.module, se.to * res * sf.from, sf.to * tr * se.from, se.to * we * se.from);
  out.e_to = std::move(se.to);
  out.e_from = std::move(se.from);
  out.fix_to = std::move(sf.to);
  out.fix_from = std::move(sf.from);
  return out;
}

MackeyFunctor box(const MackeyFunctor& a, const MackeyFunctor& b) { return box_product(a, b).functor; }

MackeyHom box_map(const MackeyHom& f, const MackeyHom& g, const BoxProduct& src, const BoxProduct& tgt) {
  Matrix raw_e = kron(f.fe, g.fe);
  Matrix raw_fix = block_diag(kron(f.ffix, g.ffix), raw_e);
  return MackeyHom(src.functor, tgt.functor, tgt.e_to * raw_e * src.e_from, tgt.fix_to * raw_fix * src.fix_from);
}

MackeyQuotient mackey_quotient(const MackeyFunctor& m, const Matrix& e_vecs, const Matrix& fix_vecs) {
  // Smallest subfunctor containing the vectors: close under w, res, tr.
  Matrix e = hstack(hstack(e_vecs, m.w * e_vecs), m.res * fix_vecs);
  Matrix f = hstack(fix_vecs, m.tr * e);
  Simplified se = simplify(quotient_raw(m.me, e));
  Simplified sf = simplify(quotient_raw(m.mfix, f));
  MackeyQuotient out;
  out.functor = MackeyFunctor(se.module, sf.module, se.to * m.res * sf.from, sf.to * m.tr * se.from,
                              se.to * m.w * se.from);
  out.e_to = std::move(se.to);
  out.e_from = std::move(se.from);
  out.fix_to = std::move(sf.to);
  out.fix_from = std::move(sf.from);
  return out;
}

RelativeBox box_over_green_full(const MackeyFunctor& a, const MackeyFunctor& b, const MackeyFunctor& r) {
  if (a.base() != b.base() || a.base() != r.base()) fail(ErrorKind::BaseMismatch, "relative box over mixed bases");
  if (!validate(r).green_module) fail(ErrorKind::NotAGreenBase, "base functor fails tr o res = 2");
  if (r.mfix.gens() == 0) fail(ErrorKind::NotAGreenBase, "base functor has no unit");
  const BaseRing& base = r.base();

  // Unit map from the Burnside functor, with fixed-level generator 0 as 1.
  Matrix u(r.mfix.gens(), 1);
  u(0, 0) = 1;
  MackeyHom unit(burnside(base), r, r.res * u, hstack(u, r.tr * r.res * u));
  if (!is_equivariant(unit)) fail(ErrorKind::NotAGreenBase, "fixed-level generator 0 is not a unit");
  MackeyFunctor coker = pointwise_subquotient(unit, PointwiseKind::Cokernel);
  if (!is_zero_functor(coker)) fail(ErrorKind::NotAGreenBase, "base is not a quotient of the Burnside functor");
  PointwiseResult j = pointwise(unit, PointwiseKind::Kernel);

  RelativeBox out;
  out.raw = box_product(a, b);
  const MackeyFunctor& x = out.raw.functor;
  const std::size_t ge = x.me.gens(), gf = x.mfix.gens();

  // J acts through the Burnside action: alpha + beta t sends x to
  // alpha x + beta tr(res x); the e-level acts by scalars.
  Matrix sfix(gf, 0), se(ge, 0);
  const Matrix trres = x.tr * x.res;
  for (std::size_t c = 0; c < j.map.ffix.cols(); ++c) {
    Matrix act = j.map.ffix(0, c) * Matrix::identity(gf) + j.map.ffix(1, c) * trres;
    sfix = hstack(sfix, act);
  }
  for (std::size_t c = 0; c < j.map.fe.cols(); ++c) se = hstack(se, j.map.fe(0, c) * Matrix::identity(ge));

  MackeyQuotient q = mackey_quotient(x, se, sfix);
  out.functor = std::move(q.functor);
  out.e_to = std::move(q.e_to);
  out.e_from = std::move(q.e_from);
  out.fix_to = std::move(q.fix_to);
  out.fix_from = std::move(q.fix_from);
  return out;
}

MackeyFunctor box_over_green(const MackeyFunctor& a, const MackeyFunctor& b, const MackeyFunctor& r) {
  return box_over_green_full(a, b, r).functor;
}

MackeyHom box_over_green_map(const MackeyHom& f, const MackeyHom& g, const RelativeBox& src, const RelativeBox& tgt) {
  MackeyHom inner = box_map(f, g, src.raw, tgt.raw);
  return MackeyHom(src.functor, tgt.functor, tgt.e_to * inner.fe * src.e_from, tgt.fix_to * inner.ffix * src.fix_from);
}

}  // namespace c2hom
