#include "c2hom/error.hpp"
#include "c2hom/homalg.hpp"

namespace c2hom {
namespace {

struct Cover {
  std::vector<Orbit> orbits;
  Matrix e;    // W.me x rank
  Matrix fix;  // W.mfix x orbits
};

// A permutation functor mapping onto w at both levels: one Constant orbit per
// fixed-level generator, then Induced orbits for whatever the restrictions
// miss at the underlying level. Needs tr res = 2 on w.
Cover cover(const MackeyFunctor& w) {
  const std::size_t ge = w.me.gens(), gf = w.mfix.gens();
  Cover c;
  c.e = Matrix(ge, 0);
  c.fix = Matrix(gf, 0);
  for (std::size_t i = 0; i < gf; ++i) {
    c.orbits.push_back(Orbit::Fixed);
    c.e = hstack(c.e, w.res.column(i));
    Matrix v(gf, 1);
    v(i, 0) = 1;
    c.fix = hstack(c.fix, v);
  }
  for (std::size_t j = 0; j < ge; ++j) {
    Matrix u(ge, 1);
    u(j, 0) = 1;
    if (quotient_raw(w.me, c.e).is_zero_vectors(u)) continue;
    c.orbits.push_back(Orbit::Free);
    c.e = hstack(hstack(c.e, u), w.w * u);
    c.fix = hstack(c.fix, w.tr * u);
  }
  return c;
}

}  // namespace

FreeResolution free_resolution(const MackeyComplex& a, int length) {
  if (length < 1) fail(ErrorKind::LengthTooShort, "resolution length must be at least 1");
  for (const auto& t : a.terms)
    if (!validate(t).green_module) fail(ErrorKind::NotGreenModule, "term " + summary(t) + " fails tr o res = 2");
  const BaseRing& base = a.base;

  FreeResolution r;
  r.model.base = base;
  r.model.lo = a.empty() ? 0 : a.lo;
  std::vector<MackeyHom> phis;
  if (a.empty()) {
    r.complex = from_perm(r.model);
    r.augmentation = ChainMap{r.complex, a, {}};
    return r;
  }

  const int top = a.lo + length;
  bool complete = false;
  std::vector<Orbit> prev_orbits;
  PointwiseResult cycles{zero_functor(base), MackeyHom::zero(zero_functor(base), zero_functor(base))};
  for (int n = a.lo; n <= top; ++n) {
    const MackeyFunctor an = a.term(n), an1 = a.term(n - 1);
    const MackeyFunctor prev = perm_functor(base, prev_orbits);
    const MackeyHom phi_prev = phis.empty() ? MackeyHom::zero(prev, an1) : phis.back();

    // Pairs (x, z) with x in a_n, z a cycle of P_{n-1}, and d x = phi(z).
    const MackeyFunctor s = direct_sum(an, cycles.functor);
    const MackeyHom back = compose(phi_prev, cycles.map);
    const MackeyHom da = a.diff(n);
    MackeyHom h(s, an1, hstack(da.fe, -back.fe), hstack(da.ffix, -back.ffix));
    PointwiseResult w = pointwise(h, PointwiseKind::Kernel);

    if (n >= a.hi() && is_zero_functor(w.functor)) {
      complete = true;
      break;
    }
    Cover cv = cover(w.functor);
    const Matrix se = w.map.fe * cv.e, sf = w.map.ffix * cv.fix;
    const std::size_t ae = an.me.gens(), af = an.mfix.gens();
    const std::size_t ze = cycles.functor.me.gens();
    const MackeyFunctor pn = perm_functor(base, cv.orbits);
    phis.emplace_back(pn, an, se.block(0, 0, ae, se.cols()), sf.block(0, 0, af, sf.cols()));
    if (n > a.lo) {
      Matrix d = cycles.map.fe * se.block(ae, 0, ze, se.cols());
      d.reduce_mod(base.modulus());
      r.model.diffs.push_back(d);
    }
    r.model.orbits.push_back(cv.orbits);

    MackeyHom dn = n > a.lo ? perm_map(base, cv.orbits, prev_orbits, r.model.diffs.back())
                            : MackeyHom::zero(pn, zero_functor(base));
    cycles = pointwise(dn, PointwiseKind::Kernel);
    prev_orbits = cv.orbits;
  }

  r.exact_through = complete ? a.hom_hi : std::min(top - 1, a.hom_hi);
  r.complex = from_perm(r.model);
  r.complex.hom_hi = r.exact_through;
  r.augmentation = ChainMap{r.complex, a, phis};
  if (!is_chain_map(r.augmentation)) fail(ErrorKind::Internal, "resolution augmentation is not a chain map");
  return r;
}

MackeyComplex resolve_and_derived_tensor(const MackeyComplex& a, const MackeyComplex& b, const MackeyFunctor& over,
                                         int length) {
  if (a.base != b.base || a.base != over.base()) fail(ErrorKind::BaseMismatch, "derived tensor over mixed bases");
  const MackeyFunctor unit = constant(a.base);
  if (!same_invariants(over, unit)) fail(ErrorKind::NotAGreenBase, "derived tensor needs the constant functor as base");
  FreeResolution r = free_resolution(a, length);
  MackeyComplex out = tensor_total(r.complex, b, unit);
  if (!out.empty() && out.hom_hi < out.lo)
    fail(ErrorKind::WindowTooSmall, "resolution of length " + std::to_string(length) + " guarantees no degree");
  return out;
}

}  // namespace c2hom
