#include "c2hom/homalg.hpp"

#include <algorithm>

#include "c2hom/error.hpp"

namespace c2hom {
namespace {

int add_trust(int h, int delta) { return h >= kUnbounded ? kUnbounded : h + delta; }

// Unchecked assembly: terms are trusted, maps are rebuilt against them.
MackeyComplex assemble(const BaseRing& base, int lo, std::vector<MackeyFunctor> terms, std::vector<Matrix> fe,
                       std::vector<Matrix> ffix) {
  MackeyComplex c;
  c.base = base;
  c.lo = lo;
  c.terms = std::move(terms);
  for (std::size_t i = 0; i + 1 < c.terms.size(); ++i)
    c.diffs.emplace_back(c.terms[i + 1], c.terms[i], std::move(fe[i]), std::move(ffix[i]));
  return c;
}

// ker(d_n) / im(d_{n+1}) for one level.
FgModule level_homology(const FgModule& cn, const FgModule& cprev, const FgModule& cnext, const Matrix& dn,
                        const Matrix& dn1) {
  SubquotientResult k = subquotient(ModuleHom(cn, cprev, dn), Subquotient::Kernel);
  Matrix lifted = Lifter(k.map, cn).lift(dn1);
  return subquotient(ModuleHom(cnext, k.module, lifted), Subquotient::Cokernel).module;
}

}  // namespace

MackeyFunctor MackeyComplex::term(int n) const {
  if (n < lo || n > hi()) return zero_functor(base);
  return terms[static_cast<std::size_t>(n - lo)];
}

MackeyHom MackeyComplex::diff(int n) const {
  if (n - 1 < lo || n > hi()) return MackeyHom::zero(term(n), term(n - 1));
  return diffs[static_cast<std::size_t>(n - lo - 1)];
}

MackeyComplex make_complex(const BaseRing& base, int lo, std::vector<MackeyFunctor> terms,
                           std::vector<MackeyHom> diffs) {
  const std::size_t want = terms.empty() ? 0 : terms.size() - 1;
  if (diffs.size() != want) fail(ErrorKind::IllFormedHom, "expected one differential per adjacent pair of terms");
  for (const auto& t : terms)
    if (t.base() != base) fail(ErrorKind::BaseMismatch, "term over " + t.base().name());
  std::vector<Matrix> fe, ffix;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const MackeyHom& d = diffs[i];
    if (d.fe.rows() != terms[i].me.gens() || d.fe.cols() != terms[i + 1].me.gens() ||
        d.ffix.rows() != terms[i].mfix.gens() || d.ffix.cols() != terms[i + 1].mfix.gens())
      fail(ErrorKind::IllFormedHom, "differential " + std::to_string(lo + static_cast<int>(i) + 1) + " has the wrong shape");
    fe.push_back(d.fe);
    ffix.push_back(d.ffix);
  }
  MackeyComplex c = assemble(base, lo, std::move(terms), std::move(fe), std::move(ffix));
  for (const auto& d : c.diffs)
    if (!is_equivariant(d)) fail(ErrorKind::NotEquivariant, "differential does not commute with res, tr, w");
  if (!dd_zero(c)) fail(ErrorKind::IllFormedHom, "d o d != 0");
  return c;
}

MackeyComplex concentrated(const MackeyFunctor& m, int degree) {
  MackeyComplex c;
  c.base = m.base();
  c.lo = degree;
  c.terms = {m};
  return c;
}

MackeyComplex zero_complex(const BaseRing& base) {
  MackeyComplex c;
  c.base = base;
  return c;
}

MackeyComplex from_perm(const PermComplex& p) {
  std::vector<MackeyFunctor> terms;
  std::vector<Matrix> fe, ffix;
  for (int n = p.lo; n <= p.hi(); ++n) terms.push_back(perm_functor(p.base, p.at(n)));
  for (int n = p.lo + 1; n <= p.hi(); ++n) {
    fe.push_back(p.diff(n));
    ffix.push_back(perm_fix_matrix(p.at(n), p.at(n - 1), p.diff(n)));
  }
  MackeyComplex c = assemble(p.base, p.empty() ? 0 : p.lo, std::move(terms), std::move(fe), std::move(ffix));
  c.free_model = std::make_shared<const PermComplex>(p);
  return c;
}

bool dd_zero(const MackeyComplex& c) {
  for (int n = c.lo + 2; n <= c.hi(); ++n)
    if (!is_zero_hom(compose(c.diff(n - 1), c.diff(n)))) return false;
  return true;
}

MackeyFunctor homology_raw(const MackeyComplex& c, int m) {
  if (m < c.lo || m > c.hi()) return zero_functor(c.base);
  const MackeyFunctor cm = c.term(m);
  PointwiseResult k = pointwise(c.diff(m), PointwiseKind::Kernel);
  const MackeyHom d1 = c.diff(m + 1);
  Matrix fe = Lifter(k.map.fe, cm.me).lift(d1.fe);
  Matrix ffix = Lifter(k.map.ffix, cm.mfix).lift(d1.ffix);
  return pointwise_subquotient(MackeyHom(d1.source, k.functor, fe, ffix), PointwiseKind::Cokernel);
}

MackeyFunctor homology(const MackeyComplex& c, int m, int nsigma) {
  MackeyComplex s = nsigma == 0 ? c : sigma_shift(c, -nsigma);
  if (m > s.hom_hi)
    fail(ErrorKind::WindowTooSmall, "degree " + std::to_string(m) + " after a " + std::to_string(-nsigma) +
                                        "-fold sigma shift is above the trusted degree " + std::to_string(s.hom_hi));
  return homology_raw(s, m);
}

FgModule e_homology(const MackeyComplex& c, int n) {
  if (n < c.lo || n > c.hi()) return FgModule::free(c.base, 0);
  return level_homology(c.term(n).me, c.term(n - 1).me, c.term(n + 1).me, c.diff(n).fe, c.diff(n + 1).fe);
}

FgModule fix_homology(const MackeyComplex& c, int n) {
  if (n < c.lo || n > c.hi()) return FgModule::free(c.base, 0);
  return level_homology(c.term(n).mfix, c.term(n - 1).mfix, c.term(n + 1).mfix, c.diff(n).ffix, c.diff(n + 1).ffix);
}

bool acyclic_in(const MackeyComplex& c, int a, int b) {
  for (int n = std::max(a, c.lo); n <= std::min(b, c.hi()); ++n)
    if (!is_zero_functor(homology_raw(c, n))) return false;
  return true;
}

MackeyComplex shift(const MackeyComplex& c, int j) {
  MackeyComplex out = c;
  if (out.empty()) return out;
  out.lo += j;
  if (j % 2 != 0)
    for (auto& d : out.diffs) d = Int(-1) * d;
  out.hom_hi = add_trust(c.hom_hi, j);
  out.slice_hi.reset();
  if (c.free_model) out.free_model = std::make_shared<const PermComplex>(perm_shift(*c.free_model, j));
  return out;
}

MackeyComplex sigma_shift(const MackeyComplex& c, int k, int j) {
  if (k == 0) return shift(c, j);
  MackeyComplex out;
  if (c.free_model) {
    out = from_perm(perm_shift(perm_sigma_shift(*c.free_model, k), j));
  } else {
    MackeyComplex kk = from_perm(perm_sigma_shift(perm_unit(c.base), k));
    out = shift(tensor_total(c, kk, constant(c.base)), j);
  }
  out.weight = c.weight;
  out.hom_hi = add_trust(c.hom_hi, std::min(k, 0) + j);
  out.slice_hi.reset();
  if (!dd_zero(out)) fail(ErrorKind::Internal, "sigma shift broke d o d = 0");
  return out;
}

MackeyComplex direct_sum(const MackeyComplex& a, const MackeyComplex& b) {
  if (a.base != b.base) fail(ErrorKind::BaseMismatch, "direct sum of complexes over different bases");
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int lo = std::min(a.lo, b.lo), hi = std::max(a.hi(), b.hi());
  std::vector<MackeyFunctor> terms;
  std::vector<Matrix> fe, ffix;
  for (int n = lo; n <= hi; ++n) terms.push_back(direct_sum(a.term(n), b.term(n)));
  for (int n = lo + 1; n <= hi; ++n) {
    fe.push_back(block_diag(a.diff(n).fe, b.diff(n).fe));
    ffix.push_back(block_diag(a.diff(n).ffix, b.diff(n).ffix));
  }
  MackeyComplex c = assemble(a.base, lo, std::move(terms), std::move(fe), std::move(ffix));
  c.hom_hi = std::min(a.hom_hi, b.hom_hi);
  if (a.slice_hi && b.slice_hi) {
    c.slice_hi = std::min(*a.slice_hi, *b.slice_hi);
  } else if (a.slice_hi && b.hom_hi >= kUnbounded) {
    c.slice_hi = a.slice_hi;
  } else if (b.slice_hi && a.hom_hi >= kUnbounded) {
    c.slice_hi = b.slice_hi;
  }
  if (a.weight == b.weight) c.weight = a.weight;
  if (a.free_model && b.free_model)
    c.free_model = std::make_shared<const PermComplex>(perm_direct_sum(*a.free_model, *b.free_model));
  return c;
}

// ---- chain maps -------------------------------------------------------------

MackeyHom ChainMap::at(int n) const {
  const int i = n - source.lo;
  if (source.empty() || i < 0 || i >= static_cast<int>(comps.size()))
    return MackeyHom::zero(source.term(n), target.term(n));
  return comps[static_cast<std::size_t>(i)];
}

ChainMap identity_map(const MackeyComplex& c) { return scalar_map(c, 1); }

ChainMap scalar_map(const MackeyComplex& c, const Int& s) {
  ChainMap f{c, c, {}};
  for (const auto& t : c.terms) f.comps.push_back(s * MackeyHom::identity(t));
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap h{f.source, g.target, {}};
  for (int n = f.source.lo; n <= f.source.hi(); ++n) h.comps.push_back(compose(g.at(n), f.at(n)));
  return h;
}

bool is_chain_map(const ChainMap& f) {
  const MackeyComplex& x = f.source;
  const MackeyComplex& y = f.target;
  if (x.empty()) return true;
  for (const auto& c : f.comps)
    if (!is_equivariant(c)) return false;
  for (int n = x.lo; n <= x.hi() + 1; ++n) {
    MackeyHom lhs = compose(y.diff(n), f.at(n));
    MackeyHom rhs = compose(f.at(n - 1), x.diff(n));
    if (!is_zero_hom(MackeyHom(lhs.source, lhs.target, lhs.fe - rhs.fe, lhs.ffix - rhs.ffix))) return false;
  }
  return true;
}

MackeyComplex cone(const ChainMap& f) {
  const MackeyComplex& x = f.source;
  const MackeyComplex& y = f.target;
  if (x.base != y.base) fail(ErrorKind::BaseMismatch, "cone of a map between different bases");
  if (x.empty()) return y;
  const int lo = y.empty() ? x.lo + 1 : std::min(y.lo, x.lo + 1);
  const int hi = y.empty() ? x.hi() + 1 : std::max(y.hi(), x.hi() + 1);
  std::vector<MackeyFunctor> terms;
  std::vector<Matrix> fe, ffix;
  for (int n = lo; n <= hi; ++n) terms.push_back(direct_sum(y.term(n), x.term(n - 1)));
  for (int n = lo + 1; n <= hi; ++n) {
    const MackeyHom dy = y.diff(n), dx = x.diff(n - 1), fn = f.at(n - 1);
    auto blocks = [](const Matrix& a, const Matrix& b, const Matrix& d, std::size_t r1, std::size_t r2,
                     std::size_t c1, std::size_t c2) {
      Matrix m(r1 + r2, c1 + c2);
      m.set_block(0, 0, a);
      m.set_block(0, c1, b);
      m.set_block(r1, c1, -d);
      return m;
    };
    const MackeyFunctor yn1 = y.term(n - 1), xn2 = x.term(n - 2), yn = y.term(n), xn1 = x.term(n - 1);
    fe.push_back(blocks(dy.fe, fn.fe, dx.fe, yn1.me.gens(), xn2.me.gens(), yn.me.gens(), xn1.me.gens()));
    ffix.push_back(
        blocks(dy.ffix, fn.ffix, dx.ffix, yn1.mfix.gens(), xn2.mfix.gens(), yn.mfix.gens(), xn1.mfix.gens()));
  }
  // Maps between permutation functors are determined by their e-level part,
  // so the cone of two free models is again one.
  std::shared_ptr<const PermComplex> model;
  if (x.free_model && y.free_model) {
    PermComplex p;
    p.base = x.base;
    p.lo = lo;
    auto orbits_at = [](const std::shared_ptr<const PermComplex>& m, int n) {
      return (m->empty() || n < m->lo || n > m->hi()) ? std::vector<Orbit>{} : m->at(n);
    };
    for (int n = lo; n <= hi; ++n) {
      std::vector<Orbit> o = orbits_at(y.free_model, n);
      const std::vector<Orbit> ox = orbits_at(x.free_model, n - 1);
      o.insert(o.end(), ox.begin(), ox.end());
      if (e_rank(o) != terms[static_cast<std::size_t>(n - lo)].me.gens()) break;
      p.orbits.push_back(std::move(o));
    }
    if (p.orbits.size() == terms.size()) {
      p.diffs = fe;
      model = std::make_shared<const PermComplex>(std::move(p));
    }
  }
  MackeyComplex c = assemble(x.base, lo, std::move(terms), std::move(fe), std::move(ffix));
  c.hom_hi = std::min(x.hom_hi, y.hom_hi);
  c.free_model = std::move(model);
  if (!dd_zero(c)) fail(ErrorKind::IllFormedHom, "cone of a map that is not a chain map");
  return c;
}

// ---- tensor -----------------------------------------------------------------

namespace {

bool is_constant_base(const MackeyFunctor& over) {
  return structurally_equal(over, constant(over.base())) ||
         (over.mfix.gens() == 1 && same_invariants(over, constant(over.base())));
}

}  // namespace

MackeyComplex tensor_total(const MackeyComplex& a, const MackeyComplex& b, const MackeyFunctor& over) {
  if (a.base != b.base || a.base != over.base()) fail(ErrorKind::BaseMismatch, "tensor over mixed bases");
  if (!validate(over).green_module) fail(ErrorKind::NotAGreenBase, "base functor fails tr o res = 2");
  const int trust = std::min(add_trust(a.hom_hi, b.empty() ? 0 : b.lo), add_trust(b.hom_hi, a.empty() ? 0 : a.lo));

  MackeyComplex out;
  if (a.empty() || b.empty()) {
    out = zero_complex(a.base);
  } else if (a.free_model && b.free_model && is_constant_base(over)) {
    out = from_perm(minimize(perm_tensor(*a.free_model, *b.free_model)));
  } else {
    const int lo = a.lo + b.lo, hi = a.hi() + b.hi();
    const std::size_t na = a.terms.size(), nb = b.terms.size();
    std::vector<std::optional<RelativeBox>> rb(na * nb);
    auto get = [&](int p, int q) -> const RelativeBox* {
      if (p < a.lo || p > a.hi() || q < b.lo || q > b.hi()) return nullptr;
      auto& slot = rb[static_cast<std::size_t>(p - a.lo) * nb + static_cast<std::size_t>(q - b.lo)];
      if (!slot) slot = box_over_green_full(a.term(p), b.term(q), over);
      return &*slot;
    };
    // offsets of each (p, q) summand inside degree n, at both levels
    auto layout = [&](int n, std::vector<std::size_t>& oe, std::vector<std::size_t>& of, std::size_t& te,
                      std::size_t& tf) {
      oe.clear();
      of.clear();
      te = tf = 0;
      for (int p = a.lo; p <= a.hi(); ++p) {
        oe.push_back(te);
        of.push_back(tf);
        if (const RelativeBox* r = get(p, n - p)) {
          te += r->functor.me.gens();
          tf += r->functor.mfix.gens();
        }
      }
    };
    std::vector<MackeyFunctor> terms;
    for (int n = lo; n <= hi; ++n) {
      std::vector<MackeyFunctor> parts;
      for (int p = a.lo; p <= a.hi(); ++p)
        if (const RelativeBox* r = get(p, n - p)) parts.push_back(r->functor);
      terms.push_back(direct_sum(parts, a.base));
    }
    std::vector<Matrix> fe, ffix;
    std::vector<std::size_t> soe, sof, toe, tof;
    std::size_t ste, stf, tte, ttf;
    for (int n = lo + 1; n <= hi; ++n) {
      layout(n, soe, sof, ste, stf);
      layout(n - 1, toe, tof, tte, ttf);
      Matrix de(tte, ste), df(ttf, stf);
      for (int p = a.lo; p <= a.hi(); ++p) {
        const int q = n - p;
        const RelativeBox* s = get(p, q);
        if (!s) continue;
        const std::size_t si = static_cast<std::size_t>(p - a.lo);
        if (const RelativeBox* t = get(p - 1, q)) {
          MackeyHom m = box_over_green_map(a.diff(p), MackeyHom::identity(b.term(q)), *s, *t);
          const std::size_t ti = static_cast<std::size_t>(p - 1 - a.lo);
          de.set_block(toe[ti], soe[si], m.fe);
          df.set_block(tof[ti], sof[si], m.ffix);
        }
        if (const RelativeBox* t = get(p, q - 1)) {
          MackeyHom m = box_over_green_map(MackeyHom::identity(a.term(p)), b.diff(q), *s, *t);
          const Int sign = (p % 2 == 0) ? 1 : -1;
          de.set_block(toe[si], soe[si], sign * m.fe);
          df.set_block(tof[si], sof[si], sign * m.ffix);
        }
      }
      fe.push_back(std::move(de));
      ffix.push_back(std::move(df));
    }
    out = assemble(a.base, lo, std::move(terms), std::move(fe), std::move(ffix));
  }
  out.hom_hi = trust;
  if (a.weight && b.weight) out.weight = *a.weight + *b.weight;
  if (!dd_zero(out)) fail(ErrorKind::Internal, "total complex has d o d != 0");
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> recognize_free(const MackeyFunctor& m) {
  const Int freeval = m.base().is_mod() ? m.base().modulus() : Int(0);
  auto free_rank = [&](const FgModule& x) -> std::optional<std::size_t> {
    auto f = invariant_factors(x);
    for (const auto& d : f)
      if (d != freeval) return std::nullopt;
    return f.size();
  };
  auto re = free_rank(m.me), rf = free_rank(m.mfix);
  if (!re || !rf || 2 * *rf < *re || *re < *rf) return std::nullopt;
  const std::size_t a = 2 * *rf - *re, b = *re - *rf;
  std::vector<Orbit> orbs(a, Orbit::Fixed);
  orbs.insert(orbs.end(), b, Orbit::Free);
  if (!same_invariants(m, perm_functor(m.base(), orbs))) return std::nullopt;
  return std::make_pair(a, b);
}

bool is_pseudo_coherent(const MackeyComplex& c) {
  if (c.free_model) return true;
  for (const auto& t : c.terms)
    if (!recognize_free(t)) return false;
  return true;
}

// ---- towers -----------------------------------------------------------------

PkTower mod_pk_tower(const MackeyComplex& c, const Int& p, int kmax) {
  if (kmax < 1) fail(ErrorKind::InvalidParams, "kmax must be at least 1");
  if (p < 2) fail(ErrorKind::InvalidParams, "p must be a prime");
  PkTower t;
  Int pk = 1;
  for (int k = 1; k <= kmax; ++k) {
    pk *= p;
    t.entries.push_back(cone(scalar_map(c, pk)));
  }
  for (int k = 1; k < kmax; ++k) {
    const MackeyComplex& src = t.entries[static_cast<std::size_t>(k)];
    const MackeyComplex& tgt = t.entries[static_cast<std::size_t>(k - 1)];
    ChainMap m{src, tgt, {}};
    for (int n = src.lo; n <= src.hi(); ++n) {
      const MackeyFunctor y = c.term(n), x = c.term(n - 1);
      Matrix e = block_diag(Matrix::identity(y.me.gens()), Matrix::scalar(x.me.gens(), p));
      Matrix f = block_diag(Matrix::identity(y.mfix.gens()), Matrix::scalar(x.mfix.gens(), p));
      m.comps.emplace_back(src.term(n), tgt.term(n), e, f);
    }
    t.maps.push_back(std::move(m));
  }

  // Stabilization: compare homology invariants over the window.
  auto table = [&](const MackeyComplex& e) {
    std::vector<InvariantTuple> rows;
    const int hi = std::min(c.empty() ? 0 : c.hi() + 1, c.hom_hi);
    for (int n = c.empty() ? 0 : c.lo; n <= hi; ++n) rows.push_back(invariant_tuple(homology_raw(e, n)));
    return rows;
  };
  std::vector<std::vector<InvariantTuple>> tabs;
  for (const auto& e : t.entries) tabs.push_back(table(e));
  t.stable_from = kmax;
  while (t.stable_from > 1 && tabs[static_cast<std::size_t>(t.stable_from - 2)] == tabs.back()) --t.stable_from;
  t.stable = kmax == 1 || t.stable_from < kmax;
  return t;
}

TowerReport tower_gr_and_completeness(const FiltrationTower& t, int lo, int hi) {
  if (t.stages.empty()) return TowerReport{{}, true, 0};
  if (t.maps.size() + 1 != t.stages.size()) fail(ErrorKind::NonNestedTower, "need one map per adjacent pair of stages");
  for (std::size_t n = 0; n < t.maps.size(); ++n) {
    const ChainMap& m = t.maps[n];
    const MackeyComplex& s = t.stages[n + 1];
    const MackeyComplex& g = t.stages[n];
    auto same = [](const MackeyComplex& x, const MackeyComplex& y) {
      if (x.empty() != y.empty()) return false;
      if (x.empty()) return true;
      if (x.lo != y.lo || x.terms.size() != y.terms.size()) return false;
      for (std::size_t i = 0; i < x.terms.size(); ++i)
        if (!structurally_equal(x.terms[i], y.terms[i])) return false;
      return true;
    };
    if (!same(m.source, s) || !same(m.target, g))
      fail(ErrorKind::NonNestedTower, "map " + std::to_string(n) + " does not connect stages " + std::to_string(n + 1) +
                                          " and " + std::to_string(n));
    if (!is_chain_map(m)) fail(ErrorKind::NonNestedTower, "map " + std::to_string(n) + " is not a chain map");
    for (const auto& comp : m.comps)
      if (!is_zero_functor(pointwise_subquotient(comp, PointwiseKind::Kernel)))
        fail(ErrorKind::NonNestedTower, "map " + std::to_string(n) + " is not an inclusion");
  }
  TowerReport r;
  for (std::size_t n = 0; n < t.maps.size(); ++n) r.gr.push_back(cone(t.maps[n]));
  r.gr.push_back(t.stages.back());
  for (std::size_t s = t.stages.size(); s-- > 0;) {
    if (!acyclic_in(t.stages[s], lo, hi)) break;
    r.vanishing_from = s;
  }
  r.complete_in_window = r.vanishing_from.has_value();
  return r;
}

}  // namespace c2hom
