#include "c2hom/slices.hpp"

#include <algorithm>

#include "c2hom/error.hpp"

namespace c2hom {
namespace {

int floor_half(int k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

// (sigma exponent n, homology degree) with rho_k read off H_deg(c[-n sigma]).
std::pair<int, int> slice_coordinates(int k) {
  const int n = floor_half(k);
  return {n, k % 2 == 0 ? n : n + 1};
}

void check_trust(const MackeyComplex& c, int k) {
  if (c.slice_hi) {
    if (k > *c.slice_hi)
      fail(ErrorKind::WindowTooSmall,
           "rho_" + std::to_string(k) + " is above the modeled slice range " + std::to_string(*c.slice_hi));
    return;
  }
  auto [n, deg] = slice_coordinates(k);
  const int trusted = c.hom_hi >= kUnbounded ? kUnbounded : c.hom_hi - std::max(n, 0);
  if (deg > trusted)
    fail(ErrorKind::WindowTooSmall, "rho_" + std::to_string(k) + " needs H_" + std::to_string(deg) +
                                        " after a sigma shift, trusted only through " + std::to_string(trusted));
}

class ShiftCache {
 public:
  explicit ShiftCache(const MackeyComplex& c) : c_(c) {}
  const MackeyComplex& get(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, n == 0 ? c_ : sigma_shift(c_, -n)).first;
    return it->second;
  }

 private:
  const MackeyComplex& c_;
  std::map<int, MackeyComplex> cache_;
};

MackeyFunctor rho_cached(ShiftCache& cache, int k) {
  auto [n, deg] = slice_coordinates(k);
  MackeyFunctor h = homology_raw(cache.get(n), deg);
  return k % 2 == 0 ? h : p0(h);
}

}  // namespace

MackeyFunctor rho(const MackeyComplex& c, int k) {
  check_trust(c, k);
  ShiftCache cache(c);
  return rho_cached(cache, k);
}

SliceTable rho_table(const MackeyComplex& c, Interval range) {
  if (range.hi < range.lo) fail(ErrorKind::InvalidParams, "empty slice range");
  for (int k = range.lo; k <= range.hi; ++k) check_trust(c, k);
  SliceTable t;
  t.range = range;
  ShiftCache cache(c);
  for (int k = range.lo; k <= range.hi; ++k) t.rho.emplace(k, rho_cached(cache, k));

  t.even = true;
  for (const auto& [k, m] : t.rho)
    if (k % 2 != 0 && !is_zero_functor(m)) t.even = false;
  t.very_even = t.even;
  for (const auto& [k, m] : t.rho) {
    if (k % 2 != 0 || !t.very_even) continue;
    if (!same_invariants(m, constant(m.mfix))) t.very_even = false;
    else if (!same_invariants(m, constant(e_homology(c, k)))) t.very_even = false;
  }
  return t;
}

bool vanishing_test(const MackeyComplex& c, Interval range) {
  SliceTable t = rho_table(c, range);
  for (const auto& [k, m] : t.rho)
    if (!is_zero_functor(m)) return false;
  // Homology is checked over the whole trusted window of c, not only the
  // slice range, so classes that would surface in higher slices are caught.
  return c.empty() || acyclic_in(c, c.lo, std::min(c.hi(), c.hom_hi));
}

bool e_level_even(const MackeyComplex& c, Interval range) {
  for (int k = range.lo; k <= range.hi; ++k)
    if (k % 2 != 0 && !is_zero_module(e_homology(c, k))) return false;
  return true;
}

MackeyComplex constant_sigma_sphere(const FgModule& m, int n) {
  const BaseRing& base = m.base();
  const Int freeval = base.modulus();
  const auto f = invariant_factors(m);
  if (std::all_of(f.begin(), f.end(), [&](const Int& d) { return d == freeval; }))
    return from_perm(sphere(base, f.size(), 0, n));
  return sigma_shift(concentrated(constant(m)), n);
}

SigmaFiltration sigma_filtration(const BaseRing& base, const std::vector<std::pair<FgModule, int>>& parts) {
  std::map<int, FgModule> by_degree;
  for (const auto& [m, n] : parts) {
    if (m.base() != base) fail(ErrorKind::BaseMismatch, "summand over " + m.base().name());
    if (n < 0) fail(ErrorKind::NotSigmaSums, "negative sigma degree " + std::to_string(n));
    if (!by_degree.emplace(n, m).second) fail(ErrorKind::NotSigmaSums, "sigma degree " + std::to_string(n) + " repeated");
  }
  SigmaFiltration out;
  if (by_degree.empty()) {
    out.tower.stages.push_back(zero_complex(base));
    out.gr.push_back(zero_complex(base));
    out.gr_matches.push_back(true);
    out.all_match = true;
    return out;
  }
  const int top = by_degree.rbegin()->first;

  // Fil_n = piece_n + Fil_{n+1}, built from the top down.
  std::vector<MackeyComplex> stages(static_cast<std::size_t>(top) + 1);
  std::vector<ChainMap> maps(static_cast<std::size_t>(top));
  MackeyComplex above = zero_complex(base);
  for (int n = top; n >= 0; --n) {
    auto it = by_degree.find(n);
    MackeyComplex piece = it == by_degree.end() ? zero_complex(base) : constant_sigma_sphere(it->second, n);
    MackeyComplex stage = direct_sum(piece, above);
    if (n < top) {
      ChainMap inc{above, stage, {}};
      for (int d = above.lo; d <= above.hi(); ++d) {
        const MackeyFunctor src = above.term(d), lead = piece.term(d);
        Matrix fe = vstack(Matrix(lead.me.gens(), src.me.gens()), Matrix::identity(src.me.gens()));
        Matrix ff = vstack(Matrix(lead.mfix.gens(), src.mfix.gens()), Matrix::identity(src.mfix.gens()));
        inc.comps.emplace_back(src, stage.term(d), fe, ff);
      }
      maps[static_cast<std::size_t>(n)] = std::move(inc);
    }
    stages[static_cast<std::size_t>(n)] = stage;
    above = std::move(stage);
  }
  out.tower.stages = std::move(stages);
  out.tower.maps = std::move(maps);
  TowerReport rep = tower_gr_and_completeness(out.tower, 0, top);
  out.gr = std::move(rep.gr);

  out.all_match = true;
  for (int n = 0; n <= top; ++n) {
    const MackeyComplex& g = out.gr[static_cast<std::size_t>(n)];
    auto it = by_degree.find(n);
    const FgModule fn = it == by_degree.end() ? FgModule::free(base, 0) : it->second;
    const MackeyComplex s = sigma_shift(g, -n);
    bool ok = same_invariants(homology_raw(s, 0), constant(fn));
    for (int d = s.lo; ok && d <= s.hi() + 1; ++d)
      if (d != 0 && !is_zero_functor(homology_raw(s, d))) ok = false;
    ok = ok && isomorphic(e_homology(g, n), fn);
    for (int d = g.lo; ok && d <= g.hi() + 1; ++d)
      if (d != n && !is_zero_module(e_homology(g, d))) ok = false;
    out.gr_matches.push_back(ok);
    out.all_match = out.all_match && ok;
  }
  return out;
}

}  // namespace c2hom
