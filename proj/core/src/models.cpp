#include "c2hom/models.hpp"

#include <algorithm>
#include <functional>

#include "c2hom/error.hpp"

namespace c2hom {
namespace {

PermComplex single(const BaseRing& r, const std::vector<Orbit>& orbits, int degree) {
  PermComplex p;
  p.base = r;
  if (orbits.empty()) return p;
  p.lo = degree;
  p.orbits = {orbits};
  return p;
}

std::vector<Orbit> frees(std::size_t k) { return std::vector<Orbit>(k, Orbit::Free); }

// Monomials a^i b^(w-i) under a <-> b.
std::vector<Orbit> swap_orbits(int w) {
  std::vector<Orbit> o;
  if (w < 0) return o;
  for (int i = 0; 2 * i <= w; ++i) o.push_back(2 * i == w ? Orbit::Fixed : Orbit::Free);
  return o;
}

// The swap matrix on the degree-w monomials a^i b^(w-i), times `sign`.
Matrix swap_matrix(int w, long sign) {
  const std::size_t n = static_cast<std::size_t>(w + 1);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(n - 1 - i, i) = sign;
  return m;
}

std::string weight_list(const std::map<int, bool>& agrees) {
  std::string s;
  for (const auto& [w, ok] : agrees)
    if (!ok) s += (s.empty() ? "" : ", ") + std::to_string(w);
  return s;
}

std::optional<std::string> obstruction_for(const BaseRing& r, const std::map<int, bool>& agrees) {
  if (r.two_invertible()) return std::nullopt;
  std::string msg = "2 is not invertible in " + r.name() + "; the Omega-form rewrite is not available";
  const std::string bad = weight_list(agrees);
  if (!bad.empty()) msg += " (homology differs at " + bad + ")";
  return msg;
}

bool is_prime_power(const Int& m) {
  if (m < 2) return false;
  Int n = m, p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

void require_perfectoid_base(const BaseRing& r, int nmax) {
  if (!r.is_mod() || !is_prime_power(r.modulus()))
    fail(ErrorKind::UnsupportedBase, "perfectoid models need F_p or Z/p^k, got " + r.name());
  if (nmax < 0) fail(ErrorKind::InvalidParams, "nmax must be nonnegative");
}

PermComplex perfectoid_perm(const BaseRing& r, int first, int last) {
  PermComplex p = perm_zero(r);
  for (int n = first; n <= last; ++n) p = perm_direct_sum(p, sphere(r, 1, n, n));
  return p;
}

}  // namespace

MackeyComplex total(const WeightGradedComplex& w) {
  MackeyComplex t = zero_complex(w.base);
  for (const auto& [k, c] : w.pieces) t = direct_sum(t, c);
  return t;
}

Int binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Int mu(int d, int n, int w) {
  if (n < 0 || n > d || w < n) return 0;
  if (d == 0) return w == 0 ? 1 : 0;
  return binomial(d, n) * binomial(w - n + d - 1, d - 1);
}

WeightGradedComplex hr_polynomial(const BaseRing& r, int d, int wmax) {
  if (d < 0 || wmax < 0) fail(ErrorKind::InvalidParams, "d and wmax must be nonnegative");
  const PermComplex unit = perm_unit(r);
  const PermComplex one_var = perm_direct_sum(unit, sphere(r, 1, 0, 1));

  WeightGradedComplex out;
  out.base = r;
  out.meta = "HR(R[x_1..x_d]/R) by monomial weight; d = " + std::to_string(d);
  for (int w = 0; w <= wmax; ++w) {
    PermComplex sum = perm_zero(r);
    // every way to write w = w_1 + ... + w_d
    std::function<void(int, int, PermComplex)> rec = [&](int var, int left, PermComplex acc) {
      if (var == d) {
        if (left == 0) sum = perm_direct_sum(sum, acc);
        return;
      }
      for (int k = 0; k <= left; ++k) rec(var + 1, left - k, perm_tensor(acc, k == 0 ? unit : one_var));
    };
    rec(0, w, unit);
    out.pieces.emplace(w, from_perm(minimize(sum)));
  }
  return out;
}

std::vector<std::pair<FgModule, int>> hr_polynomial_parts(const BaseRing& r, int d, int w) {
  std::vector<std::pair<FgModule, int>> parts;
  for (int n = 0; n <= d; ++n) {
    const Int m = mu(d, n, w);
    if (m != 0) parts.emplace_back(FgModule::free(r, m.get_ui()), n);
  }
  return parts;
}

LaurentModel hr_sign_laurent(const BaseRing& r, int smax, std::optional<int> power) {
  if (smax < 0) fail(ErrorKind::InvalidParams, "sector bound must be nonnegative");
  if (power && *power == 0) fail(ErrorKind::ZeroPowerMap, "x -> x^0 does not preserve the involution model");
  LaurentModel out;
  out.two_invertible = r.two_invertible();
  out.plain.base = out.sigma_form.base = r;
  out.plain.meta = "HR(R[Z^sigma]/R) = A + A[1], by sector |j|";
  out.sigma_form.meta = "Omega^0 + Omega^1[sigma], by sector |j|";

  for (int s = 0; s <= smax; ++s) {
    const std::vector<Orbit> orb = s == 0 ? std::vector<Orbit>{Orbit::Fixed} : frees(1);
    const PermComplex a0 = single(r, orb, 0);
    out.plain.pieces.emplace(s, from_perm(perm_direct_sum(a0, single(r, orb, 1))));

    // Omega^1 in sector s with f(x)dx -> f(1/x)d(1/x), i.e. A with -swap.
    const MackeyFunctor omega1 = s == 0 ? fixed_point(FgModule::free(r, 1), Matrix{{-1}})
                                        : fixed_point(FgModule::free(r, 2), Matrix{{0, -1}, {-1, 0}});
    out.sigma_form.pieces.emplace(s, direct_sum(from_perm(a0), sigma_shift(concentrated(omega1), 1)));
    out.agrees[s] = same_homology(out.plain.pieces.at(s), out.sigma_form.pieces.at(s));
  }
  out.obstruction = obstruction_for(r, out.agrees);

  if (power) {
    const int n = *power;
    const MackeyComplex t = total(out.plain);
    // Offsets of each sector inside a degree of the total complex.
    std::vector<std::size_t> oe, of;
    std::size_t e = 0, f = 0;
    for (int s = 0; s <= smax; ++s) {
      oe.push_back(e);
      of.push_back(f);
      e += s == 0 ? 1 : 2;
      f += 1;
    }
    ChainMap m{t, t, {}};
    m.comps.push_back(MackeyHom::identity(t.term(0)));
    Matrix me(e, e), mf(f, f);
    for (int s = 0; s <= smax; ++s) {
      const int target = std::abs(n) * s;
      out.power_targets[s] = target;
      if (target > smax) continue;
      const std::size_t i = static_cast<std::size_t>(s), j = static_cast<std::size_t>(target);
      mf(of[j], of[i]) = 1;
      if (s == 0) {
        me(oe[j], oe[i]) = 1;
      } else {
        // (x^s, x^-s) -> (x^ns, x^-ns), swapped when n < 0
        me(oe[j] + (n > 0 ? 0 : 1), oe[i]) = 1;
        me(oe[j] + (n > 0 ? 1 : 0), oe[i] + 1) = 1;
      }
    }
    m.comps.emplace_back(t.term(1), t.term(1), me, mf);
    if (!is_chain_map(m)) fail(ErrorKind::Internal, "power map is not a chain map");
    out.power_map = std::move(m);
  }
  return out;
}

ConjPlaneModel hr_conjugation_plane(const BaseRing& r, int wmax) {
  if (wmax < 0) fail(ErrorKind::InvalidParams, "wmax must be nonnegative");
  ConjPlaneModel out;
  out.two_invertible = r.two_invertible();
  out.plain.base = out.sigma_form.base = r;
  out.plain.meta = "HR(R[a,b]/R), a <-> b: A + (R[v,w] + R[x,y])[1] + A[1+sigma], by total weight";
  out.sigma_form.meta = "Omega^0 + Omega^1[sigma] + Omega^2[2 sigma], by total weight";

  for (int w = 0; w <= wmax; ++w) {
    const PermComplex a0 = single(r, swap_orbits(w), 0);
    // Middle summand: the w monomials of degree w - 1 in each copy, swapped.
    const PermComplex mid = single(r, frees(static_cast<std::size_t>(w)), 1);
    PermComplex top = perm_zero(r);
    if (w >= 2) top = perm_shift(perm_sigma_shift(single(r, swap_orbits(w - 2), 0), 1), 1);
    out.plain.pieces.emplace(w, from_perm(perm_direct_sum(perm_direct_sum(a0, mid), top)));

    MackeyComplex sf = from_perm(a0);
    if (w >= 1) sf = direct_sum(sf, from_perm(perm_sigma_shift(single(r, frees(static_cast<std::size_t>(w)), 0), 1)));
    if (w >= 2) {
      // a^i b^j da^db -> -a^j b^i da^db
      const MackeyFunctor omega2 = fixed_point(FgModule::free(r, static_cast<std::size_t>(w - 1)), swap_matrix(w - 2, -1));
      sf = direct_sum(sf, sigma_shift(concentrated(omega2), 2));
    }
    out.sigma_form.pieces.emplace(w, sf);
    out.agrees[w] = same_homology(out.plain.pieces.at(w), sf);
  }
  out.obstruction = obstruction_for(r, out.agrees);
  return out;
}

MackeyComplex thr_perfectoid_model(const BaseRing& r, int nmax) {
  require_perfectoid_base(r, nmax);
  MackeyComplex c = from_perm(perfectoid_perm(r, 0, nmax));
  c.hom_hi = nmax;
  c.slice_hi = 2 * nmax + 1;
  return c;
}

ChainMap perfectoid_u(const BaseRing& r, int nmax) {
  require_perfectoid_base(r, nmax);
  const MackeyComplex model = thr_perfectoid_model(r, nmax);
  MackeyComplex shifted = from_perm(perfectoid_perm(r, 1, nmax + 1));
  shifted.hom_hi = nmax + 1;

  // Summand n + 1 of the shifted model is summand n + 1 of the model.
  std::vector<PermComplex> parts;
  for (int n = 0; n <= nmax + 1; ++n) parts.push_back(sphere(r, 1, n, n));
  auto rank_at = [](const PermComplex& p, int d) { return p.empty() || d < p.lo || d > p.hi() ? 0 : p.rank(d); };
  ChainMap u{shifted, model, {}};
  const PermComplex& sm = *shifted.free_model;
  const PermComplex& mm = *model.free_model;
  for (int d = shifted.lo; d <= shifted.hi(); ++d) {
    Matrix e(rank_at(mm, d), rank_at(sm, d));
    std::size_t row = rank_at(parts[0], d), col = 0;
    for (int n = 1; n <= nmax + 1; ++n) {
      const std::size_t k = rank_at(parts[static_cast<std::size_t>(n)], d);
      if (n <= nmax)
        for (std::size_t i = 0; i < k; ++i) e(row + i, col + i) = 1;
      row += n <= nmax ? k : 0;
      col += k;
    }
    const std::vector<Orbit> none;
    const auto& src = d >= sm.lo && d <= sm.hi() ? sm.at(d) : none;
    const auto& tgt = d >= mm.lo && d <= mm.hi() ? mm.at(d) : none;
    MackeyHom h = perm_map(r, src, tgt, e);
    u.comps.emplace_back(shifted.term(d), model.term(d), h.fe, h.ffix);
  }
  if (!is_chain_map(u)) fail(ErrorKind::Internal, "u is not a chain map");
  return u;
}

CofiberReport cofiber_u_check(const BaseRing& r, int nmax) {
  CofiberReport rep;
  rep.cone = cone(perfectoid_u(r, nmax));
  rep.window = {0, std::max(nmax - 1, 0)};
  rep.cone.hom_hi = rep.window.hi;
  rep.matches_hr = true;
  for (int n = rep.window.lo; n <= rep.window.hi; ++n) {
    rep.homology.push_back(homology_raw(rep.cone, n));
    const MackeyFunctor& h = rep.homology.back();
    const bool ok = n == 0 ? same_invariants(h, constant(r)) : is_zero_functor(h);
    rep.matches_hr = rep.matches_hr && ok;
  }
  return rep;
}

bool same_homology(const MackeyComplex& a, const MackeyComplex& b) {
  if (a.empty() && b.empty()) return true;
  int lo = kUnbounded, hi = -kUnbounded;
  for (const MackeyComplex* c : {&a, &b})
    if (!c->empty()) {
      lo = std::min(lo, c->lo);
      hi = std::max(hi, c->hi());
    }
  for (int n = lo; n <= hi; ++n)
    if (invariant_tuple(homology_raw(a, n)) != invariant_tuple(homology_raw(b, n))) return false;
  return true;
}

}  // namespace c2hom
