#include "c2hom/perm.hpp"

#include <algorithm>

#include "c2hom/error.hpp"

namespace c2hom {
namespace {

std::vector<std::size_t> offsets(const std::vector<Orbit>& orbits) {
  std::vector<std::size_t> off;
  off.reserve(orbits.size());
  std::size_t pos = 0;
  for (Orbit o : orbits) {
    off.push_back(pos);
    pos += o == Orbit::Fixed ? 1 : 2;
  }
  return off;
}

void reduce(const BaseRing& base, Matrix& m) {
  if (base.is_mod()) m.reduce_mod(base.modulus());
}

// Drops the given e-level rows (or columns) from a matrix.
Matrix drop_rows(const Matrix& m, const std::vector<std::size_t>& drop) {
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (std::find(drop.begin(), drop.end(), r) == drop.end()) keep.push_back(r);
  return m.rows_subset(keep);
}

Matrix drop_cols(const Matrix& m, const std::vector<std::size_t>& drop) {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (std::find(drop.begin(), drop.end(), c) == drop.end()) keep.push_back(c);
  return m.columns(keep);
}

void trim(PermComplex& c) {
  while (!c.orbits.empty() && c.orbits.back().empty()) {
    c.orbits.pop_back();
    if (!c.diffs.empty()) c.diffs.pop_back();
  }
  while (!c.orbits.empty() && c.orbits.front().empty()) {
    c.orbits.erase(c.orbits.begin());
    if (!c.diffs.empty()) c.diffs.erase(c.diffs.begin());
    ++c.lo;
  }
  if (c.orbits.empty()) {
    c.lo = 0;
    c.diffs.clear();
  }
}

}  // namespace

std::size_t e_rank(const std::vector<Orbit>& orbits) {
  std::size_t n = 0;
  for (Orbit o : orbits) n += o == Orbit::Fixed ? 1 : 2;
  return n;
}

Matrix involution(const std::vector<Orbit>& orbits) {
  Matrix w(e_rank(orbits), e_rank(orbits));
  std::size_t pos = 0;
  for (Orbit o : orbits) {
    if (o == Orbit::Fixed) {
      w(pos, pos) = 1;
      pos += 1;
    } else {
      w(pos, pos + 1) = 1;
      w(pos + 1, pos) = 1;
      pos += 2;
    }
  }
  return w;
}

const std::vector<Orbit>& PermComplex::at(int n) const {
  static const std::vector<Orbit> none;
  if (n < lo || n > hi()) return none;
  return orbits[static_cast<std::size_t>(n - lo)];
}

std::size_t PermComplex::rank(int n) const { return e_rank(at(n)); }

Matrix PermComplex::diff(int n) const {
  if (n - 1 < lo || n > hi()) return Matrix(rank(n - 1), rank(n));
  return diffs[static_cast<std::size_t>(n - lo - 1)];
}

std::size_t PermComplex::size() const {
  std::size_t s = 0;
  for (const auto& o : orbits) s += o.size();
  return s;
}

MackeyFunctor perm_functor(const BaseRing& base, const std::vector<Orbit>& orbits) {
  std::vector<MackeyFunctor> parts;
  for (Orbit o : orbits) parts.push_back(o == Orbit::Fixed ? constant(base) : induced(base));
  return direct_sum(parts, base);
}

Matrix perm_fix_matrix(const std::vector<Orbit>& src, const std::vector<Orbit>& tgt, const Matrix& e) {
  const auto so = offsets(src), to = offsets(tgt);
  Matrix f(tgt.size(), src.size());
  for (std::size_t t = 0; t < tgt.size(); ++t)
    for (std::size_t s = 0; s < src.size(); ++s) {
      f(t, s) = e(to[t], so[s]);
      if (src[s] == Orbit::Free) f(t, s) += e(to[t], so[s] + 1);
    }
  return f;
}

MackeyHom perm_map(const BaseRing& base, const std::vector<Orbit>& src, const std::vector<Orbit>& tgt,
                   const Matrix& e) {
  return MackeyHom(perm_functor(base, src), perm_functor(base, tgt), e, perm_fix_matrix(src, tgt, e));
}

PermComplex perm_unit(const BaseRing& base, std::size_t rank) {
  PermComplex c;
  c.base = base;
  c.orbits.push_back(std::vector<Orbit>(rank, Orbit::Fixed));
  trim(c);
  return c;
}

PermComplex perm_zero(const BaseRing& base) {
  PermComplex c;
  c.base = base;
  return c;
}

PermComplex k_sigma(const BaseRing& base) {
  PermComplex c;
  c.base = base;
  c.lo = 0;
  c.orbits = {{Orbit::Fixed}, {Orbit::Free}};
  c.diffs = {Matrix{{1, 1}}};
  return c;
}

PermComplex k_minus_sigma(const BaseRing& base) {
  PermComplex c;
  c.base = base;
  c.lo = -1;
  c.orbits = {{Orbit::Free}, {Orbit::Fixed}};
  c.diffs = {Matrix{{1}, {1}}};
  return c;
}

PermComplex perm_direct_sum(const PermComplex& a, const PermComplex& b) {
  if (a.base != b.base) fail(ErrorKind::BaseMismatch, "direct sum over different bases");
  if (a.empty()) return b;
  if (b.empty()) return a;
  PermComplex c;
  c.base = a.base;
  c.lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.hi(), b.hi());
  for (int n = c.lo; n <= hi; ++n) {
    std::vector<Orbit> o = a.at(n);
    o.insert(o.end(), b.at(n).begin(), b.at(n).end());
    c.orbits.push_back(std::move(o));
  }
  for (int n = c.lo + 1; n <= hi; ++n) c.diffs.push_back(block_diag(a.diff(n), b.diff(n)));
  return c;
}

PermComplex perm_shift(const PermComplex& c, int j) {
  PermComplex out = c;
  if (out.empty()) return out;
  out.lo += j;
  if (j % 2 != 0)
    for (auto& d : out.diffs) {
      d = -d;
      reduce(out.base, d);
    }
  return out;
}

PermComplex perm_tensor(const PermComplex& a, const PermComplex& b) {
  if (a.base != b.base) fail(ErrorKind::BaseMismatch, "tensor over different bases");
  PermComplex c;
  c.base = a.base;
  if (a.empty() || b.empty()) return c;
  c.lo = a.lo + b.lo;
  const int hi = a.hi() + b.hi();

  // index[n - c.lo][p - a.lo][ea * rank_b(n - p) + eb] = e-index in degree n.
  std::vector<std::vector<std::vector<std::size_t>>> index;
  for (int n = c.lo; n <= hi; ++n) {
    std::vector<Orbit> orbs;
    std::vector<std::vector<std::size_t>> per_p;
    std::size_t pos = 0;
    for (int p = a.lo; p <= a.hi(); ++p) {
      const int q = n - p;
      const auto& ao = a.at(p);
      const auto& bo = b.at(q);
      const std::size_t rb = e_rank(bo);
      std::vector<std::size_t> table(e_rank(ao) * rb);
      const auto aoff = offsets(ao), boff = offsets(bo);
      for (std::size_t i = 0; i < ao.size(); ++i)
        for (std::size_t j = 0; j < bo.size(); ++j) {
          const std::size_t oi = aoff[i], oj = boff[j];
          const bool fi = ao[i] == Orbit::Free, fj = bo[j] == Orbit::Free;
          if (!fi && !fj) {
            orbs.push_back(Orbit::Fixed);
            table[oi * rb + oj] = pos;
            pos += 1;
          } else if (!fi) {
            orbs.push_back(Orbit::Free);
            table[oi * rb + oj] = pos;
            table[oi * rb + oj + 1] = pos + 1;
            pos += 2;
          } else if (!fj) {
            orbs.push_back(Orbit::Free);
            table[oi * rb + oj] = pos;
            table[(oi + 1) * rb + oj] = pos + 1;
            pos += 2;
          } else {
            // {x y, gx gy} and {x gy, gx y}
            orbs.push_back(Orbit::Free);
            orbs.push_back(Orbit::Free);
            table[oi * rb + oj] = pos;
            table[(oi + 1) * rb + oj + 1] = pos + 1;
            table[oi * rb + oj + 1] = pos + 2;
            table[(oi + 1) * rb + oj] = pos + 3;
            pos += 4;
          }
        }
      per_p.push_back(std::move(table));
    }
    c.orbits.push_back(std::move(orbs));
    index.push_back(std::move(per_p));
  }

  for (int n = c.lo + 1; n <= hi; ++n) {
    Matrix d(e_rank(c.at(n - 1)), e_rank(c.at(n)));
    const auto& src = index[static_cast<std::size_t>(n - c.lo)];
    const auto& tgt = index[static_cast<std::size_t>(n - 1 - c.lo)];
    for (int p = a.lo; p <= a.hi(); ++p) {
      const int q = n - p;
      const std::size_t ra = a.rank(p), rb = b.rank(q);
      if (ra == 0 || rb == 0) continue;
      const auto& st = src[static_cast<std::size_t>(p - a.lo)];
      const Matrix da = a.diff(p), db = b.diff(q);
      const Int sign = (p % 2 == 0) ? 1 : -1;
      for (std::size_t ea = 0; ea < ra; ++ea)
        for (std::size_t eb = 0; eb < rb; ++eb) {
          const std::size_t s = st[ea * rb + eb];
          if (p - 1 >= a.lo) {
            const auto& tt = tgt[static_cast<std::size_t>(p - 1 - a.lo)];
            for (std::size_t r = 0; r < da.rows(); ++r)
              if (sgn(da(r, ea)) != 0) d(tt[r * rb + eb], s) += da(r, ea);
          }
          if (db.rows() > 0) {
            const auto& tt = tgt[static_cast<std::size_t>(p - a.lo)];
            for (std::size_t r = 0; r < db.rows(); ++r)
              if (sgn(db(r, eb)) != 0) d(tt[ea * db.rows() + r], s) += sign * db(r, eb);
          }
        }
    }
    reduce(c.base, d);
    c.diffs.push_back(std::move(d));
  }
  trim(c);
  return c;
}

namespace {

// Looks for an invertible equivariant block of d_n. Returns false if none.
bool find_pivot(const PermComplex& c, int n, std::size_t& s_out, std::size_t& t_out) {
  const auto& src = c.at(n);
  const auto& tgt = c.at(n - 1);
  const Matrix& d = c.diffs[static_cast<std::size_t>(n - c.lo - 1)];
  const auto so = offsets(src), to = offsets(tgt);
  for (std::size_t s = 0; s < src.size(); ++s)
    for (std::size_t t = 0; t < tgt.size(); ++t) {
      if (src[s] != tgt[t]) continue;
      Int det;
      if (src[s] == Orbit::Fixed) {
        det = d(to[t], so[s]);
      } else {
        const Int& a = d(to[t], so[s]);
        const Int& b = d(to[t], so[s] + 1);
        det = a * a - b * b;
      }
      if (sgn(det) != 0 && c.base.is_unit(det)) {
        s_out = s;
        t_out = t;
        return true;
      }
    }
  return false;
}

void eliminate(PermComplex& c, int n, std::size_t s, std::size_t t) {
  const std::size_t in = static_cast<std::size_t>(n - c.lo);  // index of C_n
  auto& src = c.orbits[in];
  auto& tgt = c.orbits[in - 1];
  const auto so = offsets(src), to = offsets(tgt);
  const bool free = src[s] == Orbit::Free;
  std::vector<std::size_t> cs = {so[s]}, rt = {to[t]};
  if (free) {
    cs.push_back(so[s] + 1);
    rt.push_back(to[t] + 1);
  }
  Matrix& d = c.diffs[in - 1];
  Matrix phi_inv(cs.size(), cs.size());
  if (!free) {
    phi_inv(0, 0) = c.base.inverse(d(rt[0], cs[0]));
  } else {
    const Int a = d(rt[0], cs[0]), b = d(rt[0], cs[1]);
    const Int u = c.base.inverse(a * a - b * b);
    phi_inv = Matrix{{0, 0}, {0, 0}};
    phi_inv(0, 0) = u * a;
    phi_inv(0, 1) = -u * b;
    phi_inv(1, 0) = -u * b;
    phi_inv(1, 1) = u * a;
  }
  Matrix delta = drop_cols(d.rows_subset(rt), cs);
  Matrix gamma = drop_rows(d.columns(cs), rt);
  Matrix eps = drop_cols(drop_rows(d, rt), cs);
  Matrix nd = eps - gamma * phi_inv * delta;
  reduce(c.base, nd);
  d = std::move(nd);
  if (in + 1 < c.orbits.size()) c.diffs[in] = drop_rows(c.diffs[in], cs);
  if (in >= 2) c.diffs[in - 2] = drop_cols(c.diffs[in - 2], rt);
  src.erase(src.begin() + static_cast<long>(s));
  tgt.erase(tgt.begin() + static_cast<long>(t));
}

}  // namespace

PermComplex minimize(const PermComplex& in) {
  PermComplex c = in;
  for (auto& d : c.diffs) reduce(c.base, d);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int n = c.lo + 1; n <= c.hi(); ++n) {
      std::size_t s = 0, t = 0;
      while (find_pivot(c, n, s, t)) {
        eliminate(c, n, s, t);
        progress = true;
      }
    }
  }
  trim(c);
  return c;
}

PermComplex perm_sigma_shift(const PermComplex& c, int k) {
  PermComplex out = c;
  const PermComplex kk = k > 0 ? k_sigma(c.base) : k_minus_sigma(c.base);
  for (int i = 0; i < std::abs(k); ++i) out = minimize(perm_tensor(out, kk));
  return out;
}

PermComplex sphere(const BaseRing& base, std::size_t rank, int a, int b) {
  if (rank == 0) return perm_zero(base);
  return perm_shift(perm_sigma_shift(perm_unit(base, rank), b), a);
}

bool perm_dd_zero(const PermComplex& c) {
  for (int n = c.lo + 2; n <= c.hi(); ++n) {
    Matrix dd = c.diff(n - 1) * c.diff(n);
    reduce(c.base, dd);
    if (!dd.is_zero()) return false;
  }
  return true;
}

bool perm_equivariant(const PermComplex& c) {
  for (int n = c.lo + 1; n <= c.hi(); ++n) {
    Matrix x = c.diff(n) * involution(c.at(n)) - involution(c.at(n - 1)) * c.diff(n);
    reduce(c.base, x);
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace c2hom
