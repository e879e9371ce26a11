#include "corpus.hpp"

#include "c2hom/models.hpp"
#include "oracles.hpp"

namespace corpus {
namespace {

using namespace c2hom;

const BaseRing kZ = BaseRing::integers();

FgModule zmod(long k) { return FgModule::cyclic(kZ, Int(k)); }

long level_order(const FgModule& m) {
  auto o = order(m);
  return o ? o->get_si() : -1;
}

// Burnside functor reduced mod k: <Z/k, (Z/k)^2; (1 2), (0 1)^T, 1>.
MackeyFunctor burnside_mod(long k) {
  return MackeyFunctor(zmod(k), FgModule::from_invariants(kZ, {Int(k), Int(k)}), Matrix{{1, 2}}, Matrix{{0}, {1}},
                       Matrix{{1}});
}

struct Piece {
  std::string name;
  MackeyFunctor f;
};

std::vector<Piece> pieces() {
  std::vector<Piece> p;
  for (long k : {2, 3, 4, 5, 8}) p.push_back({"C(Z/" + std::to_string(k) + ")", constant(zmod(k))});
  for (long k : {2, 3, 4}) p.push_back({"Ind(Z/" + std::to_string(k) + ")", induced(zmod(k))});
  for (long k : {2, 3, 4, 6}) p.push_back({"FP(Z/" + std::to_string(k) + ",-1)", fixed_point(zmod(k), Matrix{{-1}})});
  for (long k : {2, 3}) p.push_back({"<0,Z/" + std::to_string(k) + ">", fix_only(zmod(k))});
  for (long k : {3, 4}) p.push_back({"<Z/" + std::to_string(k) + ",0>", e_only(zmod(k), Matrix{{-1}})});
  for (long k : {2, 3}) p.push_back({"A/" + std::to_string(k), burnside_mod(k)});
  return p;
}

struct Unimodular {
  Matrix u, uinv;
};

Unimodular random_unimodular(std::size_t n, std::mt19937_64& rng) {
  Unimodular t{Matrix::identity(n), Matrix::identity(n)};
  if (n < 2) return t;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    const long k = coef(rng);
    if (i == j || k == 0) continue;
    // column i += k column j on u; the inverse gets row j -= k row i
    t.u.add_col_multiple(i, j, Int(k));
    t.uinv.add_row_multiple(j, i, Int(-k));
  }
  return t;
}

}  // namespace

MackeyFunctor disguise(const MackeyFunctor& m, std::mt19937_64& rng) {
  const Unimodular e = random_unimodular(m.me.gens(), rng), f = random_unimodular(m.mfix.gens(), rng);
  const FgModule me(m.base(), m.me.gens(), e.uinv * m.me.rels());
  const FgModule mfix(m.base(), m.mfix.gens(), f.uinv * m.mfix.rels());
  return MackeyFunctor(me, mfix, e.uinv * m.res * f.u, f.uinv * m.tr * e.u, e.uinv * m.w * e.u);
}

std::vector<Named> finite_functors(std::size_t count, std::uint64_t seed, long max_order) {
  std::mt19937_64 rng(seed);
  const auto ps = pieces();
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  std::uniform_int_distribution<int> nparts(1, 3);
  std::vector<Named> out;
  while (out.size() < count) {
    const int k = nparts(rng);
    MackeyFunctor f = zero_functor(kZ);
    std::string name;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      const Piece& p = ps[pick(rng)];
      MackeyFunctor g = direct_sum(f, p.f);
      if (level_order(g.me) > max_order || level_order(g.mfix) > max_order) {
        ok = i > 0;
        break;
      }
      f = g;
      name += (name.empty() ? "" : " + ") + p.name;
    }
    if (!ok || name.empty()) continue;
    out.push_back({name, disguise(f, rng)});
  }
  return out;
}

std::vector<Named> green_constructions() {
  std::vector<Named> out;
  for (long m : {0, 2, 3, 4, 5, 9}) {
    const BaseRing r = m == 0 ? kZ : BaseRing::integers_mod(Int(m));
    const std::string rn = r.name();
    for (std::size_t rank : {1u, 2u}) {
      const FgModule f = FgModule::free(r, rank);
      const std::string fn = rn + "^" + std::to_string(rank);
      out.push_back({"Constant(" + fn + ")", constant(f)});
      out.push_back({"Induced(" + fn + ")", induced(f)});
      out.push_back({"FixedPoint(" + fn + ",-1)", fixed_point(f, Matrix::scalar(rank, Int(-1)))});
      out.push_back({"FixedPoint(" + fn + ",1)", fixed_point(f, Matrix::identity(rank))});
    }
    out.push_back({"FixedPoint(" + rn + "^2,swap)", fixed_point(FgModule::free(r, 2), Matrix{{0, 1}, {1, 0}})});
  }
  out.push_back({"Constant(Z/6)", constant(zmod(6))});
  out.push_back({"Induced(Z/4)", induced(zmod(4))});
  out.push_back({"FixedPoint(Z/4,-1)", fixed_point(zmod(4), Matrix{{-1}})});
  return out;
}

std::vector<Named> axiom_perturbations(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Named> bases;
  for (long m : {3, 4, 5}) {
    const BaseRing r = BaseRing::integers_mod(Int(m));
    const std::string rn = r.name();
    bases.push_back({"Constant(" + rn + "^2)", constant(FgModule::free(r, 2))});
    bases.push_back({"Induced(" + rn + ")", induced(FgModule::free(r, 1))});
    bases.push_back({"FixedPoint(" + rn + "^2,swap)", fixed_point(FgModule::free(r, 2), Matrix{{0, 1}, {1, 0}})});
    bases.push_back({"FixedPoint(" + rn + ",1)", fixed_point(FgModule::free(r, 1), Matrix{{1}})});
  }
  std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
  std::vector<Named> out;
  while (out.size() < count) {
    const Named& b = bases[pick(rng)];
    MackeyFunctor f = b.functor;
    const long m = f.base().modulus().get_si();
    std::uniform_int_distribution<int> which(0, 2);
    std::uniform_int_distribution<long> delta(1, m - 1);
    const int w = which(rng);
    Matrix& target = w == 0 ? f.res : w == 1 ? f.tr : f.w;
    const char* label = w == 0 ? "res" : w == 1 ? "tr" : "w";
    if (target.empty()) continue;
    std::uniform_int_distribution<std::size_t> ri(0, target.rows() - 1), ci(0, target.cols() - 1);
    const std::size_t i = ri(rng), j = ci(rng);
    const long d = delta(rng);
    target(i, j) = f.base().reduce(target(i, j) + d);
    if (oracle::brute_force_axioms(f).mackey) continue;
    out.push_back({b.name + " with " + label + "(" + std::to_string(i) + "," + std::to_string(j) + ") += " +
                       std::to_string(d),
                   f});
  }
  return out;
}

std::vector<std::pair<Named, Named>> finite_green_pairs() {
  const Named c2{"C(Z/2)", constant(zmod(2))}, c3{"C(Z/3)", constant(zmod(3))}, c4{"C(Z/4)", constant(zmod(4))};
  const Named i2{"Ind(Z/2)", induced(zmod(2))}, i3{"Ind(Z/3)", induced(zmod(3))};
  const Named fp4{"FP(Z/4,-1)", fixed_point(zmod(4), Matrix{{-1}})};
  const Named fp3{"FP(Z/3,-1)", fixed_point(zmod(3), Matrix{{-1}})};
  const Named e2{"<Z/2,0>", e_only(zmod(2), Matrix{{1}})};
  return {{c2, c2}, {c2, c4}, {c4, c4}, {c3, c3}, {c2, i3}, {i2, c4}, {fp4, c2}, {fp3, c3}, {e2, c2}, {c3, i3}};
}

std::vector<NamedComplex> evenness_complexes() {
  std::vector<NamedComplex> out;
  const BaseRing f2 = BaseRing::integers_mod(2), f3 = BaseRing::integers_mod(3);
  out.push_back({"perfectoid F2 nmax 2", thr_perfectoid_model(f2, 2), {-2, 5}});
  out.push_back({"perfectoid F3 nmax 3", thr_perfectoid_model(f3, 3), {-2, 7}});
  const std::vector<std::pair<int, int>> spheres = {{0, 0}, {1, 1}, {2, 2}, {1, 0}, {2, 0}, {0, 1},
                                                    {0, 2}, {2, 1}, {3, 1}, {1, 2}, {3, 3}, {4, 2}};
  for (const BaseRing& r : {kZ, f2, f3}) {
    for (auto [a, b] : spheres) {
      const int span = 2 * (a + b) + 2;
      out.push_back({r.name() + "[" + std::to_string(a) + "+" + std::to_string(b) + "sigma]",
                     from_perm(sphere(r, 1, a, b)),
                     {-span, span}});
    }
    out.push_back({r.name() + "[0] + " + r.name() + "[1+sigma] + " + r.name() + "[3+3sigma]",
                   from_perm(perm_direct_sum(perm_direct_sum(sphere(r, 1, 0, 0), sphere(r, 1, 1, 1)),
                                             sphere(r, 1, 3, 3))),
                   {-2, 9}});
    out.push_back({r.name() + "[2+2sigma] + " + r.name() + "[1]",
                   from_perm(perm_direct_sum(sphere(r, 1, 2, 2), sphere(r, 1, 1, 0))),
                   {-2, 8}});
  }
  out.push_back({"Induced(F3)", concentrated(induced(f3)), {-2, 4}});
  out.push_back({"Constant(Z/4)[sigma]", sigma_shift(concentrated(constant(zmod(4))), 1), {-2, 4}});
  out.push_back({"HR(F3[x,y]) weight 2", hr_polynomial(f3, 2, 2).pieces.at(2), {-2, 6}});
  return out;
}

}  // namespace corpus
