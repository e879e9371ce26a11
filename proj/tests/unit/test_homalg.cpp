#include "corpus.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace th;

namespace {

// K_sigma and K_{-sigma} assembled from Mackey maps, without permutation models.
MackeyComplex generic_k_sigma(const BaseRing& r) {
  return make_complex(r, 0, {constant(r), induced(r)}, {MackeyHom(induced(r), constant(r), Matrix{{1, 1}}, Matrix{{2}})});
}
MackeyComplex generic_k_minus_sigma(const BaseRing& r) {
  return make_complex(r, -1, {induced(r), constant(r)},
                      {MackeyHom(constant(r), induced(r), Matrix{{1}, {1}}, Matrix{{1}})});
}

void expect_matches_oracle(const MackeyComplex& c, const oracle::PermData& d, std::int64_t p, int lo, int hi) {
  for (int n = lo; n <= hi; ++n) {
    const auto want = oracle::homology(d, n, p);
    EXPECT_EQ(oracle::library_invariants(e_homology(c, n)), want.e) << "e-level degree " << n;
    EXPECT_EQ(oracle::library_invariants(fix_homology(c, n)), want.fix) << "fixed level degree " << n;
  }
}

}  // namespace

TEST(Homology, ConstantInDegreeZero) {
  EXPECT_TRUE(Iso(homology(concentrated(constant(Zm(3))), 0), constant(Zm(3))));
}

TEST(Homology, SigmaShiftF3) {
  const MackeyComplex c = sigma_shift(concentrated(constant(Zm(3))), 1);
  EXPECT_TRUE(Iso(homology(c, 1), fixed_point(FgModule::free(Zm(3), 1), Matrix{{-1}})));
  EXPECT_TRUE(IsZero(homology(c, 0)));
  EXPECT_EQ(factors(e_homology(c, 1)), (std::vector<long>{3}));
  EXPECT_TRUE(is_zero_module(e_homology(c, 0)));
}

TEST(Homology, SigmaShiftF2HasFixedTwoTorsion) {
  const MackeyFunctor h = homology(sigma_shift(concentrated(constant(Zm(2))), 1), 0);
  EXPECT_TRUE(is_zero_module(h.me));
  EXPECT_EQ(factors(h.mfix), (std::vector<long>{2}));
}

TEST(Homology, WindowTooSmall) {
  const FreeResolution r = free_resolution(concentrated(induced(zmod(3))), 2);
  ASSERT_EQ(r.exact_through, 1);
  EXPECT_TRUE(Raises(ErrorKind::WindowTooSmall, [&] { homology(r.complex, r.exact_through + 1); }));
}

TEST(SigmaShift, TermsOfConstantZ) {
  const MackeyComplex c = sigma_shift(concentrated(constant(Z())), 1);
  EXPECT_TRUE(Iso(c.term(1), induced(Z())));
  EXPECT_TRUE(Iso(c.term(0), constant(Z())));
  EXPECT_EQ(factors(fix_homology(c, 0)), (std::vector<long>{2}));
  EXPECT_TRUE(Iso(homology(c, 1), fixed_point(FgModule::free(Z(), 1), Matrix{{-1}})));
}

TEST(SigmaShift, InverseRestoresHomology) {
  const MackeyComplex c = sigma_shift(sigma_shift(concentrated(constant(Z())), 1), -1);
  EXPECT_TRUE(Iso(homology(c, 0), constant(Z())));
  for (int n = c.lo; n <= c.hi(); ++n)
    if (n != 0) EXPECT_TRUE(IsZero(homology(c, n))) << n;
}

TEST(SigmaShift, InverseOnCorpusComplexes) {
  for (const auto& n : corpus::evenness_complexes()) {
    if (n.complex.base.two_invertible() && n.complex.hi() > 4) continue;
    const MackeyComplex back = sigma_shift(sigma_shift(n.complex, 1), -1);
    EXPECT_TRUE(same_homology(back, n.complex)) << n.name;
  }
}

TEST(TensorTotal, Unit) {
  for (const auto& n : corpus::evenness_complexes()) {
    const MackeyComplex t = tensor_total(n.complex, concentrated(constant(n.complex.base)), constant(n.complex.base));
    EXPECT_TRUE(same_homology(t, n.complex)) << n.name;
  }
}

TEST(TensorTotal, KunnethShapeOverF3) {
  const BaseRing f3 = Zm(3);
  const MackeyComplex c = direct_sum(concentrated(constant(f3)),
                                     concentrated(fixed_point(FgModule::free(f3, 1), Matrix{{-1}}), 1));
  const MackeyComplex t = tensor_total(c, c, constant(f3));
  EXPECT_EQ(factors(e_homology(t, 0)), (std::vector<long>{3}));
  EXPECT_EQ(factors(e_homology(t, 1)), (std::vector<long>{3, 3}));
  EXPECT_EQ(factors(e_homology(t, 2)), (std::vector<long>{3}));
  EXPECT_TRUE(Iso(homology(t, 2), constant(f3)));
}

TEST(TensorTotal, KSigmaSquaredAgainstDenseOracle) {
  const auto dense = oracle::tensor(oracle::k_sigma(), oracle::k_sigma());
  const MackeyComplex generic = tensor_total(generic_k_sigma(Z()), generic_k_sigma(Z()), constant(Z()));
  expect_matches_oracle(generic, dense, 0, -1, 3);
  EXPECT_EQ(factors(e_homology(generic, 2)), (std::vector<long>{0}));
  const MackeyComplex perm = tensor_total(from_perm(k_sigma(Z())), from_perm(k_sigma(Z())), constant(Z()));
  expect_matches_oracle(perm, dense, 0, -1, 3);
}

TEST(TensorTotal, MixedShiftsAgainstDenseOracle) {
  const auto dense = oracle::tensor(oracle::k_sigma(), oracle::k_minus_sigma());
  expect_matches_oracle(tensor_total(generic_k_sigma(Z()), generic_k_minus_sigma(Z()), constant(Z())), dense, 0, -2, 2);
  const auto dense3 = oracle::tensor(oracle::tensor(oracle::k_sigma(), oracle::k_sigma()), oracle::k_minus_sigma());
  const MackeyComplex t3 = tensor_total(tensor_total(generic_k_sigma(Zm(3)), generic_k_sigma(Zm(3)), constant(Zm(3))),
                                        generic_k_minus_sigma(Zm(3)), constant(Zm(3)));
  expect_matches_oracle(t3, dense3, 3, -2, 3);
}

TEST(TensorTotal, NotAGreenBase) {
  EXPECT_TRUE(Raises(ErrorKind::NotAGreenBase, [] {
    tensor_total(concentrated(constant(Z())), concentrated(constant(Z())), burnside(Z()));
  }));
}

TEST(Derived, ConstantZmod2Squared) {
  const MackeyComplex a = concentrated(constant(zmod(2)));
  const MackeyComplex t = resolve_and_derived_tensor(a, a, constant(Z()), 4);
  EXPECT_TRUE(Iso(homology(t, 0), constant(zmod(2))));
  EXPECT_TRUE(Iso(homology(t, 1), constant(zmod(2))));
  for (int n = t.lo; n <= std::min(t.hom_hi, t.hi() + 1); ++n) EXPECT_TRUE(is_finite(homology(t, n))) << n;
}

TEST(Derived, AlreadyFreeOverF3) {
  const MackeyComplex a = concentrated(constant(Zm(3)));
  const MackeyComplex t = resolve_and_derived_tensor(a, a, constant(Zm(3)), 3);
  EXPECT_TRUE(Iso(homology(t, 0), constant(Zm(3))));
  for (int n = 1; n <= std::min(t.hom_hi, t.hi() + 1); ++n) EXPECT_TRUE(IsZero(homology(t, n))) << n;
}

TEST(Derived, FixedPointMinusOneAgainstHandResolution) {
  // 0 -> Constant(Z) -> Induced(Z) -> FixedPoint(Z, -1) -> 0, boxed with
  // Constant(Z/2): Constant(Z/2) --diag--> Induced(Z/2). H_0 = <Z/2, 0>,
  // H_1 = 0.
  const MackeyComplex a = concentrated(fixed_point(FgModule::free(Z(), 1), Matrix{{-1}}));
  const MackeyComplex t = resolve_and_derived_tensor(a, concentrated(constant(zmod(2))), constant(Z()), 4);
  EXPECT_TRUE(Iso(homology(t, 0), e_only(zmod(2), Matrix{{1}})));
  for (int n = 1; n <= std::min(t.hom_hi, t.hi() + 1); ++n) EXPECT_TRUE(IsZero(homology(t, n))) << n;
}

TEST(Derived, Errors) {
  const MackeyComplex a = concentrated(constant(zmod(2)));
  EXPECT_TRUE(Raises(ErrorKind::LengthTooShort, [&] { free_resolution(a, 0); }));
  EXPECT_TRUE(Raises(ErrorKind::NotGreenModule, [] { free_resolution(concentrated(burnside(Z())), 2); }));
  EXPECT_TRUE(Raises(ErrorKind::NotAGreenBase, [&] { resolve_and_derived_tensor(a, a, burnside(Z()), 2); }));
}

TEST(Resolution, AugmentationIsQuasiIsomorphism) {
  for (const auto& m : {constant(zmod(4)), induced(zmod(3)), fixed_point(zmod(4), Matrix{{-1}})}) {
    const MackeyComplex a = concentrated(m);
    const FreeResolution r = free_resolution(a, 4);
    EXPECT_TRUE(is_chain_map(r.augmentation));
    EXPECT_TRUE(is_pseudo_coherent(r.complex));
    EXPECT_TRUE(Iso(homology(r.complex, 0), m));
    const int top = std::min(r.exact_through, r.complex.hi() + 1);
    for (int n = 1; n <= top; ++n) EXPECT_TRUE(IsZero(homology(r.complex, n))) << n;
  }
}

TEST(Tower, FpInputsStabilize) {
  for (long p : {2L, 3L, 5L}) {
    const PkTower t = mod_pk_tower(concentrated(constant(Zm(p))), Int(p), 3);
    EXPECT_TRUE(t.stable);
    EXPECT_EQ(t.stable_from, 1);
    for (const auto& e : t.entries) {
      EXPECT_TRUE(Iso(homology(e, 0), constant(Zm(p))));
      EXPECT_TRUE(Iso(homology(e, 1), constant(Zm(p))));
    }
  }
}

TEST(Tower, IntegersGiveZmodPk) {
  const PkTower t = mod_pk_tower(concentrated(constant(Z())), Int(3), 3);
  EXPECT_TRUE(Iso(homology(t.entries[0], 0), constant(zmod(3))));
  EXPECT_TRUE(Iso(homology(t.entries[2], 0), constant(zmod(27))));
  EXPECT_FALSE(t.stable);
  for (const auto& m : t.maps) EXPECT_TRUE(is_chain_map(m));
}

TEST(Tower, CoprimeVanishes) {
  const PkTower t = mod_pk_tower(concentrated(constant(zmod(5))), Int(3), 3);
  for (const auto& e : t.entries) EXPECT_TRUE(acyclic_in(e, e.lo, e.hi()));
}

TEST(Filtration, ConstantTower) {
  const MackeyComplex c = concentrated(constant(Z()));
  FiltrationTower t;
  t.stages = {c, zero_complex(Z())};
  t.maps = {ChainMap{t.stages[1], c, {}}};
  const TowerReport r = tower_gr_and_completeness(t, 0, 2);
  EXPECT_TRUE(same_homology(r.gr.at(0), c));
  EXPECT_TRUE(r.complete_in_window);
}

TEST(Filtration, ConnectivityTowerIsComplete) {
  const BaseRing r = Zm(3);
  std::vector<MackeyComplex> stages;
  for (int n = 0; n <= 3; ++n) {
    MackeyComplex s = zero_complex(r);
    for (int j = n; j <= 3; ++j) s = direct_sum(s, concentrated(constant(r), j));
    stages.push_back(s);
  }
  FiltrationTower t;
  t.stages = stages;
  for (int n = 0; n < 3; ++n) {
    // inclusion of the summands j >= n + 1
    const MackeyComplex& src = stages[static_cast<std::size_t>(n + 1)];
    const MackeyComplex& tgt = stages[static_cast<std::size_t>(n)];
    ChainMap f{src, tgt, {}};
    for (int d = src.lo; d <= src.hi(); ++d) {
      const MackeyFunctor s = src.term(d), g = tgt.term(d);
      f.comps.push_back(MackeyHom(s, g, Matrix::identity(g.me.gens()).block(0, 0, g.me.gens(), s.me.gens()),
                                  Matrix::identity(g.mfix.gens()).block(0, 0, g.mfix.gens(), s.mfix.gens())));
    }
    t.maps.push_back(f);
  }
  const TowerReport rep = tower_gr_and_completeness(t, 0, 2);
  EXPECT_TRUE(rep.complete_in_window);
  for (int n = 0; n <= 2; ++n) EXPECT_TRUE(Iso(homology(rep.gr.at(static_cast<std::size_t>(n)), n), constant(r))) << n;
}

TEST(Filtration, ConstantNonzeroTowerIsIncomplete) {
  const MackeyComplex c = concentrated(constant(Z()));
  FiltrationTower t;
  t.stages = {c, c, c};
  t.maps = {identity_map(c), identity_map(c)};
  EXPECT_FALSE(tower_gr_and_completeness(t, 0, 2).complete_in_window);
}

TEST(Filtration, NonNested) {
  const MackeyComplex c = concentrated(constant(Z()));
  FiltrationTower t;
  t.stages = {c, c, c};
  t.maps = {identity_map(c)};
  EXPECT_TRUE(Raises(ErrorKind::NonNestedTower, [&] { tower_gr_and_completeness(t, 0, 2); }));
}

TEST(HomalgProperty, SumsEvaluationsAndConservativity) {
  const auto cs = corpus::evenness_complexes();
  for (std::size_t i = 0; i + 1 < cs.size(); i += 2) {
    const MackeyComplex& a = cs[i].complex;
    const MackeyComplex& b = cs[i + 1].complex;
    if (a.base != b.base) continue;
    const MackeyComplex s = direct_sum(a, b);
    EXPECT_TRUE(dd_zero(s));
    for (int n = std::min(a.lo, b.lo); n <= std::max(a.hi(), b.hi()); ++n) {
      EXPECT_TRUE(Iso(homology_raw(s, n), direct_sum(homology_raw(a, n), homology_raw(b, n)))) << cs[i].name << " " << n;
    }
  }
  for (const auto& c : cs) {
    for (int n = c.complex.lo; n <= c.complex.hi(); ++n) {
      const MackeyFunctor h = homology_raw(c.complex, n);
      EXPECT_TRUE(isomorphic(h.me, e_homology(c.complex, n))) << c.name << " " << n;
      EXPECT_TRUE(isomorphic(h.mfix, fix_homology(c.complex, n))) << c.name << " " << n;
    }
    const bool pointwise = [&] {
      for (int n = c.complex.lo; n <= c.complex.hi(); ++n)
        if (!is_zero_module(e_homology(c.complex, n)) || !is_zero_module(fix_homology(c.complex, n))) return false;
      return true;
    }();
    EXPECT_EQ(acyclic_in(c.complex, c.complex.lo, c.complex.hi()), pointwise) << c.name;
    EXPECT_TRUE(is_pseudo_coherent(c.complex) || !c.complex.free_model) << c.name;
  }
}

TEST(HomalgProperty, ConeOfIdentityIsAcyclic) {
  for (const auto& c : corpus::evenness_complexes()) {
    const MackeyComplex k = cone(identity_map(c.complex));
    EXPECT_TRUE(acyclic_in(k, k.lo, k.hi())) << c.name;
  }
}
