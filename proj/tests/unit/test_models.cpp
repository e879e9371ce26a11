#include "helpers.hpp"
#include "oracles.hpp"

using namespace th;

TEST(HrPolynomial, OneVariable) {
  for (const BaseRing& r : {Z(), Zm(2), Zm(3)}) {
    const WeightGradedComplex m = hr_polynomial(r, 1, 3);
    for (int w = 1; w <= 3; ++w) {
      const MackeyComplex want =
          direct_sum(concentrated(constant(r)), constant_sigma_sphere(FgModule::free(r, 1), 1));
      EXPECT_TRUE(same_homology(m.pieces.at(w), want)) << r.name() << " weight " << w;
    }
  }
}

TEST(HrPolynomial, TwoVariablesWeightTwo) {
  const MackeyComplex p = hr_polynomial(Zm(3), 2, 2).pieces.at(2);
  EXPECT_EQ(factors(e_homology(p, 0)), (std::vector<long>{3, 3, 3}));
  EXPECT_EQ(factors(e_homology(p, 1)), (std::vector<long>(4, 3)));
  EXPECT_EQ(factors(e_homology(p, 2)), (std::vector<long>{3}));
}

TEST(HrPolynomial, NoVariables) {
  const WeightGradedComplex m = hr_polynomial(Zm(3), 0, 2);
  EXPECT_TRUE(same_homology(m.pieces.at(0), concentrated(constant(Zm(3)))));
  for (const auto& [w, piece] : m.pieces)
    if (w > 0) EXPECT_TRUE(acyclic_in(piece, piece.lo, piece.hi())) << w;
}

TEST(HrPolynomial, MuMatchesEnumeration) {
  for (int d = 0; d <= 3; ++d)
    for (int n = 0; n <= d; ++n)
      for (int w = 0; w <= 4; ++w) EXPECT_EQ(mu(d, n, w).get_si(), oracle::omega_rank(d, n, w)) << d << n << w;
}

TEST(SignLaurent, SectorsAndSigmaFormOverF3) {
  const LaurentModel m = hr_sign_laurent(Zm(3), 2, 3);
  EXPECT_TRUE(m.two_invertible);
  EXPECT_FALSE(m.obstruction);
  const MackeyComplex& s0 = m.plain.pieces.at(0);
  EXPECT_TRUE(Iso(homology(s0, 0), constant(Zm(3))));
  EXPECT_TRUE(Iso(homology(s0, 1), constant(Zm(3))));
  // Weights 1 and -1 are swapped by the involution.
  const MackeyComplex& s1 = m.plain.pieces.at(1);
  EXPECT_TRUE(Iso(homology(s1, 0), induced(Zm(3))));
  EXPECT_TRUE(Iso(homology(s1, 1), induced(Zm(3))));
  for (const auto& [s, ok] : m.agrees) EXPECT_TRUE(ok) << s;
  EXPECT_TRUE(same_homology(m.sigma_form.pieces.at(1), s1));
}

TEST(SignLaurent, PowerMap) {
  const LaurentModel m = hr_sign_laurent(Zm(3), 3, 3);
  ASSERT_TRUE(m.power_map);
  EXPECT_TRUE(is_chain_map(*m.power_map));
  const MackeyHom d0 = m.power_map->at(0);
  EXPECT_EQ(d0.fe, Matrix::identity(d0.fe.rows()));
  EXPECT_EQ(m.power_targets.at(0), 0);
  EXPECT_EQ(m.power_targets.at(1), 3);
  EXPECT_EQ(m.power_targets.count(2) ? m.power_targets.at(2) : 6, 6);
  EXPECT_TRUE(Raises(ErrorKind::ZeroPowerMap, [] { hr_sign_laurent(Zm(3), 2, 0); }));
}

TEST(SignLaurent, ObstructionOverF2) {
  const LaurentModel m = hr_sign_laurent(Zm(2), 2);
  EXPECT_FALSE(m.two_invertible);
  EXPECT_TRUE(m.obstruction);
}

TEST(ConjPlane, WeightZero) {
  const ConjPlaneModel m = hr_conjugation_plane(Zm(3), 2);
  EXPECT_TRUE(same_homology(m.plain.pieces.at(0), concentrated(constant(Zm(3)))));
}

TEST(ConjPlane, WeightOneMiddleSummandOverF3) {
  const ConjPlaneModel m = hr_conjugation_plane(Zm(3), 2);
  const MackeyFunctor h1 = homology(m.plain.pieces.at(1), 1);
  EXPECT_EQ(factors(h1.me), (std::vector<long>{3, 3}));
  EXPECT_TRUE(Iso(h1, induced(Zm(3))));
  for (const auto& [w, ok] : m.agrees) EXPECT_TRUE(ok) << w;
}

TEST(ConjPlane, ObstructionOverF2) {
  const ConjPlaneModel m = hr_conjugation_plane(Zm(2), 2);
  EXPECT_FALSE(m.two_invertible);
  EXPECT_TRUE(m.obstruction);
  EXPECT_FALSE(m.agrees.at(2));
}

TEST(Perfectoid, F3UpToThree) {
  const SliceTable t = rho_table(thr_perfectoid_model(Zm(3), 3), {-1, 7});
  for (int k = -1; k <= 7; ++k) {
    if (k >= 0 && k % 2 == 0) {
      EXPECT_TRUE(Iso(t.rho.at(k), constant(Zm(3)))) << k;
    } else {
      EXPECT_TRUE(IsZero(t.rho.at(k))) << k;
    }
  }
  EXPECT_TRUE(t.very_even);
}

TEST(Perfectoid, OddSlicesVanishAtTwo) {
  const SliceTable t = rho_table(thr_perfectoid_model(Zm(2), 2), {-2, 5});
  for (int k : {-1, 1, 3, 5}) EXPECT_TRUE(IsZero(t.rho.at(k))) << k;
}

TEST(Perfectoid, NmaxZero) {
  const SliceTable t = rho_table(thr_perfectoid_model(Zm(5), 0), {-2, 1});
  EXPECT_TRUE(Iso(t.rho.at(0), constant(Zm(5))));
  for (int k : {-2, -1, 1}) EXPECT_TRUE(IsZero(t.rho.at(k))) << k;
}

TEST(Perfectoid, UnsupportedBase) {
  EXPECT_TRUE(Raises(ErrorKind::UnsupportedBase, [] { thr_perfectoid_model(Z(), 2); }));
  EXPECT_TRUE(Raises(ErrorKind::UnsupportedBase, [] { thr_perfectoid_model(Zm(6), 2); }));
  EXPECT_TRUE(Raises(ErrorKind::UnsupportedBase, [] { cofiber_u_check(Z(), 2); }));
  EXPECT_NO_THROW(thr_perfectoid_model(Zm(9), 1));
}

TEST(Perfectoid, ELevelHomology) {
  const MackeyComplex m = thr_perfectoid_model(Zm(3), 3);
  for (int k = 0; k <= 6; ++k) {
    if (k % 2 == 0) {
      EXPECT_EQ(factors(e_homology(m, k)), (std::vector<long>{3})) << k;
    } else {
      EXPECT_TRUE(is_zero_module(e_homology(m, k))) << k;
    }
  }
}

TEST(Perfectoid, TowerStabilizes) {
  const PkTower t = mod_pk_tower(thr_perfectoid_model(Zm(3), 2), Int(3), 3);
  EXPECT_TRUE(t.stable);
  EXPECT_EQ(t.stable_from, 1);
}

TEST(Cofiber, F3AndF2) {
  for (const BaseRing& r : {Zm(3), Zm(2)}) {
    const CofiberReport rep = cofiber_u_check(r, 4);
    EXPECT_TRUE(rep.matches_hr) << r.name();
    EXPECT_EQ(rep.window.lo, 0);
    EXPECT_EQ(rep.window.hi, 3);
    EXPECT_TRUE(Iso(rep.homology.at(0), constant(r)));
    for (std::size_t n = 1; n < rep.homology.size(); ++n) EXPECT_TRUE(IsZero(rep.homology[n])) << n;
    EXPECT_TRUE(is_chain_map(perfectoid_u(r, 4)));
  }
}

TEST(Cofiber, NmaxOneWindow) {
  const CofiberReport rep = cofiber_u_check(Zm(3), 1);
  EXPECT_EQ(rep.window.lo, 0);
  EXPECT_EQ(rep.window.hi, 0);
  EXPECT_EQ(rep.homology.size(), 1u);
}

TEST(ModelsProperty, HrPolynomialPiecesAreSigmaSums) {
  for (int d = 1; d <= 3; ++d) {
    const WeightGradedComplex m = hr_polynomial(Zm(3), d, 3);
    for (const auto& [w, piece] : m.pieces) {
      for (int n = 0; n <= d; ++n)
        EXPECT_EQ(static_cast<std::int64_t>(factors(e_homology(piece, n)).size()), oracle::omega_rank(d, n, w))
            << d << " " << w << " " << n;
      EXPECT_TRUE(sigma_filtration(Zm(3), hr_polynomial_parts(Zm(3), d, w)).all_match) << d << " " << w;
    }
  }
}
