#include "corpus.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace th;

TEST(Box, ConstantZSquared) {
  EXPECT_TRUE(Iso(box(constant(Z()), constant(Z())), constant(Z())));
}

TEST(Box, BurnsideIsUnit) {
  for (const auto& n : corpus::finite_functors(15, 31)) EXPECT_TRUE(Iso(box(burnside(Z()), n.functor), n.functor)) << n.name;
  for (const auto& n : corpus::green_constructions()) {
    EXPECT_TRUE(Iso(box(burnside(n.functor.base()), n.functor), n.functor)) << n.name;
  }
}

TEST(Box, InducedF2Squared) {
  EXPECT_TRUE(Iso(box(induced(Zm(2)), induced(Zm(2))), induced(FgModule::free(Zm(2), 2))));
}

TEST(Box, BaseMismatchRaises) {
  EXPECT_TRUE(Raises(ErrorKind::BaseMismatch, [] { box(constant(Z()), constant(Zm(3))); }));
}

TEST(BoxOverGreen, Examples) {
  EXPECT_TRUE(Iso(box_over_green(constant(zmod(4)), constant(zmod(4)), constant(Z())), constant(zmod(4))));
  EXPECT_TRUE(Iso(box_over_green(induced(Zm(3)), constant(Zm(3)), constant(Zm(3))), induced(Zm(3))));
  const MackeyFunctor fp = fixed_point(FgModule::free(Zm(5), 1), Matrix{{-1}});
  EXPECT_TRUE(Iso(box_over_green(fp, constant(Zm(5)), constant(Zm(5))), fp));
}

TEST(BoxOverGreen, PointwiseTensorWithConstant) {
  // Constant(Z/m) over Constant(Z) acts by tensoring both levels with Z/m.
  for (const auto& n : corpus::finite_functors(10, 32)) {
    if (!validate(n.functor).green_module) continue;
    const MackeyFunctor out = box_over_green(n.functor, constant(zmod(2)), constant(Z()));
    EXPECT_TRUE(isomorphic(out.me, tensor(n.functor.me, zmod(2)))) << n.name;
    EXPECT_TRUE(isomorphic(out.mfix, tensor(n.functor.mfix, zmod(2)))) << n.name;
  }
}

TEST(BoxOverGreen, NotAGreenBase) {
  EXPECT_TRUE(Raises(ErrorKind::NotAGreenBase, [] { box_over_green(constant(Z()), constant(Z()), burnside(Z())); }));
}

TEST(BoxProperty, ClosedFormWithConstantFactor) {
  for (const auto& n : corpus::finite_functors(30, 33)) {
    for (long a : {0L, 2L, 3L, 4L}) {
      const MackeyFunctor b = box(n.functor, constant(a == 0 ? FgModule::free(Z(), 1) : zmod(a)));
      const auto want = oracle::box_with_constant(n.functor, a);
      EXPECT_EQ(oracle::library_invariants(b.me), want.e) << n.name << " A = Z/" << a;
      EXPECT_EQ(oracle::library_invariants(b.mfix), want.fix) << n.name << " A = Z/" << a;
    }
  }
}

TEST(BoxProperty, CommutativeAndClosedUnderAxioms) {
  const auto fs = corpus::finite_functors(12, 34, 16);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i; j < fs.size(); j += 3) {
      const MackeyFunctor ab = box(fs[i].functor, fs[j].functor), ba = box(fs[j].functor, fs[i].functor);
      EXPECT_TRUE(same_invariants(ab, ba)) << fs[i].name << " , " << fs[j].name;
      EXPECT_TRUE(oracle::brute_force_axioms(ab).mackey) << fs[i].name << " , " << fs[j].name;
    }
}

TEST(BoxProperty, Frobenius) {
  for (const auto& n : corpus::finite_functors(15, 35)) {
    for (const FgModule& m : {zmod(2), zmod(3)}) {
      const MackeyFunctor lhs = box(induced(m), n.functor);
      EXPECT_TRUE(Iso(lhs, induced(tensor(m, n.functor.me)))) << n.name;
    }
  }
}

TEST(BoxProperty, Associative) {
  const auto fs = corpus::finite_functors(9, 36, 8);
  for (std::size_t i = 0; i + 2 < fs.size(); i += 3) {
    const auto& a = fs[i].functor;
    const auto& b = fs[i + 1].functor;
    const auto& c = fs[i + 2].functor;
    EXPECT_TRUE(same_invariants(box(box(a, b), c), box(a, box(b, c))));
  }
}

TEST(MackeyQuotient, KillingTheUnitLeavesZero) {
  const MackeyQuotient q = mackey_quotient(constant(Z()), Matrix(1, 0), Matrix{{1}});
  EXPECT_TRUE(IsZero(q.functor));
}
