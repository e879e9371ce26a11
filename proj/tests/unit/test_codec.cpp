#include "c2hom/codec.hpp"
#include "helpers.hpp"

using namespace th;

TEST(Codec, ConstantZ) {
  const std::string s = encode(constant(Z()));
  EXPECT_EQ(s,
            R"({"me":{"base":{"kind":"Z"},"gens":1,"rels":[[]]},"mfix":{"base":{"kind":"Z"},"gens":1,"rels":[[]]},)"
            R"("res":[[1]],"tr":[[2]],"w":[[1]]})");
  EXPECT_TRUE(structurally_equal(decode_functor(s), constant(Z())));
}

TEST(Codec, RoundTrips) {
  for (const MackeyFunctor& m : {induced(Zm(3)), burnside(Z()), fixed_point(FgModule::free(Zm(5), 2), Matrix{{0, 1}, {1, 0}}),
                                 constant(FgModule::from_invariants(Z(), {Int(2), Int(0)}))}) {
    EXPECT_TRUE(structurally_equal(decode_functor(encode(m)), m)) << encode(m);
    EXPECT_EQ(encode(decode_functor(encode(m))), encode(m));
  }
  const FgModule big(Z(), 1, Matrix{{1}});
  Matrix rels(1, 1);
  rels(0, 0) = Int("1000000000000000000000000000007");
  const FgModule m(Z(), 1, rels);
  EXPECT_NE(encode(m).find("\"1000000000000000000000000000007\""), std::string::npos);
  EXPECT_EQ(encode(decode_module(encode(m))), encode(m));
  EXPECT_EQ(decode_base(encode(Zm(9))), Zm(9));

  const MackeyHom f(induced(Z()), constant(Z()), Matrix{{1, 1}}, Matrix{{2}});
  const MackeyHom g = decode_hom(encode(f));
  EXPECT_EQ(g.fe, f.fe);
  EXPECT_EQ(g.ffix, f.ffix);
}

TEST(Codec, ComplexRoundTrip) {
  const MackeyComplex c = thr_perfectoid_model(Zm(3), 2);
  const MackeyComplex d = decode_complex(encode(c));
  EXPECT_EQ(encode(d), encode(c));
  EXPECT_TRUE(same_homology(c, d));
  EXPECT_EQ(d.hom_hi, c.hom_hi);
  EXPECT_EQ(d.slice_hi, c.slice_hi);
}

TEST(Codec, PerfectoidSliceTableIsByteIdentical) {
  const SliceTable t = rho_table(thr_perfectoid_model(Zm(3), 4), {-2, 9});
  const std::string once = encode(t);
  const std::string twice = encode(decode_slice_table(once));
  EXPECT_EQ(once, twice);
  EXPECT_EQ(encode(rho_table(thr_perfectoid_model(Zm(3), 4), {-2, 9})), once);
  EXPECT_NE(render(t).find("rho_8"), std::string::npos);
}

TEST(Codec, MalformedMatrixRow) {
  const std::string bad =
      R"({"me":{"base":{"kind":"Z"},"gens":1,"rels":[[]]},"mfix":{"base":{"kind":"Z"},"gens":1,"rels":[[]]},)"
      R"("res":[[1, 2]],"tr":[[2]],"w":[[1]]})";
  try {
    decode_functor(bad);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
    EXPECT_NE(std::string(e.what()).find("res"), std::string::npos) << e.what();
  }
}

TEST(Codec, ParseErrorReportsPosition) {
  try {
    decode_functor(R"({"me": [1, 2,)");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("at byte"), std::string::npos) << e.what();
  }
}

TEST(Codec, SchemaErrors) {
  EXPECT_TRUE(Raises(ErrorKind::SchemaError, [] { decode_base(R"({"kind":"Q"})"); }));
  EXPECT_TRUE(Raises(ErrorKind::SchemaError, [] { decode_module(R"({"base":{"kind":"Z"},"gens":"x","rels":[]})"); }));
  EXPECT_TRUE(Raises(ErrorKind::SchemaError, [] { decode_functor("[]"); }));
}

TEST(Codec, ParseRing) {
  EXPECT_EQ(parse_ring("z"), Z());
  EXPECT_EQ(parse_ring("f5"), Zm(5));
  EXPECT_EQ(parse_ring("z9"), Zm(9));
  EXPECT_TRUE(Raises(ErrorKind::InvalidParams, [] { parse_ring("f4"); }));
  EXPECT_TRUE(Raises(ErrorKind::InvalidParams, [] { parse_ring("q"); }));
}
