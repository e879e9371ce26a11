#include "c2hom/cases.hpp"
#include "c2hom/codec.hpp"
#include "helpers.hpp"

using namespace th;

TEST(Cases, AllDefaultsPass) {
  for (const auto& info : registered_cases()) {
    const CaseReport r = run_case(CaseSpec{info.name});
    EXPECT_TRUE(r.pass) << r.text;
  }
}

TEST(Cases, Examples) {
  CaseSpec p{"perfectoid"};
  p.ring = Zm(3);
  p.nmax = 4;
  const CaseReport rp = run_case(p);
  EXPECT_TRUE(rp.pass) << rp.text;
  EXPECT_TRUE(rp.golden_used);
  EXPECT_NE(rp.computed.find("\"very_even\":true"), std::string::npos);

  CaseSpec s{"sigma-shift-odd-prime"};
  s.ring = Zm(5);
  const CaseReport rs = run_case(s);
  EXPECT_TRUE(rs.pass) << rs.text;
  EXPECT_TRUE(rs.golden_used);

  CaseSpec b{"box-unit"};
  b.ring = Z();
  EXPECT_TRUE(run_case(b).pass);
}

TEST(Cases, GoldenSkippedForOtherParameters) {
  CaseSpec p{"perfectoid"};
  p.ring = Zm(5);
  p.nmax = 3;
  const CaseReport r = run_case(p);
  EXPECT_TRUE(r.pass) << r.text;
  EXPECT_FALSE(r.golden_used);
}

TEST(Cases, Deterministic) {
  CaseSpec p{"hkr-poly"};
  EXPECT_EQ(run_case(p).computed, run_case(p).computed);
}

TEST(Cases, Errors) {
  EXPECT_TRUE(Raises(ErrorKind::UnknownCase, [] { run_case(CaseSpec{"no-such-case"}); }));
  CaseSpec neg{"perfectoid"};
  neg.nmax = -1;
  EXPECT_TRUE(Raises(ErrorKind::InvalidParams, [&] { run_case(neg); }));
  CaseSpec np{"pk-tower"};
  np.p = Int(4);
  EXPECT_TRUE(Raises(ErrorKind::InvalidParams, [&] { run_case(np); }));
  CaseSpec win{"perfectoid"};
  win.window = Interval{3, 1};
  EXPECT_TRUE(Raises(ErrorKind::InvalidParams, [&] { run_case(win); }));
  CaseSpec odd{"sigma-shift-odd-prime"};
  odd.ring = Zm(2);
  EXPECT_TRUE(Raises(ErrorKind::InvalidParams, [&] { run_case(odd); }));
}

TEST(Cases, GoldenTablesAreEmbedded) {
  const auto& g = golden_tables();
  for (const char* name : {"perfectoid", "cofiber-u", "hkr-poly", "sigma-shift-odd-prime", "box-unit"})
    EXPECT_TRUE(g.count(name)) << name;
  for (const auto& [name, text] : g) {
    EXPECT_NE(text.find("\"_provenance\""), std::string::npos) << name;
  }
}
