#include "c2hom/cases.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "c2hom/codec.hpp"
#include "c2hom/error.hpp"
#include "c2hom/models.hpp"
#include "json_codec.hpp"

namespace c2hom {
namespace {

using detail::json;

// Parameters after defaults are filled in.
struct Resolved {
  std::string name;
  BaseRing ring;
  int d = 0, wmax = 0, nmax = 0, k = 0;
  Int p = 0;
  Interval window;
  json params = json::object();  // the ones this case reads, for golden matching
};

struct Context {
  Resolved r;
  CaseReport report;
  json computed = json::object();

  void check(bool ok, const std::string& what) {
    if (!ok) report.diffs.push_back(what);
  }
  void line(const std::string& s) { report.text += "  " + s + "\n"; }
};

std::string ring_tag(const BaseRing& r) { return r.name(); }

std::size_t free_rank(const FgModule& m) {
  const Int freeval = m.base().modulus();
  std::size_t n = 0;
  for (const auto& d : invariant_factors(m))
    if (d == freeval) ++n;
  return n;
}

bool iso(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (!same_invariants(a, b)) return false;
  if (is_finite(a) && is_finite(b)) return find_isomorphism(a, b).has_value();
  return true;
}

std::string brief(const MackeyFunctor& m) { return is_zero_functor(m) ? "0" : summary(m); }

Int characteristic_prime(const BaseRing& r) {
  if (!r.is_mod()) return 0;
  Int n = r.modulus(), p = 2;
  while (p * p <= n && n % p != 0) ++p;
  return p * p > n ? n : p;
}

int need_nonneg(std::optional<int> v, int dflt, const char* what) {
  const int x = v.value_or(dflt);
  if (x < 0) fail(ErrorKind::InvalidParams, std::string(what) + " must be nonnegative");
  return x;
}

// ---- golden tables ------------------------------------------------------------

std::optional<json> golden_for(const Resolved& r) {
  auto it = golden_tables().find(r.name);
  if (it == golden_tables().end()) return std::nullopt;
  json g = detail::parse(it->second);
  if (parse_ring(g.at("ring").get<std::string>()) != r.ring) return std::nullopt;
  for (auto p = g.at("params").begin(); p != g.at("params").end(); ++p)
    if (!r.params.contains(p.key()) || r.params[p.key()] != p.value()) return std::nullopt;
  return g.at("expected");
}

// Compares {key: functor} objects by isomorphism; keys absent on one side are zero.
void compare_functor_maps(Context& cx, const json& expected, const json& computed, const std::string& label) {
  std::vector<std::string> keys;
  for (auto it = expected.begin(); it != expected.end(); ++it) keys.push_back(it.key());
  for (auto it = computed.begin(); it != computed.end(); ++it)
    if (!expected.contains(it.key())) keys.push_back(it.key());
  for (const auto& key : keys) {
    const MackeyFunctor zero = zero_functor(cx.r.ring);
    const MackeyFunctor e = expected.contains(key) ? detail::functor_from_json(expected[key], label + "." + key) : zero;
    const MackeyFunctor c = computed.contains(key) ? detail::functor_from_json(computed[key], label + "." + key) : zero;
    cx.check(iso(e, c), "golden " + label + "." + key + ": expected " + brief(e) + ", computed " + brief(c));
  }
}

// ---- cases --------------------------------------------------------------------

void perfectoid(Context& cx) {
  const Resolved& r = cx.r;
  const MackeyComplex model = thr_perfectoid_model(r.ring, r.nmax);
  const SliceTable t = rho_table(model, r.window);
  cx.computed["slices"] = detail::to_json(t);
  for (const auto& [k, m] : t.rho) {
    const bool expect_const = k % 2 == 0 && k >= 0 && k <= 2 * r.nmax;
    const MackeyFunctor want = expect_const ? constant(r.ring) : zero_functor(r.ring);
    cx.check(iso(m, want), "rho_" + std::to_string(k) + ": expected " + brief(want) + ", computed " + brief(m));
    cx.line("rho_" + std::to_string(k) + " = " + brief(m));
  }
  cx.check(t.even, "table is not even");
  cx.check(t.very_even, "table is not very even");
  cx.line(std::string("even: ") + (t.even ? "yes" : "no") + ", very even: " + (t.very_even ? "yes" : "no"));
  if (auto g = golden_for(r)) {
    cx.report.golden_used = true;
    compare_functor_maps(cx, g->at("rho"), cx.computed["slices"]["rho"], "rho");
    cx.check(g->at("even") == t.even && g->at("very_even") == t.very_even, "golden flags differ");
  }
}

void cofiber_u(Context& cx) {
  const Resolved& r = cx.r;
  const CofiberReport rep = cofiber_u_check(r.ring, r.nmax);
  json h = json::object();
  for (int n = rep.window.lo; n <= rep.window.hi; ++n) {
    const MackeyFunctor& m = rep.homology[static_cast<std::size_t>(n - rep.window.lo)];
    h[std::to_string(n)] = detail::to_json(m);
    cx.line("H_" + std::to_string(n) + "(cone u) = " + brief(m));
  }
  cx.computed["window"] = json::array({rep.window.lo, rep.window.hi});
  cx.computed["homology"] = h;
  cx.computed["matches_hr"] = rep.matches_hr;
  cx.line("guaranteed window [" + std::to_string(rep.window.lo) + ", " + std::to_string(rep.window.hi) + "]");
  cx.check(rep.matches_hr, "cone of u does not match Constant(R) in degree 0");
  if (auto g = golden_for(r)) {
    cx.report.golden_used = true;
    compare_functor_maps(cx, g->at("homology"), h, "homology");
  }
}

void hkr_poly(Context& cx) {
  const Resolved& r = cx.r;
  const WeightGradedComplex model = hr_polynomial(r.ring, r.d, r.wmax);
  json weights = json::object();
  for (const auto& [w, piece] : model.pieces) {
    json row;
    std::vector<std::size_t> ranks, mus;
    for (int n = 0; n <= r.d; ++n) {
      ranks.push_back(free_rank(e_homology(piece, n)));
      mus.push_back(mu(r.d, n, w).get_ui());
    }
    const auto parts = hr_polynomial_parts(r.ring, r.d, w);
    const SigmaFiltration sf = sigma_filtration(r.ring, parts);
    MackeyComplex sums = zero_complex(r.ring);
    for (const auto& [m, n] : parts) sums = direct_sum(sums, constant_sigma_sphere(m, n));
    const bool same = same_homology(piece, sums);
    row["e_ranks"] = ranks;
    row["mu"] = mus;
    row["filtration_ok"] = sf.all_match;
    row["matches_sigma_sum"] = same;
    weights[std::to_string(w)] = row;
    const std::string ws = "weight " + std::to_string(w);
    cx.check(ranks == mus, ws + ": e-level ranks differ from the Omega^n counts");
    cx.check(sf.all_match, ws + ": a graded piece of the sigma filtration is not Constant(R^mu)[n sigma]");
    cx.check(same, ws + ": homology differs from the sum of Constant(R^mu)[n sigma]");
    std::string rs;
    for (auto v : ranks) rs += (rs.empty() ? "" : ", ") + std::to_string(v);
    cx.line(ws + ": e-ranks (" + rs + ")" + (sf.all_match ? ", filtration ok" : ", filtration FAILED"));
  }
  cx.computed["weights"] = weights;
  if (auto g = golden_for(r)) {
    cx.report.golden_used = true;
    for (auto it = g->at("e_ranks").begin(); it != g->at("e_ranks").end(); ++it)
      cx.check(weights.contains(it.key()) && weights[it.key()]["e_ranks"] == it.value(),
               "golden e_ranks at weight " + it.key() + " differ");
  }
}

void sign_laurent(Context& cx) {
  const Resolved& r = cx.r;
  const int n = static_cast<int>(r.p.get_si());
  const LaurentModel m = hr_sign_laurent(r.ring, r.wmax, n);
  json sectors = json::object();
  for (const auto& [s, piece] : m.plain.pieces) {
    const MackeyFunctor h0 = homology_raw(piece, 0), h1 = homology_raw(piece, 1);
    const MackeyFunctor want = s == 0 ? constant(r.ring) : induced(r.ring);
    cx.check(iso(h0, want) && iso(h1, want), "sector " + std::to_string(s) + ": expected A + A[1]");
    sectors[std::to_string(s)] = json{{"H0", detail::to_json(h0)}, {"H1", detail::to_json(h1)},
                                      {"sigma_form_agrees", m.agrees.at(s)}};
    cx.line("sector " + std::to_string(s) + ": H0 = " + brief(h0) + ", H1 = " + brief(h1) +
            ", sigma form " + (m.agrees.at(s) ? "agrees" : "differs"));
  }
  cx.computed["sectors"] = sectors;
  cx.computed["two_invertible"] = m.two_invertible;
  cx.computed["obstruction"] = m.obstruction ? json(*m.obstruction) : json(nullptr);
  if (m.two_invertible) {
    for (const auto& [s, ok] : m.agrees) cx.check(ok, "sector " + std::to_string(s) + ": Omega-form disagrees");
  } else {
    cx.check(m.obstruction.has_value(), "2 is not invertible but no obstruction was reported");
    cx.line("obstruction: " + m.obstruction.value_or("none"));
  }

  // The power map on the weight basis of the degree-1 summands.
  const ChainMap& pm = *m.power_map;
  const MackeyHom d0 = pm.at(0), d1 = pm.at(1);
  cx.check(d0.fe == Matrix::identity(d0.fe.rows()) && d0.ffix == Matrix::identity(d0.ffix.rows()),
           "power map is not the identity on degree 0");
  auto index = [](int j) {  // weight j inside degree 1 of total(plain)
    const int s = std::abs(j);
    return s == 0 ? std::size_t{0} : static_cast<std::size_t>(2 * s - 1 + (j < 0 ? 1 : 0));
  };
  json targets = json::object();
  for (int j = -r.wmax; j <= r.wmax; ++j) {
    Matrix v(d1.fe.cols(), 1);
    v(index(j), 0) = 1;
    Matrix img = d1.fe * v;
    Matrix want(d1.fe.rows(), 1);
    const long nj = static_cast<long>(n) * j;
    if (std::abs(nj) <= r.wmax) want(index(static_cast<int>(nj)), 0) = 1;
    cx.check(img == want, "power map sends weight " + std::to_string(j) + " to the wrong place");
    targets[std::to_string(j)] = std::abs(nj) <= r.wmax ? json(nj) : json(nullptr);
  }
  cx.computed["power"] = n;
  cx.computed["power_targets"] = targets;
  cx.line("power map x -> x^" + std::to_string(n) + ": id on degree 0, weight j -> " + std::to_string(n) + "j on degree 1");
}

void conj_plane(Context& cx) {
  const Resolved& r = cx.r;
  const ConjPlaneModel m = hr_conjugation_plane(r.ring, r.wmax);
  json weights = json::object();
  for (const auto& [w, piece] : m.plain.pieces) {
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= 2; ++n) ranks.push_back(free_rank(e_homology(piece, n)));
    const std::vector<std::size_t> want = {static_cast<std::size_t>(w + 1), static_cast<std::size_t>(2 * w),
                                           static_cast<std::size_t>(std::max(w - 1, 0))};
    cx.check(ranks == want, "weight " + std::to_string(w) + ": e-level ranks differ from (w+1, 2w, w-1)");
    weights[std::to_string(w)] = json{{"e_ranks", ranks}, {"sigma_form_agrees", m.agrees.at(w)}};
    cx.line("weight " + std::to_string(w) + ": e-ranks (" + std::to_string(ranks[0]) + ", " + std::to_string(ranks[1]) +
            ", " + std::to_string(ranks[2]) + "), sigma form " + (m.agrees.at(w) ? "agrees" : "differs"));
  }
  cx.computed["weights"] = weights;
  cx.computed["two_invertible"] = m.two_invertible;
  cx.computed["obstruction"] = m.obstruction ? json(*m.obstruction) : json(nullptr);
  if (m.two_invertible) {
    for (const auto& [w, ok] : m.agrees) cx.check(ok, "weight " + std::to_string(w) + ": Omega-form disagrees");
  } else {
    cx.check(m.obstruction.has_value(), "2 is not invertible but no obstruction was reported");
    cx.line("obstruction: " + m.obstruction.value_or("none"));
  }
}

void sigma_shift_homology(Context& cx, bool odd_prime) {
  const Resolved& r = cx.r;
  if (odd_prime && !r.ring.two_invertible())
    fail(ErrorKind::InvalidParams, "sigma-shift-odd-prime needs 2 invertible in the ring");
  if (!odd_prime && r.ring.two_invertible())
    fail(ErrorKind::InvalidParams, "sigma-shift-two-torsion needs 2 not invertible in the ring");
  const MackeyComplex c = sigma_shift(from_perm(perm_unit(r.ring)), 1);
  json h = json::object();
  for (int n = -1; n <= 2; ++n) {
    const MackeyFunctor m = homology(c, n);
    if (!is_zero_functor(m)) h[std::to_string(n)] = detail::to_json(m);
    cx.line("H_" + std::to_string(n) + "(R[sigma]) = " + brief(m));
  }
  cx.computed["homology"] = h;
  const json none = json::object();
  auto at = [&](int n) {
    return h.contains(std::to_string(n)) ? detail::functor_from_json(h[std::to_string(n)], "homology")
                                         : zero_functor(r.ring);
  };
  if (odd_prime) {
    const MackeyFunctor fp = fixed_point(FgModule::free(r.ring, 1), Matrix{{-1}});
    cx.check(iso(at(1), fp), "H_1 is not FixedPoint(R, -1)");
    for (int n : {-1, 0, 2}) cx.check(is_zero_functor(at(n)), "H_" + std::to_string(n) + " is not zero");
  } else {
    const MackeyFunctor h0 = at(0);
    const FgModule r2 = FgModule::cyclic(r.ring, 2);
    cx.check(is_zero_module(h0.me), "H_0 has nonzero e-level");
    cx.check(isomorphic(h0.mfix, r2), "H_0 fixed level is not R/2R");
  }
  if (auto g = golden_for(r)) {
    cx.report.golden_used = true;
    compare_functor_maps(cx, g->at("homology"), h, "homology");
  }
}

void box_unit(Context& cx) {
  const Resolved& r = cx.r;
  const MackeyFunctor b = box(burnside(r.ring), constant(r.ring));
  cx.computed["box"] = detail::to_json(b);
  cx.check(iso(b, constant(r.ring)), "Burnside box Constant(R) is not Constant(R)");
  cx.line("Burnside [] Constant(" + r.ring.name() + ") = " + brief(b));
  if (auto g = golden_for(r)) {
    cx.report.golden_used = true;
    compare_functor_maps(cx, json{{"box", g->at("box")}}, json{{"box", cx.computed["box"]}}, "");
  }
}

void pk_tower(Context& cx) {
  const Resolved& r = cx.r;
  const PkTower t = mod_pk_tower(concentrated(constant(r.ring)), r.p, r.k);
  json entries = json::array();
  for (int k = 1; k <= r.k; ++k) {
    const MackeyComplex& e = t.entries[static_cast<std::size_t>(k - 1)];
    const MackeyFunctor h0 = homology_raw(e, 0), h1 = homology_raw(e, 1);
    entries.push_back(json{{"H0", detail::to_json(h0)}, {"H1", detail::to_json(h1)}});
    cx.line("k = " + std::to_string(k) + ": H0 = " + brief(h0) + ", H1 = " + brief(h1));
  }
  cx.computed["entries"] = entries;
  cx.computed["stable"] = t.stable;
  cx.computed["stable_from"] = t.stable_from;
  const Int gcd_ = r.ring.is_mod() ? Int(gcd(r.ring.modulus(), r.p)) : Int(0);
  if (!r.ring.is_mod()) {
    for (int k = 1; k <= r.k; ++k) {
      Int pk = 1;
      for (int i = 0; i < k; ++i) pk *= r.p;
      const MackeyFunctor h0 = homology_raw(t.entries[static_cast<std::size_t>(k - 1)], 0);
      cx.check(iso(h0, constant(FgModule::cyclic(r.ring, pk))), "k = " + std::to_string(k) + ": H0 is not Constant(Z/p^k)");
    }
  } else if (gcd_ == 1) {
    for (const auto& e : t.entries) cx.check(acyclic_in(e, e.lo, e.hi()), "coprime tower entry does not vanish");
  } else if (r.ring.modulus() == r.p) {
    cx.check(t.stable && t.stable_from == 1, "tower over F_p is not k-independent");
    for (const auto& e : t.entries) {
      cx.check(iso(homology_raw(e, 0), constant(r.ring)), "H0 is not Constant(R)");
      cx.check(iso(homology_raw(e, 1), constant(r.ring)), "H1 is not Constant(R)");
    }
  }
  cx.line(std::string("stable: ") + (t.stable ? "yes" : "no") + " from k = " + std::to_string(t.stable_from));
}

void derived_finite(Context& cx) {
  const Resolved& r = cx.r;
  if (!r.ring.is_mod()) fail(ErrorKind::InvalidParams, "derived-finite needs a finite ring Z/m");
  const BaseRing z = BaseRing::integers();
  const MackeyComplex a = concentrated(constant(FgModule::cyclic(z, r.ring.modulus())));
  const MackeyComplex t = resolve_and_derived_tensor(a, a, constant(z), r.k);
  json h = json::object();
  const int top = std::min(t.hom_hi, t.hi() + 1);
  for (int n = t.lo; n <= top; ++n) {
    const MackeyFunctor m = homology_raw(t, n);
    h[std::to_string(n)] = detail::to_json(m);
    cx.check(is_finite(m), "H_" + std::to_string(n) + " is infinite");
    cx.line("H_" + std::to_string(n) + " = " + brief(m));
  }
  cx.computed["homology"] = h;
  cx.computed["trusted_through"] = t.hom_hi >= kUnbounded ? json("all") : json(t.hom_hi);
}

struct Entry {
  CaseInfo info;
  std::function<void(Context&)> run;
  std::vector<std::string> params;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"perfectoid", "f3", "slice table of the free-algebra model sum_n R[n + n sigma]"}, perfectoid, {"nmax", "window"}},
      {{"cofiber-u", "f3", "cone of u: model[1 + sigma] -> model is Constant(R) in degree 0"}, cofiber_u, {"nmax"}},
      {{"hkr-poly", "f3", "HR of R[x_1..x_d] by weight: e-ranks and sigma filtration"}, hkr_poly, {"d", "wmax"}},
      {{"sign-laurent", "f3", "HR of R[x, 1/x], x -> 1/x: summands, Omega-form, power map"}, sign_laurent, {"wmax", "p"}},
      {{"conj-plane", "f3", "HR of R[a, b], a <-> b: summands and Omega-form"}, conj_plane, {"wmax"}},
      {{"sigma-shift-odd-prime", "f5", "Constant(R)[sigma] has H_1 = FixedPoint(R, -1) only"},
       [](Context& c) { sigma_shift_homology(c, true); }, {}},
      {{"sigma-shift-two-torsion", "z", "Constant(R)[sigma] has H_0 = <0, R/2>"},
       [](Context& c) { sigma_shift_homology(c, false); }, {}},
      {{"box-unit", "z", "Burnside box Constant(R) = Constant(R)"}, box_unit, {}},
      {{"pk-tower", "f3", "mod p^k tower of Constant(R)"}, pk_tower, {"p", "k"}},
      {{"derived-finite", "z4", "derived box of Constant(Z/m) with itself over Z is finite"}, derived_finite, {"k"}},
  };
  return r;
}

}  // namespace

const std::vector<CaseInfo>& registered_cases() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CaseReport run_case(const CaseSpec& spec) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.name == spec.name; });
  if (it == reg.end()) fail(ErrorKind::UnknownCase, "no case named '" + spec.name + "'");

  Context cx;
  Resolved& r = cx.r;
  r.name = spec.name;
  r.ring = spec.ring.value_or(parse_ring(it->info.default_ring));
  r.d = need_nonneg(spec.d, 2, "d");
  r.wmax = need_nonneg(spec.wmax, spec.name == "hkr-poly" ? 2 : 4, "wmax");
  r.nmax = need_nonneg(spec.nmax, 4, "nmax");
  r.k = need_nonneg(spec.k, spec.name == "derived-finite" ? 4 : 3, "k");
  if (r.k < 1) fail(ErrorKind::InvalidParams, "k must be at least 1");
  const Int chr = characteristic_prime(r.ring);
  r.p = spec.p.value_or(spec.name == "sign-laurent" ? (chr != 0 ? chr : Int(-1)) : (chr != 0 ? chr : Int(3)));
  if (spec.name != "sign-laurent" && mpz_probab_prime_p(r.p.get_mpz_t(), 25) == 0)
    fail(ErrorKind::InvalidParams, "p must be prime");
  if (spec.name == "sign-laurent" && r.p == 0) fail(ErrorKind::ZeroPowerMap, "power 0");
  // The truncated model is exact for slices up to 2 nmax + 1.
  r.window = spec.window.value_or(Interval{-2, 2 * r.nmax + 1});
  if (r.window.hi < r.window.lo) fail(ErrorKind::InvalidParams, "empty window");

  for (const auto& name : it->params) {
    if (name == "nmax") r.params["nmax"] = r.nmax;
    if (name == "d") r.params["d"] = r.d;
    if (name == "wmax") r.params["wmax"] = r.wmax;
    if (name == "k") r.params["k"] = r.k;
    if (name == "p") r.params["p"] = detail::int_to_json(r.p);
    if (name == "window") r.params["window"] = json::array({r.window.lo, r.window.hi});
  }

  cx.report.name = spec.name;
  it->run(cx);
  cx.report.pass = cx.report.diffs.empty();
  json payload{{"case", r.name}, {"ring", detail::to_json(r.ring)}, {"params", r.params}, {"tables", cx.computed}};
  cx.report.computed = payload.dump();
  std::ostringstream head;
  head << (cx.report.pass ? "PASS " : "FAIL ") << r.name << " [" << ring_tag(r.ring);
  for (auto p = r.params.begin(); p != r.params.end(); ++p) head << " " << p.key() << "=" << p.value().dump();
  head << "]" << (cx.report.golden_used ? " (golden)" : "") << "\n";
  cx.report.text = head.str() + cx.report.text;
  for (const auto& d : cx.report.diffs) cx.report.text += "  diff: " + d + "\n";
  return cx.report;
}

}  // namespace c2hom
