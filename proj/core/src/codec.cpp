#include "c2hom/codec.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "c2hom/error.hpp"
#include "json_codec.hpp"

namespace c2hom {
namespace detail {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  fail(ErrorKind::SchemaError, (path.empty() ? "<root>" : path) + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

std::size_t count_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

int degree_key(const std::string& key, const std::string& path) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  schema(path, "key '" + key + "' is not an integer");
}

std::pair<int, int> interval_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    schema(path, "expected [lo, hi]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

json int_to_json(const Int& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(v.get_si());
  return json(v.get_str());
}

Int int_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                              [](unsigned char c) { return std::isdigit(c) != 0; }) &&
                    s != "-";
    if (ok) return Int(s);
  }
  schema(path, "expected an integer");
}

json to_json(const BaseRing& r) {
  if (!r.is_mod()) return json{{"kind", "Z"}};
  return json{{"kind", "Zmod"}, {"m", int_to_json(r.modulus())}};
}

BaseRing base_from_json(const json& j, const std::string& path) {
  const json& kind = field(j, "kind", path);
  if (kind == "Z") return BaseRing::integers();
  if (kind == "Zmod") {
    const Int m = int_from_json(field(j, "m", path), sub(path, "m"));
    if (m < 2) schema(sub(path, "m"), "modulus must be at least 2");
    return BaseRing::integers_mod(m);
  }
  schema(sub(path, "kind"), "expected \"Z\" or \"Zmod\"");
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of rows");
  if (j.size() != rows) schema(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) schema(rp, "expected a row array");
    if (j[r].size() != cols)
      schema(rp, "row length " + std::to_string(j[r].size()) + ", expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = int_from_json(j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

json to_json(const FgModule& m) {
  return json{{"base", to_json(m.base())}, {"gens", m.gens()}, {"rels", to_json(m.rels())}};
}

FgModule module_from_json(const json& j, const std::string& path) {
  const BaseRing base = base_from_json(field(j, "base", path), sub(path, "base"));
  const std::size_t gens = count_from_json(field(j, "gens", path), sub(path, "gens"));
  const json& rels = field(j, "rels", path);
  std::size_t cols = 0;
  if (rels.is_array() && !rels.empty() && rels[0].is_array()) cols = rels[0].size();
  return FgModule(base, gens, matrix_from_json(rels, gens, cols, sub(path, "rels")));
}

json to_json(const MackeyFunctor& m) {
  return json{{"me", to_json(m.me)},
              {"mfix", to_json(m.mfix)},
              {"res", to_json(m.res)},
              {"tr", to_json(m.tr)},
              {"w", to_json(m.w)}};
}

MackeyFunctor functor_from_json(const json& j, const std::string& path) {
  FgModule me = module_from_json(field(j, "me", path), sub(path, "me"));
  FgModule mfix = module_from_json(field(j, "mfix", path), sub(path, "mfix"));
  if (me.base() != mfix.base()) schema(sub(path, "mfix.base"), "differs from me.base");
  const std::size_t e = me.gens(), f = mfix.gens();
  Matrix res = matrix_from_json(field(j, "res", path), e, f, sub(path, "res"));
  Matrix tr = matrix_from_json(field(j, "tr", path), f, e, sub(path, "tr"));
  Matrix w = matrix_from_json(field(j, "w", path), e, e, sub(path, "w"));
  return MackeyFunctor(std::move(me), std::move(mfix), std::move(res), std::move(tr), std::move(w));
}

json to_json(const MackeyHom& f) {
  return json{{"source", to_json(f.source)},
              {"target", to_json(f.target)},
              {"fe", to_json(f.fe)},
              {"ffix", to_json(f.ffix)}};
}

MackeyHom hom_from_json(const json& j, const std::string& path) {
  MackeyFunctor s = functor_from_json(field(j, "source", path), sub(path, "source"));
  MackeyFunctor t = functor_from_json(field(j, "target", path), sub(path, "target"));
  Matrix fe = matrix_from_json(field(j, "fe", path), t.me.gens(), s.me.gens(), sub(path, "fe"));
  Matrix ffix = matrix_from_json(field(j, "ffix", path), t.mfix.gens(), s.mfix.gens(), sub(path, "ffix"));
  return MackeyHom(std::move(s), std::move(t), std::move(fe), std::move(ffix));
}

json to_json(const MackeyComplex& c) {
  json out;
  out["base"] = to_json(c.base);
  out["window"] = c.empty() ? json::array({0, -1}) : json::array({c.lo, c.hi()});
  json terms = json::object(), diffs = json::object();
  for (int n = c.lo; !c.empty() && n <= c.hi(); ++n) terms[std::to_string(n)] = to_json(c.term(n));
  for (int n = c.lo + 1; !c.empty() && n <= c.hi(); ++n) {
    const MackeyHom d = c.diff(n);
    diffs[std::to_string(n)] = json{{"fe", to_json(d.fe)}, {"ffix", to_json(d.ffix)}};
  }
  out["terms"] = std::move(terms);
  out["diffs"] = std::move(diffs);
  if (c.weight) out["weight"] = *c.weight;
  if (c.hom_hi < kUnbounded) out["hom_hi"] = c.hom_hi;
  if (c.slice_hi) out["slice_hi"] = *c.slice_hi;
  return out;
}

MackeyComplex complex_from_json(const json& j, const std::string& path) {
  const BaseRing base = base_from_json(field(j, "base", path), sub(path, "base"));
  auto [lo, hi] = interval_from_json(field(j, "window", path), sub(path, "window"));
  const json& terms = field(j, "terms", path);
  const json& diffs = field(j, "diffs", path);
  if (!terms.is_object()) schema(sub(path, "terms"), "expected an object keyed by degree");
  if (!diffs.is_object()) schema(sub(path, "diffs"), "expected an object keyed by degree");
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const int n = degree_key(it.key(), sub(path, "terms"));
    if (n < lo || n > hi) schema(sub(path, "terms." + it.key()), "outside the window");
  }
  std::vector<MackeyFunctor> ts;
  for (int n = lo; n <= hi; ++n) {
    const std::string key = std::to_string(n);
    if (!terms.contains(key)) schema(sub(path, "terms." + key), "missing");
    ts.push_back(functor_from_json(terms[key], sub(path, "terms." + key)));
  }
  std::vector<MackeyHom> ds;
  for (int n = lo + 1; n <= hi; ++n) {
    const std::string key = std::to_string(n);
    const std::string dp = sub(path, "diffs." + key);
    if (!diffs.contains(key)) schema(dp, "missing");
    const MackeyFunctor& s = ts[static_cast<std::size_t>(n - lo)];
    const MackeyFunctor& t = ts[static_cast<std::size_t>(n - lo - 1)];
    Matrix fe = matrix_from_json(field(diffs[key], "fe", dp), t.me.gens(), s.me.gens(), dp + ".fe");
    Matrix ffix = matrix_from_json(field(diffs[key], "ffix", dp), t.mfix.gens(), s.mfix.gens(), dp + ".ffix");
    ds.emplace_back(s, t, std::move(fe), std::move(ffix));
  }
  MackeyComplex c = ts.empty() ? zero_complex(base) : make_complex(base, lo, std::move(ts), std::move(ds));
  auto opt_int = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_integer()) schema(sub(path, key), "expected an integer");
    return j[key].get<int>();
  };
  c.weight = opt_int("weight");
  if (auto h = opt_int("hom_hi")) c.hom_hi = *h;
  c.slice_hi = opt_int("slice_hi");
  return c;
}

json to_json(const SliceTable& t) {
  json rho = json::object();
  for (const auto& [k, m] : t.rho) rho[std::to_string(k)] = to_json(m);
  return json{{"range", json::array({t.range.lo, t.range.hi})},
              {"rho", std::move(rho)},
              {"even", t.even},
              {"very_even", t.very_even}};
}

SliceTable slice_table_from_json(const json& j, const std::string& path) {
  SliceTable t;
  auto [lo, hi] = interval_from_json(field(j, "range", path), sub(path, "range"));
  t.range = {lo, hi};
  const json& rho = field(j, "rho", path);
  if (!rho.is_object()) schema(sub(path, "rho"), "expected an object keyed by slice index");
  for (auto it = rho.begin(); it != rho.end(); ++it) {
    const int n = degree_key(it.key(), sub(path, "rho"));
    if (n < lo || n > hi) schema(sub(path, "rho." + it.key()), "outside the range");
    t.rho.emplace(n, functor_from_json(it.value(), sub(path, "rho." + it.key())));
  }
  for (int n = lo; n <= hi; ++n)
    if (!t.rho.count(n)) schema(sub(path, "rho." + std::to_string(n)), "missing");
  const json& even = field(j, "even", path);
  const json& very = field(j, "very_even", path);
  if (!even.is_boolean()) schema(sub(path, "even"), "expected a boolean");
  if (!very.is_boolean()) schema(sub(path, "very_even"), "expected a boolean");
  t.even = even.get<bool>();
  t.very_even = very.get<bool>();
  return t;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace detail

namespace {
std::string dump(const detail::json& j, int indent) { return j.dump(indent); }
}  // namespace

std::string encode(const BaseRing& r, int indent) { return dump(detail::to_json(r), indent); }
std::string encode(const FgModule& m, int indent) { return dump(detail::to_json(m), indent); }
std::string encode(const MackeyFunctor& m, int indent) { return dump(detail::to_json(m), indent); }
std::string encode(const MackeyHom& f, int indent) { return dump(detail::to_json(f), indent); }
std::string encode(const MackeyComplex& c, int indent) { return dump(detail::to_json(c), indent); }
std::string encode(const SliceTable& t, int indent) { return dump(detail::to_json(t), indent); }

template <class F>
auto decode_with(std::string_view text, F&& from) {
  const detail::json j = detail::parse(text);
  try {
    return from(j, std::string());
  } catch (const detail::json::exception& e) {
    fail(ErrorKind::SchemaError, e.what());
  }
}

BaseRing decode_base(std::string_view text) { return decode_with(text, detail::base_from_json); }
FgModule decode_module(std::string_view text) { return decode_with(text, detail::module_from_json); }
MackeyFunctor decode_functor(std::string_view text) { return decode_with(text, detail::functor_from_json); }
MackeyHom decode_hom(std::string_view text) { return decode_with(text, detail::hom_from_json); }
MackeyComplex decode_complex(std::string_view text) { return decode_with(text, detail::complex_from_json); }
SliceTable decode_slice_table(std::string_view text) { return decode_with(text, detail::slice_table_from_json); }

BaseRing parse_ring(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "z") return BaseRing::integers();
  if (s.size() >= 2 && (s[0] == 'z' || s[0] == 'f') &&
      std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    const Int m(s.substr(1));
    if (s[0] == 'f' && mpz_probab_prime_p(m.get_mpz_t(), 25) == 0)
      fail(ErrorKind::InvalidParams, "ring '" + std::string(name) + "': F_n needs n prime");
    return BaseRing::integers_mod(m);
  }
  fail(ErrorKind::InvalidParams, "unknown ring '" + std::string(name) + "' (use z, f2, f3, f5, z4, z9, ...)");
}

std::string render(const SliceTable& t) {
  std::string out = "slice table on [" + std::to_string(t.range.lo) + ", " + std::to_string(t.range.hi) +
                    "]  even=" + (t.even ? "yes" : "no") + "  very_even=" + (t.very_even ? "yes" : "no") + "\n";
  for (const auto& [k, m] : t.rho) {
    out += "rho_" + std::to_string(k) + ":";
    if (is_zero_functor(m)) {
      out += " 0\n";
      continue;
    }
    out += "\n" + lewis_diagram(m) + "\n";
  }
  return out;
}

}  // namespace c2hom
