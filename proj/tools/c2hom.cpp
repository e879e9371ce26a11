// c2hom: run the verification cases, or compute box/homology/rho on JSON input.
//
// Exit codes: 0 all selected cases pass, 1 some case differs, 2 invalid input.

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "c2hom/box.hpp"
#include "c2hom/cases.hpp"
#include "c2hom/codec.hpp"
#include "c2hom/error.hpp"

namespace {

using nlohmann::json;
using namespace c2hom;

constexpr int kPass = 0, kDiff = 1, kInvalid = 2;

Interval parse_window(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) fail(ErrorKind::InvalidParams, "window must look like LO..HI, got '" + s + "'");
  try {
    std::size_t a = 0, b = 0;
    const std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
    Interval w{std::stoi(lo, &a), std::stoi(hi, &b)};
    if (a != lo.size() || b != hi.size()) throw std::invalid_argument(s);
    return w;
  } catch (const std::logic_error&) {
    fail(ErrorKind::InvalidParams, "window must look like LO..HI, got '" + s + "'");
  }
}

Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) fail(ErrorKind::InvalidParams, "not an integer: '" + s + "'");
  return v;
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidParams, "cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

// Splits the top-level object of `text` into raw member texts, keeping the
// library decoders in charge of error messages.
std::map<std::string, std::string> members(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string(e.what()) + " (at byte " + std::to_string(e.byte) + ")");
  }
  if (!j.is_object()) fail(ErrorKind::SchemaError, "$: expected an object");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value().dump();
  return out;
}

const std::string& need(const std::map<std::string, std::string>& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) fail(ErrorKind::SchemaError, "$." + key + ": missing");
  return it->second;
}

struct VerifyOpts {
  std::vector<std::string> cases;
  std::string ring, p, window, format = "table";
  std::optional<int> d, wmax, nmax, k;
  bool list = false;
};

int verify(const VerifyOpts& o) {
  if (o.list) {
    for (const auto& c : registered_cases()) fmt::print("{:<26} {:<4} {}\n", c.name, c.default_ring, c.summary);
    return kPass;
  }
  if (o.cases.empty()) fail(ErrorKind::MissingArgument, "--case is required (or use --list)");
  std::vector<std::string> names;
  for (const auto& n : o.cases) {
    if (n == "all") {
      for (const auto& c : registered_cases()) names.push_back(c.name);
    } else {
      names.push_back(n);
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  std::vector<CaseSpec> specs;
  for (const auto& n : names) {
    CaseSpec s{n};
    if (!o.ring.empty()) s.ring = parse_ring(o.ring);
    s.d = o.d;
    s.wmax = o.wmax;
    s.nmax = o.nmax;
    s.k = o.k;
    if (!o.p.empty()) s.p = parse_int(o.p);
    if (!o.window.empty()) s.window = parse_window(o.window);
    specs.push_back(s);
  }

  // Cases are independent; results come back in name order.
  std::vector<std::future<CaseReport>> jobs;
  for (const auto& s : specs) jobs.push_back(std::async(std::launch::async, [s] { return run_case(s); }));
  std::vector<CaseReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());

  const bool all = std::all_of(reports.begin(), reports.end(), [](const CaseReport& r) { return r.pass; });
  if (o.format == "json") {
    json out{{"pass", all}, {"cases", json::array()}};
    for (const auto& r : reports)
      out["cases"].push_back(json{{"name", r.name},
                                  {"pass", r.pass},
                                  {"golden_used", r.golden_used},
                                  {"diffs", r.diffs},
                                  {"computed", json::parse(r.computed)}});
    fmt::print("{}\n", out.dump(2));
  } else {
    for (const auto& r : reports) fmt::print("{}", r.text);
    fmt::print("{} of {} cases pass\n",
               std::count_if(reports.begin(), reports.end(), [](const CaseReport& r) { return r.pass; }),
               reports.size());
  }
  return all ? kPass : kDiff;
}

int compute_box(const std::string& in, const std::string& format) {
  const auto m = members(read_input(in));
  const MackeyFunctor a = decode_functor(need(m, "left")), b = decode_functor(need(m, "right"));
  const MackeyFunctor out = m.count("over") ? box_over_green(a, b, decode_functor(m.at("over"))) : box(a, b);
  if (format == "json") {
    fmt::print("{}\n", encode(out));
  } else {
    fmt::print("{}\n", lewis_diagram(out));
  }
  return kPass;
}

int compute_homology(const std::string& in, int nsigma, const std::string& format) {
  const MackeyComplex c = decode_complex(read_input(in));
  const MackeyComplex s = nsigma == 0 ? c : sigma_shift(c, -nsigma);
  const int top = std::min(s.hi(), s.hom_hi);
  json out = json::object();
  for (int n = s.lo; n <= top; ++n) {
    const MackeyFunctor h = homology(c, n, nsigma);
    if (format == "json") {
      out[std::to_string(n)] = json::parse(encode(h));
    } else {
      fmt::print("H_{}{} = {}\n", n, nsigma == 0 ? "" : fmt::format("{:+}sigma", nsigma), summary(h));
    }
  }
  if (format == "json") fmt::print("{}\n", out.dump());
  return kPass;
}

int compute_rho(const std::string& in, const std::string& window, const std::string& format) {
  const MackeyComplex c = decode_complex(read_input(in));
  if (window.empty()) fail(ErrorKind::MissingArgument, "--window is required for rho");
  const SliceTable t = rho_table(c, parse_window(window));
  fmt::print("{}\n", format == "json" ? encode(t) : render(t));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C2-equivariant homological algebra: verification cases and direct computations"};
  app.require_subcommand(1);

  VerifyOpts vo;
  auto* verify_cmd = app.add_subcommand("verify", "Run named verification cases");
  verify_cmd->add_option("--case", vo.cases, "Case name, or 'all'; may repeat");
  verify_cmd->add_option("--ring", vo.ring, "z, f2, f3, f5, z4, z9, zN or fN");
  verify_cmd->add_option("--d", vo.d, "Number of polynomial variables");
  verify_cmd->add_option("--wmax", vo.wmax, "Largest weight");
  verify_cmd->add_option("--nmax", vo.nmax, "Largest summand of the free-algebra model");
  verify_cmd->add_option("--p", vo.p, "Prime (power for sign-laurent)");
  verify_cmd->add_option("--k", vo.k, "Tower height or resolution length");
  verify_cmd->add_option("--window", vo.window, "Slice window LO..HI");
  verify_cmd->add_option("--format", vo.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  verify_cmd->add_flag("--list", vo.list, "List registered cases");

  std::string in, window, format = "json";
  int nsigma = 0;
  auto* compute_cmd = app.add_subcommand("compute", "Compute on JSON input");
  compute_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--in", in, "Input file (default: stdin)");
    c->add_option("--format", format, "json or table")->check(CLI::IsMember({"table", "json"}));
  };
  auto* box_cmd = compute_cmd->add_subcommand("box", "Box product of {\"left\", \"right\"[, \"over\"]}");
  add_common(box_cmd);
  auto* hom_cmd = compute_cmd->add_subcommand("homology", "Mackey homology of a complex");
  add_common(hom_cmd);
  hom_cmd->add_option("--sigma", nsigma, "Report H_{m + n sigma} for this n");
  auto* rho_cmd = compute_cmd->add_subcommand("rho", "Slice table of a complex");
  add_common(rho_cmd);
  rho_cmd->add_option("--window", window, "Slice window LO..HI");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInvalid;
  }

  try {
    if (verify_cmd->parsed()) return verify(vo);
    if (box_cmd->parsed()) return compute_box(in, format);
    if (hom_cmd->parsed()) return compute_homology(in, nsigma, format);
    if (rho_cmd->parsed()) return compute_rho(in, window, format);
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kInvalid;
  }
  return kInvalid;
}
