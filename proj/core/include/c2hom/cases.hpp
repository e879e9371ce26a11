#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "c2hom/slices.hpp"

namespace c2hom {

/// A named verification case. Unset parameters take per-case defaults.
struct CaseSpec {
  std::string name;
  std::optional<BaseRing> ring;
  std::optional<int> d, wmax, nmax, k;
  std::optional<Int> p;
  std::optional<Interval> window;
};

struct CaseReport {
  std::string name;
  bool pass = false;
  bool golden_used = false;
  std::string computed;  // canonical JSON of the computed tables
  std::vector<std::string> diffs;
  std::string text;      // human-readable summary
};

struct CaseInfo {
  std::string name;
  std::string default_ring;
  std::string summary;
};
const std::vector<CaseInfo>& registered_cases();

/// UnknownCase for unregistered names, InvalidParams for bad parameters.
CaseReport run_case(const CaseSpec& spec);

/// Golden JSON tables compiled into the library, keyed by file stem.
const std::map<std::string, std::string>& golden_tables();

}  // namespace c2hom
