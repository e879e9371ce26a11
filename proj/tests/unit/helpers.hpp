#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "c2hom/error.hpp"
#include "c2hom/models.hpp"

namespace th {

using namespace c2hom;

inline BaseRing Z() { return BaseRing::integers(); }
inline BaseRing Zm(long m) { return BaseRing::integers_mod(Int(m)); }
inline FgModule zmod(long k) { return FgModule::cyclic(Z(), Int(k)); }

inline std::vector<long> factors(const FgModule& m) {
  std::vector<long> out;
  for (const auto& d : invariant_factors(m)) out.push_back(d.get_si());
  return out;
}

/// Same invariants, plus an explicit isomorphism when both are finite.
inline ::testing::AssertionResult Iso(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (!same_invariants(a, b))
    return ::testing::AssertionFailure() << summary(a) << " vs " << summary(b) << "\n"
                                         << invariant_tuple(a).str() << "\n" << invariant_tuple(b).str();
  if (is_finite(a) && is_finite(b) && !find_isomorphism(a, b))
    return ::testing::AssertionFailure() << "no isomorphism found: " << summary(a) << " vs " << summary(b);
  return ::testing::AssertionSuccess();
}

inline ::testing::AssertionResult IsZero(const MackeyFunctor& a) {
  if (is_zero_functor(a)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << summary(a);
}

template <class F>
::testing::AssertionResult Raises(ErrorKind kind, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == kind) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "raised " << e.what();
  }
  return ::testing::AssertionFailure() << "did not raise " << to_string(kind);
}

}  // namespace th
