#pragma once

#include <string>
#include <string_view>

#include "c2hom/slices.hpp"

namespace c2hom {

/// Canonical JSON: object keys sorted, no insignificant whitespace unless
/// `indent` >= 0. Integers outside int64 are written as decimal strings.
std::string encode(const BaseRing& r, int indent = -1);
std::string encode(const FgModule& m, int indent = -1);
std::string encode(const MackeyFunctor& m, int indent = -1);
std::string encode(const MackeyHom& f, int indent = -1);
std::string encode(const MackeyComplex& c, int indent = -1);
std::string encode(const SliceTable& t, int indent = -1);

/// ParseError (with byte offset) on malformed JSON, SchemaError naming the
/// offending field otherwise.
BaseRing decode_base(std::string_view text);
FgModule decode_module(std::string_view text);
MackeyFunctor decode_functor(std::string_view text);
MackeyHom decode_hom(std::string_view text);
MackeyComplex decode_complex(std::string_view text);
SliceTable decode_slice_table(std::string_view text);

/// Ring names used on the command line: z, f2, f3, f5, z4, z9, or zN.
BaseRing parse_ring(std::string_view name);

/// One Lewis diagram per slice.
std::string render(const SliceTable& t);

}  // namespace c2hom
