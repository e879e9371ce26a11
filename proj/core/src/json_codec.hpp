#pragma once

// Internal: nlohmann-based conversions shared by the codec and the case runner.

#include <string>

#include <json.hpp>

#include "c2hom/slices.hpp"

namespace c2hom::detail {

using json = nlohmann::json;

json int_to_json(const Int& v);
json to_json(const BaseRing& r);
json to_json(const Matrix& m);
json to_json(const FgModule& m);
json to_json(const MackeyFunctor& m);
json to_json(const MackeyHom& f);
json to_json(const MackeyComplex& c);
json to_json(const SliceTable& t);

// `path` names the field in SchemaError messages.
Int int_from_json(const json& j, const std::string& path);
BaseRing base_from_json(const json& j, const std::string& path);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path);
FgModule module_from_json(const json& j, const std::string& path);
MackeyFunctor functor_from_json(const json& j, const std::string& path);
MackeyHom hom_from_json(const json& j, const std::string& path);
MackeyComplex complex_from_json(const json& j, const std::string& path);
SliceTable slice_table_from_json(const json& j, const std::string& path);

json parse(std::string_view text);

}  // namespace c2hom::detail
