#include "c2hom/error.hpp"

namespace c2hom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IllFormedHom: return "IllFormedHom";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::MissingArgument: return "MissingArgument";
    case ErrorKind::NotAnInvolution: return "NotAnInvolution";
    case ErrorKind::NotAGreenBase: return "NotAGreenBase";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NotGreenModule: return "NotGreenModule";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::LengthTooShort: return "LengthTooShort";
    case ErrorKind::NonNestedTower: return "NonNestedTower";
    case ErrorKind::NotSigmaSums: return "NotSigmaSums";
    case ErrorKind::ZeroPowerMap: return "ZeroPowerMap";
    case ErrorKind::UnsupportedBase: return "UnsupportedBase";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace c2hom
