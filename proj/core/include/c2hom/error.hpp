#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace c2hom {

enum class ErrorKind {
  IllFormedHom,
  BaseMismatch,
  MissingArgument,
  NotAnInvolution,
  NotAGreenBase,
  NotEquivariant,
  NotFinite,
  NotGreenModule,
  WindowTooSmall,
  LengthTooShort,
  NonNestedTower,
  NotSigmaSums,
  ZeroPowerMap,
  UnsupportedBase,
  UnknownCase,
  InvalidParams,
  ParseError,
  SchemaError,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the engine carries one of the ErrorKind tags so
/// callers (and the CLI exit-code logic) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace c2hom
