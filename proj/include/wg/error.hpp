#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace wg {

enum class ErrorKind {
  InvalidArgument,
  RegularityViolation,
  Undersampled,
  InconsistentLift,
  NotClosed,
  NoGenericDirection,
  DegenerateTangency,
  InternalInconsistency,
  ClassMismatch,
  SynthesisFailure,
  Syntax,
  UnknownIdentifier,
};

const char* to_string(ErrorKind kind);

/// Error raised by every fallible operation in the library. `index` names the
/// offending sample (or byte offset for parse errors) when one exists.
class CurveError : public std::runtime_error {
 public:
  CurveError(ErrorKind kind, const std::string& what,
             std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace wg
