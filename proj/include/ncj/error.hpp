#pragma once

#include <stdexcept>
#include <string>

namespace ncj {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  PoleAtPoint,
  UnboundVariable,
  Parse,
  SizeMismatch,
  AlgebraMismatch,
  NonHomogeneous,
  CharacteristicTwo,
  NotSupercommutative,
  FormDegenerate,
  FormNotSupersymmetric,
  StarNotCompatible,
  StarNotAnticommutative,
  AOdd,
  BracketNotPoisson,
  WrongDimension,
  NotDerivation,
  NotPoissonDerivation,
  ParityViolation,
  UnknownFamily,
  SearchTooLarge,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncj
