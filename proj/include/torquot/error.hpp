#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torquot {

enum class ErrorKind {
  RankMismatch,
  DependentBasis,
  NonPrimitiveSublattice,
  NotContained,
  InvalidFan,
  InvalidQuasifan,
  ConeNotInFan,
  WrongCodimension,
  NotStrictlyConvex,
  AmbiguousMaximalFace,
  MismatchedQuotient,
  NotEquivariant,
  NotAMapOfFans,
  EmptySystem,
  ParseError,
  InternalInvariantViolation,
};

std::string_view errorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Input problems map to CLI exit code 1, broken internal assertions to 2.
  bool isInternal() const noexcept {
    return kind_ == ErrorKind::InternalInvariantViolation || kind_ == ErrorKind::AmbiguousMaximalFace;
  }

 private:
  ErrorKind kind_;
};

// Raises InternalInvariantViolation when `condition` is false.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::InternalInvariantViolation, what);
}

}  // namespace torquot
