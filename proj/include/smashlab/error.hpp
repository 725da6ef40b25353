#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smashlab {

enum class ErrorKind {
  InvalidDescriptor,
  TypeMismatch,
  UnknownSubgroup,
  GroupMismatch,
  NotAnIdeal,
  UnsupportedCutCombination,
  InvalidModule,
  InvalidFlags,
  InvalidSpectrum,
  InfiniteSpectrum,
  UnknownPrime,
  InvalidChain,
  NotFlat,
  ParseError,
  DenominatorNotUnit,
  NotDivisible,
  DivisionByZero,
  DimensionMismatch,
  UnsupportedComponent,
  SigmaInPrime,
  InvariantViolation,
  UnboundName,
  NameInUse,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace smashlab
