#include "smashlab/error.hpp"

namespace smashlab {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnknownSubgroup: return "UnknownSubgroup";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::UnsupportedCutCombination: return "UnsupportedCutCombination";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::InvalidFlags: return "InvalidFlags";
    case ErrorKind::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorKind::InfiniteSpectrum: return "InfiniteSpectrum";
    case ErrorKind::UnknownPrime: return "UnknownPrime";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::NotFlat: return "NotFlat";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DenominatorNotUnit: return "DenominatorNotUnit";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnsupportedComponent: return "UnsupportedComponent";
    case ErrorKind::SigmaInPrime: return "SigmaInPrime";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::NameInUse: return "NameInUse";
  }
  return "Unknown";
}

}  // namespace smashlab
