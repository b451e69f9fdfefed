#include "qset/error.hpp"

namespace qset {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IllFormedFormula: return "IllFormedFormula";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::CountZero: return "CountZero";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::UniverseMiss: return "UniverseMiss";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::EmptyQset: return "EmptyQset";
    case ErrorKind::CardinalTooLarge: return "CardinalTooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::MalformedPair: return "MalformedPair";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qset
