#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qset {

enum class ErrorKind {
  IllFormedFormula,
  Syntax,
  CountZero,
  DepthExceeded,
  UniverseMiss,
  NotAMember,
  EmptyQset,
  CardinalTooLarge,
  Overflow,
  NotPure,
  MalformedPair,
  ScaleExceeded,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// All model errors derive from this; kind() drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised whenever a query would need identity on an m-atom.
class IllFormedFormula : public Error {
 public:
  explicit IllFormedFormula(const std::string& what)
      : Error(ErrorKind::IllFormedFormula, what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::Syntax, "syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  // 1-based character offset into the parsed text.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};

}  // namespace qset
