#pragma once

// Text notation for entities.
//
//   entity := qset | atom
//   qset   := '[' (elem (',' elem)*)? ']'
//   elem   := 'm:' ident ('*' nat)? | 'M:' ident | 'n:' nat | qset ('*' nat)?
//   atom   := 'm:' ident | 'M:' ident | 'n:' nat
//   ident  := [a-zA-Z][a-zA-Z0-9_]*
//   nat    := [0-9]+
//
// Whitespace is allowed between tokens. The printer emits the canonical
// form: m-atom classes by species, then M-atoms by name, then labels in
// ascending order, then nested classes by their own canonical text; a
// count suffix appears only when it is not 1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qset/core.hpp"

namespace qset {

// Parse tree, before canonicalization.
struct QsetExpr {
  enum class Kind { MAtom, Macro, Nat, QSet };

  Kind kind = Kind::QSet;
  std::string ident;         // MAtom, Macro
  std::uint64_t label = 0;   // Nat
  Cardinal count = 1;        // MAtom, QSet elements
  std::vector<QsetExpr> elements;
  std::size_t offset = 1;    // 1-based position of the first character
};

// Throws SyntaxError (with 1-based offset), CountZero, or DepthExceeded.
QsetExpr parse_expr(std::string_view text);

// Canonicalizes a parse tree.
Entity to_entity(const QsetExpr& expr);

Entity parse(std::string_view text);
std::string print_canonical(const Entity& x);

}  // namespace qset
