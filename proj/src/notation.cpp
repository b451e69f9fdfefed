#include "qset/notation.hpp"

#include <stdexcept>

namespace qset {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QsetExpr parse_entity() {
    skip_ws();
    QsetExpr e = peek() == '[' ? parse_qset(1) : parse_atom(false);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_ + 1, what); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_ident() {
    skip_ws();
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    if (!alpha(peek())) fail("expected identifier");
    std::size_t start = pos_;
    while (alpha(peek()) || (peek() >= '0' && peek() <= '9') || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view parse_digits() {
    skip_ws();
    if (peek() < '0' || peek() > '9') fail("expected number");
    std::size_t start = pos_;
    while (peek() >= '0' && peek() <= '9') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Cardinal parse_count() {
    skip_ws();
    if (peek() != '*') return 1;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    Cardinal c;
    try {
      c = Cardinal::parse(parse_digits());
    } catch (const OverflowError&) {
      throw SyntaxError(at + 1, "count out of range");
    }
    if (c.is_zero()) {
      throw Error(ErrorKind::CountZero, "count zero at offset " + std::to_string(at + 1));
    }
    return c;
  }

  QsetExpr parse_atom(bool in_qset) {
    QsetExpr e;
    e.offset = pos_ + 1;
    char kind = peek();
    if ((kind != 'm' && kind != 'M' && kind != 'n') || pos_ + 1 >= text_.size() || text_[pos_ + 1] != ':') {
      fail("expected 'm:', 'M:', 'n:' or '['");
    }
    pos_ += 2;
    switch (kind) {
      case 'm':
        e.kind = QsetExpr::Kind::MAtom;
        e.ident = parse_ident();
        if (in_qset) e.count = parse_count();
        break;
      case 'M':
        e.kind = QsetExpr::Kind::Macro;
        e.ident = parse_ident();
        break;
      default: {
        e.kind = QsetExpr::Kind::Nat;
        skip_ws();
        std::size_t at = pos_;
        Cardinal v = Cardinal::parse(parse_digits());
        if (!v.fits_u64()) throw SyntaxError(at + 1, "label out of range");
        e.label = v.to_u64();
        break;
      }
    }
    return e;
  }

  QsetExpr parse_qset(std::size_t depth) {
    if (depth > kMaxDepth) {
      throw Error(ErrorKind::DepthExceeded, "nesting deeper than " + std::to_string(kMaxDepth) + " at offset " +
                                                std::to_string(pos_ + 1));
    }
    QsetExpr e;
    e.kind = QsetExpr::Kind::QSet;
    e.offset = pos_ + 1;
    expect('[');
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return e;
    }
    while (true) {
      skip_ws();
      if (peek() == '[') {
        QsetExpr nested = parse_qset(depth + 1);
        nested.count = parse_count();
        e.elements.push_back(std::move(nested));
      } else {
        e.elements.push_back(parse_atom(true));
      }
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        return e;
      }
      fail("expected ',' or ']'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QsetExpr parse_expr(std::string_view text) { return Parser(text).parse_entity(); }

Entity to_entity(const QsetExpr& expr) {
  switch (expr.kind) {
    case QsetExpr::Kind::MAtom:
      return Entity::m_atom(expr.ident);
    case QsetExpr::Kind::Macro:
      return Entity::macro(expr.ident);
    case QsetExpr::Kind::Nat:
      return Entity::nat(expr.label);
    case QsetExpr::Kind::QSet:
      break;
  }
  QSetBuilder b;
  for (const auto& el : expr.elements) b.add(to_entity(el), el.count);
  return b.build();
}

Entity parse(std::string_view text) { return to_entity(parse_expr(text)); }

std::string print_canonical(const Entity& x) { return canonical_string(x); }

}  // namespace qset
