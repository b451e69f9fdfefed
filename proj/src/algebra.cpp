#include "qset/algebra.hpp"

#include <algorithm>

#include "qset/relations.hpp"

namespace qset {

namespace {

// Count of the class of e in x (0 when absent). Nested classes match by ≡.
Cardinal class_count_of(const Entity& e, const QSet& x) {
  switch (e.kind()) {
    case Entity::Kind::MicroAtom:
      return member_species(e.as_m_atom()->species, x);
    case Entity::Kind::MacroAtom:
    case Entity::Kind::Nat:
      return member(e, x) ? 1 : 0;
    case Entity::Kind::QSet:
      for (const auto& c : x.nested_classes()) {
        if (weak_ext_indist(c.set, *e.as_qset())) return c.count;
      }
      return 0;
  }
  return 0;
}

}  // namespace

StrongSingleton::StrongSingleton(QSet inner) : inner_(std::move(inner)) {
  if (inner_.qc() != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "strong singleton needs quasi-cardinal 1, got " + inner_.qc().to_string());
  }
}

Entity StrongSingleton::element() const { return quotient(inner_).classes.front().representative; }

OrderedPair::OrderedPair(const Entity& first, const Entity& second)
    : encoding_(strong_pair(strong_pair(first, first), strong_pair(first, second))),
      first_(first),
      second_(second) {}

OrderedPair OrderedPair::decode(const QSet& q) {
  auto malformed = [&](const char* why) {
    return Error(ErrorKind::MalformedPair, "not an ordered pair " + canonical_string(q) + ": " + why);
  };
  if (!q.species_classes().empty() || !q.macro_atoms().empty() || !q.nat_labels().empty()) {
    throw malformed("top level must hold only qsets");
  }
  auto classes = q.nested_classes();
  if (classes.empty() || classes.size() > 2) throw malformed("expected one or two classes");
  for (const auto& c : classes) {
    if (c.count != 1) throw malformed("class with count other than 1");
  }
  if (classes.size() == 1) {
    if (classes[0].set.qc() != 1) throw malformed("collapsed pair must be [[a]]");
    Entity a = StrongSingleton(classes[0].set).element();
    return OrderedPair(q, a, a);
  }
  const NestedClass* single = nullptr;
  const NestedClass* both = nullptr;
  for (const auto& c : classes) {
    if (c.set.qc() == 1 && single == nullptr) {
      single = &c;
    } else if (c.set.qc() == 2 && c.set.class_count() == 2) {
      both = &c;
    }
  }
  if (single == nullptr || both == nullptr) throw malformed("expected [a] and [a, b]");
  Entity a = StrongSingleton(single->set).element();
  QuotientView inner = quotient(both->set);
  const Entity* b = nullptr;
  bool saw_a = false;
  for (const auto& c : inner.classes) {
    if (!saw_a && indist(c.representative, a)) {
      saw_a = true;
    } else {
      b = &c.representative;
    }
  }
  if (!saw_a || b == nullptr) throw malformed("[a] is not contained in [a, b]");
  return OrderedPair(q, a, *b);
}

QSet weak_pair(const Entity& x, const Entity& y, const QSet& universe) {
  QSetBuilder out;
  bool hit_x = false;
  bool hit_y = false;
  for (const auto& c : quotient(universe).classes) {
    bool ix = indist(c.representative, x);
    bool iy = indist(c.representative, y);
    hit_x = hit_x || ix;
    hit_y = hit_y || iy;
    if (ix || iy) out.add(c.representative, c.count);
  }
  if (!hit_x || !hit_y) {
    const Entity& missing = hit_x ? y : x;
    throw Error(ErrorKind::UniverseMiss,
                "no element of " + canonical_string(universe) + " is indistinguishable from " + canonical_string(missing));
  }
  return out.build();
}

QSet strong_pair(const Entity& x, const Entity& y) {
  QSetBuilder out;
  out.add(x, 1);
  if (!indist(x, y)) out.add(y, 1);
  return out.build();
}

QSet separation(const QSet& x, const ClassPredicate& pred) {
  QSetBuilder out;
  for (const auto& c : quotient(x).classes) {
    if (pred(c.representative)) out.add(c.representative, c.count);
  }
  return out.build();
}

QSet set_union(const QSet& x, const QSet& y) {
  QSetBuilder out;
  out.add_all(x).add_all(y);
  return out.build();
}

QSet difference(const QSet& x, const StrongSingleton& s) {
  Entity e = s.element();
  if (class_count_of(e, x).is_zero()) {
    throw Error(ErrorKind::NotAMember, "class of " + canonical_string(e) + " does not occur in " + canonical_string(x));
  }
  QSetBuilder out;
  bool removed = false;
  for (const auto& c : quotient(x).classes) {
    if (!removed && indist(c.representative, e)) {
      removed = true;
      out.add(c.representative, c.count - 1);
    } else {
      out.add(c.representative, c.count);
    }
  }
  return out.build();
}

std::pair<StrongSingleton, QSet> strong_singleton_of(const QSet& x) {
  if (x.qc().is_zero()) throw Error(ErrorKind::EmptyQset, "cannot take a strong singleton of []");
  const Entity first = quotient(x).classes.front().representative;
  StrongSingleton s(QSetBuilder().add(first, 1).build());
  QSet rest = difference(x, s);
  return {std::move(s), std::move(rest)};
}

QSet sub_qset_of_card(const QSet& x, Cardinal beta) {
  if (beta > x.qc()) {
    throw Error(ErrorKind::CardinalTooLarge,
                "no sub-qset of quasi-cardinal " + beta.to_string() + " in a qset of quasi-cardinal " + x.qc().to_string());
  }
  QSetBuilder out;
  Cardinal remaining = beta;
  for (const auto& c : quotient(x).classes) {
    if (remaining.is_zero()) break;
    Cardinal take = std::min(c.count, remaining);
    out.add(c.representative, take);
    remaining -= take;
  }
  return out.build();
}

Cardinal power_qc(const QSet& x) {
  if (x.qc() > 64) {
    throw OverflowError("2^qc with qc = " + x.qc().to_string() + " exceeds the exact range (qc > 64)");
  }
  return Cardinal::pow2(x.qc().to_u64());
}

Cardinal distinguishable_subqsets(const QSet& x) {
  Cardinal result = 1;
  for (const auto& c : x.species_classes()) result *= c.count + 1;
  for (const auto& c : x.nested_classes()) result *= c.count + 1;
  result *= Cardinal::pow2(x.macro_atoms().size() + x.nat_labels().size());
  return result;
}

OrderedPair ordered_pair(const Entity& a, const Entity& b) { return OrderedPair(a, b); }

bool is_sub_qset(const QSet& y, const QSet& x) {
  for (const auto& c : quotient(y).classes) {
    if (c.count > class_count_of(c.representative, x)) return false;
  }
  return true;
}

}  // namespace qset
