#include "qset/relations.hpp"

#include <algorithm>

namespace qset {

namespace {

// Every class of `from` has a partner in `to` with an indistinguishable
// representative and the same count.
bool classes_covered(const QuotientView& from, const QuotientView& to) {
  return std::all_of(from.classes.begin(), from.classes.end(), [&](const QuotientClass& a) {
    return std::any_of(to.classes.begin(), to.classes.end(), [&](const QuotientClass& b) {
      return a.count == b.count && indist(a.representative, b.representative);
    });
  });
}

}  // namespace

Cardinal QuotientView::total() const {
  Cardinal sum;
  for (const auto& c : classes) sum += c.count;
  return sum;
}

QuotientView quotient(const QSet& x) {
  QuotientView view;
  view.classes.reserve(x.class_count());
  for (const auto& c : x.species_classes()) view.classes.push_back({MicroAtom{c.species}, c.count});
  for (const auto& m : x.macro_atoms()) view.classes.push_back({MacroAtom{m}, 1});
  for (const auto& n : x.nat_labels()) view.classes.push_back({n, 1});
  for (const auto& c : x.nested_classes()) view.classes.push_back({c.set, c.count});
  return view;
}

bool weak_ext_indist(const QSet& x, const QSet& y) {
  if (x.class_count() != y.class_count() || x.qc() != y.qc()) {
    // Covering in both directions with equal counts forces both of these.
    return false;
  }
  if (x == y) return true;
  QuotientView qx = quotient(x);
  QuotientView qy = quotient(y);
  return classes_covered(qx, qy) && classes_covered(qy, qx);
}

bool indist(const Entity& x, const Entity& y) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Entity::Kind::MicroAtom:
      return x.as_m_atom()->species == y.as_m_atom()->species;
    case Entity::Kind::MacroAtom:
      return x.as_macro()->id == y.as_macro()->id;
    case Entity::Kind::Nat:
      return *x.as_nat() == *y.as_nat();
    case Entity::Kind::QSet:
      return weak_ext_indist(*x.as_qset(), *y.as_qset());
  }
  return false;
}

bool ext_eq(const Entity& x, const Entity& y) {
  if (x.is_m_atom() || y.is_m_atom()) {
    throw IllFormedFormula("ext_eq(" + canonical_string(x) + ", " + canonical_string(y) +
                           "): equality is not a formula for m-atoms");
  }
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Entity::Kind::MacroAtom:
      return x.as_macro()->id == y.as_macro()->id;
    case Entity::Kind::Nat:
      return *x.as_nat() == *y.as_nat();
    case Entity::Kind::QSet:
      return *x.as_qset() == *y.as_qset();
    case Entity::Kind::MicroAtom:
      break;
  }
  return false;
}

bool sim(const QSet& x, const QSet& y) {
  QuotientView qx = quotient(x);
  QuotientView qy = quotient(y);
  for (const auto& a : qx.classes) {
    for (const auto& b : qy.classes) {
      if (!indist(a.representative, b.representative)) return false;
    }
  }
  return true;
}

bool qsim(const QSet& x, const QSet& y) { return sim(x, y) && x.qc() == y.qc(); }

bool member(const Entity& z, const QSet& x) {
  switch (z.kind()) {
    case Entity::Kind::MicroAtom:
      throw IllFormedFormula("member(" + canonical_string(z) +
                             ", ...): membership of an individual m-atom requires identity; use member_species");
    case Entity::Kind::MacroAtom:
      return std::binary_search(x.macro_atoms().begin(), x.macro_atoms().end(), z.as_macro()->id);
    case Entity::Kind::Nat:
      return std::binary_search(x.nat_labels().begin(), x.nat_labels().end(), *z.as_nat());
    case Entity::Kind::QSet: {
      auto nested = x.nested_classes();
      return std::any_of(nested.begin(), nested.end(),
                         [&](const NestedClass& c) { return weak_ext_indist(c.set, *z.as_qset()); });
    }
  }
  return false;
}

}  // namespace qset
