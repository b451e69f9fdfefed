#pragma once

// Axiom-backed constructors over canonical qsets.

#include <functional>
#include <utility>

#include "qset/core.hpp"

namespace qset {

// A qset with exactly one element (quasi-cardinal 1).
class StrongSingleton {
 public:
  // Throws InvalidArgument unless qc(inner) == 1.
  explicit StrongSingleton(QSet inner);

  const QSet& inner() const { return inner_; }
  // Representative of the single element.
  Entity element() const;

 private:
  QSet inner_;
};

// Kuratowski encoding [[a], [a, b]], collapsing to [[a]] when a ≡ b.
class OrderedPair {
 public:
  OrderedPair(const Entity& first, const Entity& second);

  // Recovers a pair from its encoding; throws MalformedPair when q is not
  // of the form [[a], [a, b]] or [[a]].
  static OrderedPair decode(const QSet& q);

  const QSet& encoding() const { return encoding_; }
  const Entity& first() const { return first_; }
  const Entity& second() const { return second_; }
  bool collapsed() const { return encoding_.class_count() == 1; }

 private:
  OrderedPair(QSet encoding, Entity first, Entity second)
      : encoding_(std::move(encoding)), first_(std::move(first)), second_(std::move(second)) {}

  QSet encoding_;
  Entity first_;
  Entity second_;
};

// Separation predicates only see a class representative, so they cannot
// tell apart members of one ≡-class.
using ClassPredicate = std::function<bool(const Entity& representative)>;

// The sub-qset of universe holding every element ≡ x or ≡ y with its full
// count. Throws UniverseMiss when x or y has no ≡ element in universe.
QSet weak_pair(const Entity& x, const Entity& y, const QSet& universe);

// Context-free pair with one element per class: [x, y], or [x] if x ≡ y.
QSet strong_pair(const Entity& x, const Entity& y);

QSet separation(const QSet& x, const ClassPredicate& pred);

QSet set_union(const QSet& x, const QSet& y);

// Removes one element of s's class from x. Throws NotAMember if absent.
QSet difference(const QSet& x, const StrongSingleton& s);

// Splits off one element of x's first canonical class. Throws EmptyQset.
std::pair<StrongSingleton, QSet> strong_singleton_of(const QSet& x);

// Deterministic sub-qset of quasi-cardinal beta, filling classes in
// canonical order. Throws CardinalTooLarge when beta > qc(x).
QSet sub_qset_of_card(const QSet& x, Cardinal beta);

// 2^qc(x). Throws Overflow when qc(x) > 64.
Cardinal power_qc(const QSet& x);

// Number of sub-qsets the model can tell apart: a class of count c
// contributes c + 1 choices, each individual element contributes 2.
Cardinal distinguishable_subqsets(const QSet& x);

OrderedPair ordered_pair(const Entity& a, const Entity& b);

// Classwise y ⊆ x.
bool is_sub_qset(const QSet& y, const QSet& x);

}  // namespace qset
