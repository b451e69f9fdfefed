#pragma once

#include <vector>

#include "qset/core.hpp"

namespace qset {

struct QuotientClass {
  Entity representative;
  Cardinal count;
};

// x/≡: one entry per indistinguishability class, in canonical order
// (m-atom species, then M-atoms, then labels, then nested qsets).
struct QuotientView {
  std::vector<QuotientClass> classes;

  Cardinal total() const;
};

// ≡. m-atoms compare by species, M-atoms and labels by identity, qsets by
// weak extensionality. Entities of different kinds are never
// indistinguishable.
bool indist(const Entity& x, const Entity& y);

// =_E. Throws IllFormedFormula if either side is an m-atom.
bool ext_eq(const Entity& x, const Entity& y);

// Every element of x is ≡ every element of y (vacuous on empty qsets).
bool sim(const QSet& x, const QSet& y);
bool qsim(const QSet& x, const QSet& y);

QuotientView quotient(const QSet& x);

// Class-by-class matching of quotients with equal counts, in both
// directions. This is the qset branch of indist().
bool weak_ext_indist(const QSet& x, const QSet& y);

}  // namespace qset
