#pragma once

// Attaching integer labels to indistinguishable m-atoms.
//
// The input is a finite weak singleton [x]: a pure qset whose elements
// all share one species. Each round takes a strong singleton x' out of
// [x], pairs it with the next label m, and stores <x', m> in the
// warehouse w, until [x] is empty. The stored pairs differ by their
// labels while their first coordinates stay indistinguishable.

#include <vector>

#include "qset/algebra.hpp"
#include "qset/core.hpp"

namespace qset {

struct LabelledWarehouse {
  // qset whose elements are the encodings of <x', m>.
  QSet w;
  // Number of pairs.
  Cardinal n;

  // The decoded pairs ordered by label (non-Nat labels sort last).
  std::vector<OrderedPair> pairs() const;
};

// Throws NotPure unless input is [] or a single-species pure qset.
LabelledWarehouse label(const QSet& input);

// (a) labels pairwise distinct, (b) first coordinates pairwise ≡,
// (c) distinct pairs pairwise not ≡. Throws MalformedPair when an element
// of w is not an ordered-pair encoding.
bool verify_weak_labelling(const LabelledWarehouse& w);

}  // namespace qset
