#include "qset/labelling.hpp"

#include <algorithm>
#include <map>

#include "qset/relations.hpp"

namespace qset {

std::vector<OrderedPair> LabelledWarehouse::pairs() const {
  if (!w.species_classes().empty() || !w.macro_atoms().empty() || !w.nat_labels().empty()) {
    throw Error(ErrorKind::MalformedPair, "warehouse holds a non-pair element: " + canonical_string(w));
  }
  std::vector<OrderedPair> out;
  out.reserve(w.nested_classes().size());
  for (const auto& c : w.nested_classes()) {
    OrderedPair p = OrderedPair::decode(c.set);
    for (Cardinal i = 0; i < c.count; i += 1) out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const OrderedPair& a, const OrderedPair& b) {
    const NatLabel* la = a.second().as_nat();
    const NatLabel* lb = b.second().as_nat();
    if (la == nullptr || lb == nullptr) return la != nullptr && lb == nullptr;
    return *la < *lb;
  });
  return out;
}

LabelledWarehouse label(const QSet& input) {
  if (!input.macro_atoms().empty() || !input.nat_labels().empty() || !input.nested_classes().empty() ||
      input.species_classes().size() > 1) {
    throw Error(ErrorKind::NotPure, "labelling needs a finite weak singleton of m-atoms, got " + canonical_string(input));
  }

  std::uint64_t m = 0;
  QSetBuilder w;
  QSet remaining = input;
  // An empty input would reach the subtraction with nothing to remove;
  // it yields the empty warehouse instead.
  while (!remaining.empty()) {
    ++m;
    auto [x_prime, rest] = strong_singleton_of(remaining);
    remaining = std::move(rest);
    // w := w ∪ [<x', m>]
    w.add(ordered_pair(Entity(x_prime.inner()), Entity::nat(m)).encoding());
  }
  return {w.build(), m};
}

bool verify_weak_labelling(const LabelledWarehouse& warehouse) {
  std::vector<OrderedPair> pairs = warehouse.pairs();
  if (pairs.size() < 2) return true;

  // (a) labels are NatLabels and pairwise distinct; pairs() sorted them.
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].second().as_nat() == nullptr) return false;
    if (i > 0 && *pairs[i - 1].second().as_nat() == *pairs[i].second().as_nat()) return false;
  }

  // (b) ≡ is an equivalence, so comparing against one first coordinate
  // covers every pair.
  const Entity& first = pairs.front().first();
  for (const auto& p : pairs) {
    if (!indist(first, p.first())) return false;
  }

  // (c) Pairs in different canonical buckets are not ≡ (≡ on qsets
  // coincides with canonical equality); within a bucket compare directly.
  std::map<std::string, std::vector<const OrderedPair*>> buckets;
  for (const auto& p : pairs) buckets[canonical_string(p.encoding())].push_back(&p);
  for (const auto& [key, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (weak_ext_indist(members[i]->encoding(), members[j]->encoding())) return false;
      }
    }
  }
  return true;
}

}  // namespace qset
