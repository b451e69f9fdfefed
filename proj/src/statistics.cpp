#include "qset/statistics.hpp"

#include <algorithm>

namespace qset {

namespace {

void require_states(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "at least one state is required (k >= 1)");
}

void fill(std::uint64_t remaining, std::size_t pos, bool exclusion, std::vector<std::uint64_t>& current,
          std::vector<OccupancyVector>& out) {
  if (pos + 1 == current.size()) {
    if (exclusion && remaining > 1) return;
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  std::uint64_t top = exclusion ? std::min<std::uint64_t>(remaining, 1) : remaining;
  for (std::uint64_t v = top + 1; v-- > 0;) {
    current[pos] = v;
    fill(remaining - v, pos + 1, exclusion, current, out);
  }
}

}  // namespace

const char* to_string(StatKind kind) {
  switch (kind) {
    case StatKind::BoseEinstein: return "be";
    case StatKind::FermiDirac: return "fd";
    case StatKind::MaxwellBoltzmann: return "mb";
  }
  return "?";
}

OccupancyVector::OccupancyVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw Error(ErrorKind::InvalidArgument, "occupancy vector needs k >= 1");
  for (auto c : counts_) {
    if (__builtin_add_overflow(n_, c, &n_)) throw OverflowError("occupancy total overflow");
  }
}

std::vector<OccupancyVector> enumerate_occupancies(std::uint64_t n, std::uint64_t k, bool exclusion) {
  require_states(k);
  if (n > kMaxEnumeration || k > kMaxEnumeration) {
    throw Error(ErrorKind::ScaleExceeded, "enumeration is limited to n, k <= " + std::to_string(kMaxEnumeration));
  }
  std::vector<OccupancyVector> out;
  if (exclusion && n > k) return out;
  std::vector<std::uint64_t> current(k, 0);
  fill(n, 0, exclusion, current, out);
  return out;
}

Cardinal microstate_count(std::uint64_t n, std::uint64_t k, StatKind kind) {
  require_states(k);
  switch (kind) {
    case StatKind::BoseEinstein:
      return binomial(Cardinal(n) + (k - 1), k - 1);
    case StatKind::FermiDirac:
      return binomial(k, n);
    case StatKind::MaxwellBoltzmann:
      return power(k, n);
  }
  return 0;
}

Cardinal mb_weight(const OccupancyVector& v) {
  // Product of binomials C(n_1 + ... + n_i, n_i).
  Cardinal result = 1;
  Cardinal prefix = 0;
  for (auto c : v.counts()) {
    prefix += c;
    result *= binomial(prefix, c);
  }
  return result;
}

Cardinal quasi_function_count(const QSet& source, std::uint64_t k) {
  if (!source.macro_atoms().empty() || !source.nat_labels().empty() || !source.nested_classes().empty() ||
      source.species_classes().size() > 1) {
    throw Error(ErrorKind::NotPure, "quasi-function source must be a pure single-species qset, got " +
                                        canonical_string(source));
  }
  // A quasi-function only fixes how many source elements land in each
  // state, so it is determined by an occupancy vector.
  return microstate_count(source.qc().to_u64(), k, StatKind::BoseEinstein);
}

std::vector<MAtomId> state_cells(const QSet& states) {
  if (!states.species_classes().empty() || !states.nat_labels().empty() || !states.nested_classes().empty()) {
    throw Error(ErrorKind::InvalidArgument, "states must be M-atoms, got " + canonical_string(states));
  }
  return {states.macro_atoms().begin(), states.macro_atoms().end()};
}

}  // namespace qset
