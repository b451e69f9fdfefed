#pragma once

// Microstate counting for n particles over k distinguishable states.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qset/core.hpp"

namespace qset {

enum class StatKind { BoseEinstein, FermiDirac, MaxwellBoltzmann };

const char* to_string(StatKind kind);

// Per-state occupation numbers n_1..n_k.
class OccupancyVector {
 public:
  // Throws InvalidArgument when counts is empty.
  explicit OccupancyVector(std::vector<std::uint64_t> counts);

  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t n() const { return n_; }
  std::size_t k() const { return counts_.size(); }

  friend bool operator==(const OccupancyVector&, const OccupancyVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t n_ = 0;
};

// Enumeration bound on both n and k.
inline constexpr std::uint64_t kMaxEnumeration = 12;

// Every vector with sum n over k states, descending lexicographic order.
// With exclusion every entry is at most 1. Throws ScaleExceeded when n or
// k exceeds kMaxEnumeration and InvalidArgument when k == 0.
std::vector<OccupancyVector> enumerate_occupancies(std::uint64_t n, std::uint64_t k, bool exclusion);

// Closed forms: BE C(n+k-1, k-1), FD C(k, n), MB k^n.
Cardinal microstate_count(std::uint64_t n, std::uint64_t k, StatKind kind);

// Multinomial n! / (n_1! ... n_k!).
Cardinal mb_weight(const OccupancyVector& v);

// Quasi-functions from a pure single-species qset into k states. Throws
// NotPure otherwise.
Cardinal quasi_function_count(const QSet& source, std::uint64_t k);

// Maps a qset of M-atoms onto state cells 0..k-1 in canonical order.
// Throws InvalidArgument for anything that is not an M-atom.
std::vector<MAtomId> state_cells(const QSet& states);

}  // namespace qset
