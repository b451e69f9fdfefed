#pragma once

// Seeded entity generation and the executable axiom battery.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qset/algebra.hpp"
#include "qset/core.hpp"

namespace qset {

struct GenConfig {
  std::uint64_t seed = 42;
  std::size_t max_depth = 4;  // <= 4; 0 generates atoms only
  std::size_t max_width = 6;  // <= 6
  std::uint64_t max_count = 8;  // <= 8
  std::vector<std::string> species_pool = {"e", "p", "nu"};
  std::vector<std::string> matom_pool = {"A", "B", "C"};

  // Throws InvalidArgument when a bound is violated or a pool is empty.
  void validate() const;
};

// Deterministic stream of entities for one (config, stream index).
class Generator {
 public:
  Generator(const GenConfig& cfg, std::uint64_t stream);

  Entity entity();
  Entity entity(std::size_t depth);
  // A qset no deeper than `depth` brackets (depth >= 1).
  QSet qset(std::size_t depth);
  QSet qset() { return qset(cfg_.max_depth == 0 ? 1 : cfg_.max_depth); }
  Entity atom();
  Entity m_atom();
  // [m:s*c] for a random species and 0 <= c <= max_count.
  QSet pure_weak_singleton();
  // An independently built entity ≡ e: classes re-added in shuffled order
  // with counts split across several insertions.
  Entity indistinguishable_copy(const Entity& e);
  QSet indistinguishable_copy(const QSet& q);
  // Copy of q with one class dropped, incremented, or added.
  QSet perturb(const QSet& q);

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return uniform(1, den) <= num; }

 private:
  const GenConfig& cfg_;
  std::mt19937_64 rng_;
};

std::vector<Entity> generate(const GenConfig& cfg, std::size_t count);

// Operations the battery calls through, replaceable for mutation tests.
struct SuiteOps {
  std::function<QSet(const QSet&, const StrongSingleton&)> difference = [](const QSet& x, const StrongSingleton& s) {
    return qset::difference(x, s);
  };
};

struct Counterexample {
  std::uint64_t case_index = 0;
  std::uint64_t stream = 0;  // Generator stream that reproduces the case
  std::string input;         // shrunk input, canonical text
  std::string message;
};

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> first_failure;
};

struct SuiteReport {
  std::vector<PropertyResult> properties;

  std::uint64_t total_failures() const;
  // One line per property, then a totals line.
  std::string to_text() const;
};

// Names of the checks, in report order.
const std::vector<std::string>& property_names();

SuiteReport run_suite(const GenConfig& cfg, std::uint64_t cases, const SuiteOps& ops = {});

// Candidate one-step simplifications of an input: drop a class, halve a
// count, or shrink a nested class; labels are halved.
std::vector<std::vector<Entity>> shrink_candidates(const std::vector<Entity>& input);

}  // namespace qset
