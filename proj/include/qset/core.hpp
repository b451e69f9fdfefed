#pragma once

// Entity kinds and the canonical quasi-set representation.
//
// A qset is stored as a canonical multiset: m-atom classes keyed by species
// with a count, classical M-atoms and natural labels as sorted sets, and
// nested qsets grouped into indistinguishability classes with a count.
// Individual m-atoms are never materialized; a class and its quasi-cardinal
// are all the model can observe about them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qset/cardinal.hpp"
#include "qset/error.hpp"

namespace qset {

// Deepest bracket nesting accepted anywhere in the model.
inline constexpr std::size_t kMaxDepth = 32;

class Species {
 public:
  explicit Species(std::string name);
  const std::string& name() const { return name_; }
  friend auto operator<=>(const Species&, const Species&) = default;

 private:
  std::string name_;
};

class MAtomId {
 public:
  explicit MAtomId(std::string name);
  const std::string& name() const { return name_; }
  friend auto operator<=>(const MAtomId&, const MAtomId&) = default;

 private:
  std::string name_;
};

struct NatLabel {
  std::uint64_t value = 0;
  friend auto operator<=>(const NatLabel&, const NatLabel&) = default;
};

// m-atom. No comparison operators; only its species is observable,
// through indist().
struct MicroAtom {
  Species species;
};

// M-atom: a classical urelement.
struct MacroAtom {
  MAtomId id;
};

class QSet;
struct NestedClass;

struct SpeciesClass {
  Species species;
  Cardinal count;
};

class QSet {
 public:
  struct Rep;

  QSet();

  std::span<const SpeciesClass> species_classes() const;
  std::span<const MAtomId> macro_atoms() const;
  std::span<const NatLabel> nat_labels() const;
  std::span<const NestedClass> nested_classes() const;

  Cardinal qc() const;
  // Bracket nesting: [] has depth 1, [[]] depth 2.
  std::size_t depth() const;
  bool empty() const;
  // No m-atom anywhere in the transitive closure.
  bool classical() const;
  // Number of indistinguishability classes among the elements.
  std::size_t class_count() const;

  // Structural equality of canonical forms.
  friend bool operator==(const QSet& a, const QSet& b);

 private:
  friend class QSetBuilder;
  explicit QSet(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

struct NestedClass {
  QSet set;
  // Canonical text of `set`; nested classes are ordered by it.
  std::string key;
  Cardinal count;
};

struct QSet::Rep {
  std::vector<SpeciesClass> species;
  std::vector<MAtomId> macros;
  std::vector<NatLabel> nats;
  std::vector<NestedClass> nested;
  Cardinal qc;
  std::size_t depth = 1;
  bool classical = true;
};

class Entity {
 public:
  enum class Kind { MicroAtom, MacroAtom, Nat, QSet };
  using Value = std::variant<MicroAtom, MacroAtom, NatLabel, QSet>;

  Entity(MicroAtom a) : value_(std::move(a)) {}   // NOLINT(google-explicit-constructor)
  Entity(MacroAtom a) : value_(std::move(a)) {}   // NOLINT(google-explicit-constructor)
  Entity(NatLabel n) : value_(n) {}               // NOLINT(google-explicit-constructor)
  Entity(QSet q) : value_(std::move(q)) {}        // NOLINT(google-explicit-constructor)

  static Entity m_atom(std::string species) { return MicroAtom{Species(std::move(species))}; }
  static Entity macro(std::string name) { return MacroAtom{MAtomId(std::move(name))}; }
  static Entity nat(std::uint64_t v) { return NatLabel{v}; }

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_m_atom() const { return kind() == Kind::MicroAtom; }
  bool is_qset() const { return kind() == Kind::QSet; }

  const MicroAtom* as_m_atom() const { return std::get_if<MicroAtom>(&value_); }
  const MacroAtom* as_macro() const { return std::get_if<MacroAtom>(&value_); }
  const NatLabel* as_nat() const { return std::get_if<NatLabel>(&value_); }
  const QSet* as_qset() const { return std::get_if<QSet>(&value_); }

  // 0 for atoms, otherwise the qset's bracket depth.
  std::size_t depth() const;

  const Value& value() const { return value_; }

 private:
  Value value_;
};

// Accumulates elements and produces a canonical QSet. Classes that are
// indistinguishable are merged by adding counts. M-atoms, labels and
// nested qsets that are sets have identity and never duplicate.
class QSetBuilder {
 public:
  QSetBuilder() = default;

  QSetBuilder& add(const Entity& e, Cardinal count = 1);
  QSetBuilder& add_species(const Species& s, Cardinal count = 1);
  QSetBuilder& add_macro(const MAtomId& id);
  QSetBuilder& add_nat(NatLabel n);
  QSetBuilder& add_nested(const QSet& q, Cardinal count = 1);
  // Adds every element of q with its full count.
  QSetBuilder& add_all(const QSet& q);

  // Throws DepthExceeded when the result would be deeper than kMaxDepth.
  QSet build() const;

 private:
  QSetBuilder& add_nested_keyed(const QSet& q, std::string key, Cardinal count);

  std::map<Species, Cardinal> species_;
  std::set<MAtomId> macros_;
  std::set<NatLabel> nats_;
  std::map<std::string, std::pair<QSet, Cardinal>> nested_;
};

// Canonical text of a qset or entity (see notation for the grammar).
std::string canonical_string(const QSet& q);
std::string canonical_string(const Entity& e);

Cardinal qc(const QSet& x);

// True iff no m-atom occurs in the transitive closure of x.
bool is_set(const Entity& x);
bool is_set(const QSet& x);

// Membership for entities that have identity. Throws IllFormedFormula
// for m-atoms, whose membership would require identity.
bool member(const Entity& z, const QSet& x);

// Top-level count of the species' m-atom class in x.
Cardinal member_species(const Species& s, const QSet& x);

}  // namespace qset
