#include "qset/core.hpp"

#include <algorithm>

namespace qset {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

const std::shared_ptr<const QSet::Rep>& empty_rep() {
  static const auto rep = std::make_shared<const QSet::Rep>();
  return rep;
}

void append_count(std::string& out, Cardinal count) {
  if (count != 1) {
    out += '*';
    out += count.to_string();
  }
}

}  // namespace

Species::Species(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) throw Error(ErrorKind::InvalidArgument, "invalid species name '" + name_ + "'");
}

MAtomId::MAtomId(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) throw Error(ErrorKind::InvalidArgument, "invalid M-atom name '" + name_ + "'");
}

QSet::QSet() : rep_(empty_rep()) {}

std::span<const SpeciesClass> QSet::species_classes() const { return rep_->species; }
std::span<const MAtomId> QSet::macro_atoms() const { return rep_->macros; }
std::span<const NatLabel> QSet::nat_labels() const { return rep_->nats; }
std::span<const NestedClass> QSet::nested_classes() const { return rep_->nested; }

Cardinal QSet::qc() const { return rep_->qc; }
std::size_t QSet::depth() const { return rep_->depth; }
bool QSet::empty() const { return class_count() == 0; }
bool QSet::classical() const { return rep_->classical; }

std::size_t QSet::class_count() const {
  return rep_->species.size() + rep_->macros.size() + rep_->nats.size() + rep_->nested.size();
}

bool operator==(const QSet& a, const QSet& b) {
  if (a.rep_ == b.rep_) return true;
  const auto& x = *a.rep_;
  const auto& y = *b.rep_;
  if (x.qc != y.qc || x.species.size() != y.species.size() || x.macros != y.macros || x.nats != y.nats ||
      x.nested.size() != y.nested.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.species.size(); ++i) {
    if (x.species[i].species != y.species[i].species || x.species[i].count != y.species[i].count) return false;
  }
  for (std::size_t i = 0; i < x.nested.size(); ++i) {
    if (x.nested[i].count != y.nested[i].count || !(x.nested[i].set == y.nested[i].set)) return false;
  }
  return true;
}

std::size_t Entity::depth() const {
  const QSet* q = as_qset();
  return q ? q->depth() : 0;
}

QSetBuilder& QSetBuilder::add(const Entity& e, Cardinal count) {
  if (count.is_zero()) return *this;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MicroAtom>) {
          add_species(v.species, count);
        } else if constexpr (std::is_same_v<T, MacroAtom>) {
          add_macro(v.id);
        } else if constexpr (std::is_same_v<T, NatLabel>) {
          add_nat(v);
        } else {
          add_nested(v, count);
        }
      },
      e.value());
  return *this;
}

QSetBuilder& QSetBuilder::add_species(const Species& s, Cardinal count) {
  if (!count.is_zero()) species_[s] += count;
  return *this;
}

QSetBuilder& QSetBuilder::add_macro(const MAtomId& id) {
  macros_.insert(id);
  return *this;
}

QSetBuilder& QSetBuilder::add_nat(NatLabel n) {
  nats_.insert(n);
  return *this;
}

QSetBuilder& QSetBuilder::add_nested(const QSet& q, Cardinal count) {
  return add_nested_keyed(q, canonical_string(q), count);
}

QSetBuilder& QSetBuilder::add_nested_keyed(const QSet& q, std::string key, Cardinal count) {
  if (count.is_zero()) return *this;
  auto it = nested_.find(key);
  if (it == nested_.end()) {
    nested_.emplace(std::move(key), std::make_pair(q, q.classical() ? Cardinal(1) : count));
  } else if (!q.classical()) {
    it->second.second += count;
  }
  return *this;
}

QSetBuilder& QSetBuilder::add_all(const QSet& q) {
  for (const auto& c : q.species_classes()) add_species(c.species, c.count);
  for (const auto& m : q.macro_atoms()) add_macro(m);
  for (const auto& n : q.nat_labels()) add_nat(n);
  for (const auto& c : q.nested_classes()) add_nested_keyed(c.set, c.key, c.count);
  return *this;
}

QSet QSetBuilder::build() const {
  auto rep = std::make_shared<QSet::Rep>();
  Cardinal total;
  rep->species.reserve(species_.size());
  for (const auto& [s, c] : species_) {
    rep->species.push_back({s, c});
    total += c;
  }
  rep->macros.assign(macros_.begin(), macros_.end());
  rep->nats.assign(nats_.begin(), nats_.end());
  total += rep->macros.size();
  total += rep->nats.size();
  std::size_t depth = 1;
  bool classical = species_.empty();
  rep->nested.reserve(nested_.size());
  for (const auto& [key, entry] : nested_) {
    rep->nested.push_back({entry.first, key, entry.second});
    total += entry.second;
    depth = std::max(depth, entry.first.depth() + 1);
    classical = classical && entry.first.classical();
  }
  if (depth > kMaxDepth) {
    throw Error(ErrorKind::DepthExceeded,
                "qset nesting depth " + std::to_string(depth) + " exceeds " + std::to_string(kMaxDepth));
  }
  rep->qc = total;
  rep->depth = depth;
  rep->classical = classical;
  return QSet(std::move(rep));
}

std::string canonical_string(const QSet& q) {
  std::string out = "[";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ", ";
    first = false;
  };
  for (const auto& c : q.species_classes()) {
    sep();
    out += "m:";
    out += c.species.name();
    append_count(out, c.count);
  }
  for (const auto& m : q.macro_atoms()) {
    sep();
    out += "M:";
    out += m.name();
  }
  for (const auto& n : q.nat_labels()) {
    sep();
    out += "n:";
    out += std::to_string(n.value);
  }
  for (const auto& c : q.nested_classes()) {
    sep();
    out += c.key;
    append_count(out, c.count);
  }
  out += ']';
  return out;
}

std::string canonical_string(const Entity& e) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MicroAtom>) {
          return "m:" + v.species.name();
        } else if constexpr (std::is_same_v<T, MacroAtom>) {
          return "M:" + v.id.name();
        } else if constexpr (std::is_same_v<T, NatLabel>) {
          return "n:" + std::to_string(v.value);
        } else {
          return canonical_string(v);
        }
      },
      e.value());
}

Cardinal qc(const QSet& x) { return x.qc(); }

bool is_set(const QSet& x) { return x.classical(); }

bool is_set(const Entity& x) {
  if (x.is_m_atom()) return false;
  const QSet* q = x.as_qset();
  return q == nullptr || is_set(*q);
}

Cardinal member_species(const Species& s, const QSet& x) {
  auto classes = x.species_classes();
  auto it = std::lower_bound(classes.begin(), classes.end(), s,
                             [](const SpeciesClass& c, const Species& sp) { return c.species < sp; });
  if (it != classes.end() && it->species == s) return it->count;
  return 0;
}

}  // namespace qset
