#include "qset/axiom_suite.hpp"

#include <algorithm>
#include <sstream>

#include "qset/labelling.hpp"
#include "qset/notation.hpp"
#include "qset/relations.hpp"
#include "qset/statistics.hpp"

namespace qset {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Input = std::vector<Entity>;
using Outcome = std::optional<std::string>;

struct Property {
  const char* name;
  std::function<Input(Generator&)> generate;
  std::function<Outcome(const Input&, const SuiteOps&)> check;
};

std::string show(const Input& input) {
  std::string out;
  for (const auto& e : input) {
    if (!out.empty()) out += " ; ";
    out += canonical_string(e);
  }
  return out;
}

// Runs f and reports whether it threw an Error of the given kind.
template <typename F>
bool throws_kind(F&& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

// Count of the class of e in x, matched by ≡.
Cardinal count_in(const Entity& e, const QSet& x) {
  for (const auto& c : quotient(x).classes) {
    if (indist(c.representative, e)) return c.count;
  }
  return 0;
}

Outcome check_equiv(const Input& pop, const SuiteOps&) {
  const std::size_t n = pop.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = indist(pop[i], pop[j]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i][i]) return "not reflexive at " + canonical_string(pop[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i]) return "not symmetric: " + canonical_string(pop[i]) + " vs " + canonical_string(pop[j]);
      if (!rel[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j][k] && !rel[i][k]) {
          return "not transitive through " + canonical_string(pop[j]);
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_illformed(const Input& in, const SuiteOps&) {
  const Entity& a = in[0];
  const Entity& e = in[1];
  if (!a.is_m_atom()) return std::nullopt;
  auto ill = ErrorKind::IllFormedFormula;
  if (!throws_kind([&] { ext_eq(a, e); }, ill)) return "ext_eq(m-atom, x) did not raise IllFormedFormula";
  if (!throws_kind([&] { ext_eq(e, a); }, ill)) return "ext_eq(x, m-atom) did not raise IllFormedFormula";
  if (!throws_kind([&] { ext_eq(a, a); }, ill)) return "ext_eq(m-atom, m-atom) did not raise IllFormedFormula";
  if (const QSet* x = in[2].as_qset()) {
    if (!throws_kind([&] { member(a, *x); }, ill)) return "member(m-atom, x) did not raise IllFormedFormula";
  }
  if (!e.is_m_atom() && !ext_eq(e, e)) return "ext_eq not reflexive on a non-m-atom";
  return std::nullopt;
}

Outcome check_ext2indist(const Input& in, const SuiteOps&) {
  const Entity& a = in[0];
  const Entity& b = in[1];
  if (a.is_m_atom() || b.is_m_atom()) return std::nullopt;
  if (ext_eq(a, b) && !indist(a, b)) return "ext_eq holds but indist does not";
  if (!ext_eq(a, a) || !indist(a, a)) return "identity fails on a single entity";
  return std::nullopt;
}

Outcome check_weakpair(const Input& in, const SuiteOps&) {
  const QSet* universe = in[0].as_qset();
  if (universe == nullptr) return std::nullopt;
  const Entity& x = in[1];
  const Entity& y = in[2];
  bool has_x = !count_in(x, *universe).is_zero();
  bool has_y = !count_in(y, *universe).is_zero();
  QSet z;
  try {
    z = weak_pair(x, y, *universe);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UniverseMiss && (!has_x || !has_y)) return std::nullopt;
    throw;
  }
  if (!has_x || !has_y) return "expected UniverseMiss";
  for (const auto& c : quotient(z).classes) {
    if (!indist(c.representative, x) && !indist(c.representative, y)) {
      return "element " + canonical_string(c.representative) + " is neither ≡ x nor ≡ y";
    }
  }
  for (const auto& c : quotient(*universe).classes) {
    if (indist(c.representative, x) || indist(c.representative, y)) {
      if (count_in(c.representative, z) != c.count) {
        return "class " + canonical_string(c.representative) + " not included with its full count";
      }
    }
  }
  if (!is_sub_qset(z, *universe)) return "weak pair is not a sub-qset of the universe";
  return std::nullopt;
}

ClassPredicate menu_predicate(std::uint64_t which, const Entity& probe) {
  switch (which % 7) {
    case 0: return [](const Entity&) { return true; };
    case 1: return [](const Entity&) { return false; };
    case 2: return [](const Entity& r) { return r.is_m_atom(); };
    case 3: return [](const Entity& r) { return r.is_qset(); };
    case 4: return [](const Entity& r) { return r.as_macro() != nullptr || r.as_nat() != nullptr; };
    case 5: return [probe](const Entity& r) { return indist(r, probe); };
    default: return [](const Entity& r) { return is_set(r); };
  }
}

Outcome check_sep(const Input& in, const SuiteOps&) {
  const QSet* x = in[0].as_qset();
  const NatLabel* which = in[1].as_nat();
  if (x == nullptr || which == nullptr) return std::nullopt;
  ClassPredicate pred = menu_predicate(which->value, in[2]);
  QSet out = separation(*x, pred);
  if (!is_sub_qset(out, *x)) return "separation result is not a sub-qset";
  for (const auto& c : quotient(*x).classes) {
    Cardinal kept = count_in(c.representative, out);
    Cardinal expected = pred(c.representative) ? c.count : Cardinal(0);
    if (kept != expected) {
      return "class " + canonical_string(c.representative) + " kept " + kept.to_string() + ", expected " +
             expected.to_string();
    }
  }
  return std::nullopt;
}

Outcome check_qcunique(const Input& in, const SuiteOps&) {
  const QSet* x = in[0].as_qset();
  if (x == nullptr) return std::nullopt;
  if (!qc(QSet{}).is_zero()) return "qc([]) != 0";
  Cardinal a = qc(*x);
  if (a != qc(*x)) return "qc not single-valued";
  if (a != quotient(*x).total()) return "qc differs from the sum of class counts";
  const QSet* reparsed = parse(print_canonical(*x)).as_qset();
  if (reparsed == nullptr || qc(*reparsed) != a) return "qc changes across print/parse";
  if (is_set(*x) && a != x->class_count()) return "qc of a set differs from its classical cardinality";
  return std::nullopt;
}

Outcome check_subqc(const Input& in, const SuiteOps&) {
  const QSet* x = in[0].as_qset();
  if (x == nullptr) return std::nullopt;
  std::uint64_t n = x->qc().to_u64();
  for (std::uint64_t beta = 0; beta <= n; ++beta) {
    QSet y = sub_qset_of_card(*x, beta);
    if (y.qc() != beta) return "sub_qset_of_card(x, " + std::to_string(beta) + ") has qc " + y.qc().to_string();
    if (!is_sub_qset(y, *x)) return "sub_qset_of_card(x, " + std::to_string(beta) + ") is not a sub-qset";
  }
  if (!throws_kind([&] { sub_qset_of_card(*x, n + 1); }, ErrorKind::CardinalTooLarge)) {
    return "beta > qc(x) did not raise CardinalTooLarge";
  }
  return std::nullopt;
}

Outcome check_powqc(const Input& in, const SuiteOps&) {
  const QSet* x = in[0].as_qset();
  if (x == nullptr) return std::nullopt;
  if (x->qc() > 64) {
    if (!throws_kind([&] { power_qc(*x); }, ErrorKind::Overflow)) return "qc > 64 did not raise Overflow";
    return std::nullopt;
  }
  Cardinal expected = 1;
  for (std::uint64_t i = 0; i < x->qc().to_u64(); ++i) expected += expected;
  Cardinal p = power_qc(*x);
  if (p != expected) return "power_qc = " + p.to_string() + ", expected " + expected.to_string();
  Cardinal d = distinguishable_subqsets(*x);
  if (d > p) return "distinguishable_subqsets exceeds 2^qc";
  auto classes = quotient(*x).classes;
  bool all_single = std::all_of(classes.begin(), classes.end(), [](const QuotientClass& c) { return c.count == 1; });
  if ((d == p) != all_single) return "equality with 2^qc does not match all-counts-one";
  return std::nullopt;
}

// QSim between the quotient classes viewed as qsets, as the axiom states.
bool quotients_match(const QSet& x, const QSet& y) {
  auto as_classes = [](const QSet& q) {
    std::vector<QSet> out;
    for (const auto& c : quotient(q).classes) out.push_back(QSetBuilder().add(c.representative, c.count).build());
    return out;
  };
  auto xs = as_classes(x);
  auto ys = as_classes(y);
  auto covered = [](const std::vector<QSet>& from, const std::vector<QSet>& to) {
    return std::all_of(from.begin(), from.end(), [&](const QSet& z) {
      return std::any_of(to.begin(), to.end(), [&](const QSet& t) { return qsim(z, t); });
    });
  };
  return covered(xs, ys) && covered(ys, xs);
}

Outcome check_wext(const Input& in, const SuiteOps&) {
  const QSet* x = in[0].as_qset();
  const QSet* y = in[1].as_qset();
  if (x == nullptr || y == nullptr) return std::nullopt;
  bool matched = quotients_match(*x, *y);
  bool ind = indist(*x, *y);
  if (matched && !ind) return "quotients match but indist fails";
  if (ind && !matched) return "indist holds but quotients do not match";
  if (weak_ext_indist(*x, *y) != ind) return "weak_ext_indist disagrees with indist";
  if ((*x == *y) != ind) return "canonical equality disagrees with indist";
  return std::nullopt;
}

Outcome check_pairsym(const Input& in, const SuiteOps&) {
  const Entity& a = in[0];
  const Entity& b = in[1];
  OrderedPair ab = ordered_pair(a, b);
  OrderedPair back = OrderedPair::decode(ab.encoding());
  if (!indist(back.first(), a) || !indist(back.second(), b)) return "decode does not recover the coordinates";
  if (!indist(a, b)) {
    if (ab.collapsed()) return "pair of distinguishable entities collapsed";
    return std::nullopt;
  }
  QSet collapsed = strong_pair(strong_pair(a, a), strong_pair(a, a));
  if (!ext_eq(ab.encoding(), collapsed)) return "ordered_pair(a, b) is not [[a]]";
  if (!indist(ab.encoding(), ordered_pair(b, a).encoding())) return "ordered_pair(a, b) not ≡ ordered_pair(b, a)";
  return std::nullopt;
}

Outcome check_labelpost(const Input& in, const SuiteOps& ops) {
  const QSet* x = in[0].as_qset();
  if (x == nullptr) return std::nullopt;
  if (!x->macro_atoms().empty() || !x->nat_labels().empty() || !x->nested_classes().empty() ||
      x->species_classes().size() > 1) {
    return std::nullopt;
  }
  const std::uint64_t n = x->qc().to_u64();

  // Replay the extraction loop through ops.difference.
  QSet remaining = *x;
  QSetBuilder extracted;
  std::uint64_t rounds = 0;
  while (!remaining.empty() && rounds <= n) {
    StrongSingleton s(QSetBuilder().add(quotient(remaining).classes.front().representative).build());
    QSet next = ops.difference(remaining, s);
    if (next.qc() + 1 != remaining.qc()) {
      return "conservation: difference removed " + (remaining.qc() - std::min(next.qc(), remaining.qc())).to_string() +
             " elements instead of 1 (remainder " + canonical_string(next) + ")";
    }
    extracted.add_all(s.inner());
    remaining = std::move(next);
    ++rounds;
  }
  if (rounds != n) return "termination: " + std::to_string(rounds) + " rounds for qc " + std::to_string(n);
  if (!indist(extracted.build(), *x)) return "conservation: extracted singletons do not recombine to the input";

  LabelledWarehouse w = label(*x);
  if (w.n != n || w.w.qc() != n) return "warehouse size differs from qc(input)";
  if (!verify_weak_labelling(w)) return "weak labelling postcondition fails";
  auto pairs = w.pairs();
  for (std::uint64_t i = 0; i < pairs.size(); ++i) {
    const NatLabel* l = pairs[i].second().as_nat();
    if (l == nullptr || l->value != i + 1) return "labels are not exactly 1..n";
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!indist(pairs[i].first(), pairs[j].first())) return "first coordinates distinguishable";
      if (indist(pairs[i].encoding(), pairs[j].encoding())) return "two labelled pairs are indistinguishable";
    }
  }
  return std::nullopt;
}

Outcome check_stats(const Input& in, const SuiteOps&) {
  const NatLabel* pn = in[0].as_nat();
  const NatLabel* pk = in[1].as_nat();
  if (pn == nullptr || pk == nullptr) return std::nullopt;
  const std::uint64_t n = pn->value;
  const std::uint64_t k = pk->value;
  if (n < 1 || k < 1 || n > 8 || k > 8) return std::nullopt;

  // Pascal's triangle, independent of the closed-form binomial.
  std::vector<std::vector<Cardinal>> pascal(n + k + 1);
  for (std::size_t r = 0; r < pascal.size(); ++r) {
    pascal[r].assign(r + 1, 1);
    for (std::size_t c = 1; c < r; ++c) pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
  }
  auto choose = [&](std::uint64_t r, std::uint64_t c) { return c > r ? Cardinal(0) : pascal[r][c]; };

  auto be_vectors = enumerate_occupancies(n, k, false);
  auto fd_vectors = enumerate_occupancies(n, k, true);
  Cardinal be = microstate_count(n, k, StatKind::BoseEinstein);
  Cardinal fd = microstate_count(n, k, StatKind::FermiDirac);
  Cardinal mb = microstate_count(n, k, StatKind::MaxwellBoltzmann);
  if (be != choose(n + k - 1, k - 1) || be != be_vectors.size()) return "BE count mismatch";
  if (fd != choose(k, n) || fd != fd_vectors.size()) return "FD count mismatch";
  Cardinal weights;
  for (const auto& v : be_vectors) weights += mb_weight(v);
  Cardinal k_pow_n = 1;
  for (std::uint64_t i = 0; i < n; ++i) k_pow_n *= k;
  if (weights != k_pow_n || mb != k_pow_n) return "multinomial weights do not sum to k^n";
  QSet source = QSetBuilder().add(Entity::m_atom("e"), n).build();
  if (quasi_function_count(source, k) != be) return "quasi_function_count differs from BE count";
  if (!(fd <= be && be <= mb)) return "FD <= BE <= MB fails";
  return std::nullopt;
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {"EQUIV",
       [](Generator& g) {
         Input pop;
         Entity base = g.entity();
         pop.push_back(base);
         pop.push_back(g.indistinguishable_copy(base));
         Entity other = g.entity();
         pop.push_back(other);
         pop.push_back(g.indistinguishable_copy(other));
         if (const QSet* q = base.as_qset()) pop.push_back(g.perturb(*q));
         Entity a = g.m_atom();
         pop.push_back(a);
         pop.push_back(g.indistinguishable_copy(a));
         pop.push_back(g.entity());
         return pop;
       },
       check_equiv},
      {"ILLFORMED", [](Generator& g) { return Input{g.m_atom(), g.entity(), g.qset()}; }, check_illformed},
      {"EXT2INDIST",
       [](Generator& g) {
         Entity a = g.entity();
         if (a.is_m_atom()) a = g.qset();
         Entity b = g.chance(1, 2) ? g.indistinguishable_copy(a) : Entity(g.qset());
         return Input{a, b};
       },
       check_ext2indist},
      {"WEAKPAIR",
       [](Generator& g) {
         QSet u = g.qset();
         auto pick = [&]() -> Entity {
           auto classes = quotient(u).classes;
           if (classes.empty() || g.chance(1, 5)) return g.entity();
           return g.indistinguishable_copy(classes[g.uniform(0, classes.size() - 1)].representative);
         };
         Entity x = pick();
         Entity y = g.chance(1, 4) ? g.indistinguishable_copy(x) : pick();
         return Input{u, x, y};
       },
       check_weakpair},
      {"SEP",
       [](Generator& g) {
         QSet x = g.qset();
         auto classes = quotient(x).classes;
         Entity probe = classes.empty() ? g.atom() : classes[g.uniform(0, classes.size() - 1)].representative;
         return Input{x, Entity::nat(g.uniform(0, 6)), probe};
       },
       check_sep},
      {"QCUNIQUE", [](Generator& g) { return Input{g.qset()}; }, check_qcunique},
      {"SUBQC", [](Generator& g) { return Input{g.qset()}; }, check_subqc},
      {"POWQC", [](Generator& g) { return Input{g.qset()}; }, check_powqc},
      {"WEXT",
       [](Generator& g) {
         QSet x = g.qset();
         QSet y;
         switch (g.uniform(0, 2)) {
           case 0: y = g.indistinguishable_copy(x); break;
           case 1: y = g.perturb(x); break;
           default: y = g.qset(); break;
         }
         return Input{x, y};
       },
       check_wext},
      {"PAIRSYM",
       [](Generator& g) {
         Entity a = g.entity();
         Entity b = g.chance(4, 5) ? g.indistinguishable_copy(a) : g.entity();
         return Input{a, b};
       },
       check_pairsym},
      {"LABELPOST", [](Generator& g) { return Input{g.pure_weak_singleton()}; }, check_labelpost},
      {"STATS", [](Generator& g) { return Input{Entity::nat(g.uniform(1, 8)), Entity::nat(g.uniform(1, 8))}; },
       check_stats},
  };
  return all;
}

Outcome run_check(const Property& p, const Input& in, const SuiteOps& ops) {
  try {
    return p.check(in, ops);
  } catch (const Error& e) {
    return std::string("unexpected ") + to_string(e.kind()) + ": " + e.what();
  } catch (const std::exception& e) {
    return std::string("unexpected exception: ") + e.what();
  }
}

void shrink_entity(const Entity& e, std::vector<Entity>& out) {
  if (const NatLabel* n = e.as_nat()) {
    if (n->value > 0) out.push_back(Entity::nat(n->value / 2));
    return;
  }
  const QSet* q = e.as_qset();
  if (q == nullptr) return;
  auto classes = quotient(*q).classes;
  auto rebuild = [&](std::size_t skip, const Entity* replacement, Cardinal count) {
    QSetBuilder b;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (i == skip) {
        if (replacement != nullptr) b.add(*replacement, count);
      } else {
        b.add(classes[i].representative, classes[i].count);
      }
    }
    return b.build();
  };
  for (std::size_t i = 0; i < classes.size(); ++i) out.push_back(rebuild(i, nullptr, 0));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].count > 1) {
      Cardinal half = Cardinal::from_raw(classes[i].count.raw() / 2);
      out.push_back(rebuild(i, &classes[i].representative, half));
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!classes[i].representative.is_qset()) continue;
    std::vector<Entity> inner;
    shrink_entity(classes[i].representative, inner);
    for (const auto& r : inner) out.push_back(rebuild(i, &r, classes[i].count));
  }
}

// Greedy structural descent: keep taking the first failing candidate.
std::pair<Input, std::string> shrink(const Property& p, Input input, std::string message, const SuiteOps& ops) {
  for (int step = 0; step < 1000; ++step) {
    bool progressed = false;
    for (auto& candidate : shrink_candidates(input)) {
      if (auto failure = run_check(p, candidate, ops)) {
        input = std::move(candidate);
        message = std::move(*failure);
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  return {std::move(input), std::move(message)};
}

}  // namespace

void GenConfig::validate() const {
  auto bad = [](const std::string& what) { return Error(ErrorKind::InvalidArgument, "GenConfig: " + what); };
  if (max_depth > 4) throw bad("max_depth must be <= 4");
  if (max_width > 6) throw bad("max_width must be <= 6");
  if (max_count < 1 || max_count > 8) throw bad("max_count must be in 1..8");
  if (species_pool.empty() || matom_pool.empty()) throw bad("name pools must be nonempty");
  for (const auto& s : species_pool) (void)Species{s};
  for (const auto& s : matom_pool) (void)MAtomId{s};
}

Generator::Generator(const GenConfig& cfg, std::uint64_t stream)
    : cfg_(cfg), rng_(splitmix64(cfg.seed ^ splitmix64(stream))) {}

std::uint64_t Generator::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

Entity Generator::m_atom() { return Entity::m_atom(cfg_.species_pool[uniform(0, cfg_.species_pool.size() - 1)]); }

Entity Generator::atom() {
  switch (uniform(0, 2)) {
    case 0: return m_atom();
    case 1: return Entity::macro(cfg_.matom_pool[uniform(0, cfg_.matom_pool.size() - 1)]);
    default: return Entity::nat(uniform(0, 9));
  }
}

Entity Generator::entity() { return entity(cfg_.max_depth); }

Entity Generator::entity(std::size_t depth) {
  if (depth == 0 || chance(1, 4)) return atom();
  return qset(depth);
}

QSet Generator::qset(std::size_t depth) {
  QSetBuilder b;
  const std::uint64_t width = uniform(0, cfg_.max_width);
  for (std::uint64_t i = 0; i < width; ++i) {
    std::uint64_t kind = uniform(0, depth > 1 ? 3 : 2);
    if (kind == 3) {
      b.add_nested(qset(depth - 1 - uniform(0, depth - 2)), uniform(1, cfg_.max_count));
    } else if (kind == 0) {
      b.add(m_atom(), uniform(1, cfg_.max_count));
    } else {
      b.add(atom());
    }
  }
  return b.build();
}

QSet Generator::pure_weak_singleton() {
  return QSetBuilder().add(m_atom(), uniform(0, cfg_.max_count)).build();
}

Entity Generator::indistinguishable_copy(const Entity& e) {
  if (const QSet* q = e.as_qset()) return indistinguishable_copy(*q);
  return e;
}

QSet Generator::indistinguishable_copy(const QSet& q) {
  auto classes = quotient(q).classes;
  std::shuffle(classes.begin(), classes.end(), rng_);
  QSetBuilder b;
  for (const auto& c : classes) {
    Entity rep = indistinguishable_copy(c.representative);
    // Classical nested sets collapse, so re-add them whole.
    if (rep.is_qset() && rep.as_qset()->classical()) {
      b.add(rep, c.count);
      continue;
    }
    Cardinal left = c.count;
    while (!left.is_zero()) {
      Cardinal part = left.fits_u64() ? Cardinal(uniform(1, left.to_u64())) : left;
      b.add(rep, part);
      left -= part;
    }
  }
  return b.build();
}

QSet Generator::perturb(const QSet& q) {
  auto classes = quotient(q).classes;
  std::uint64_t mode = classes.empty() ? 2 : uniform(0, 2);
  QSetBuilder b;
  std::size_t target = classes.empty() ? 0 : uniform(0, classes.size() - 1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i == target && mode == 0) continue;
    Cardinal count = classes[i].count;
    if (i == target && mode == 1) count += 1;
    b.add(classes[i].representative, count);
  }
  if (mode == 2) b.add(atom());
  return b.build();
}

std::vector<Entity> generate(const GenConfig& cfg, std::size_t count) {
  cfg.validate();
  std::vector<Entity> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Generator g(cfg, i);
    out.push_back(g.entity());
  }
  return out;
}

std::vector<std::vector<Entity>> shrink_candidates(const std::vector<Entity>& input) {
  std::vector<std::vector<Entity>> out;
  for (std::size_t i = 0; i < input.size(); ++i) {
    std::vector<Entity> variants;
    shrink_entity(input[i], variants);
    for (auto& v : variants) {
      auto candidate = input;
      candidate[i] = std::move(v);
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : properties()) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

std::uint64_t SuiteReport::total_failures() const {
  std::uint64_t total = 0;
  for (const auto& p : properties) total += p.failures;
  return total;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  std::uint64_t cases = 0;
  for (const auto& p : properties) {
    cases += p.cases;
    out << p.name << " cases=" << p.cases << " failures=" << p.failures;
    if (p.first_failure) {
      const auto& f = *p.first_failure;
      out << " case=" << f.case_index << " stream=" << f.stream << " counterexample=" << f.input
          << " reason=" << f.message;
    }
    out << '\n';
  }
  out << "total properties=" << properties.size() << " cases=" << cases << " failures=" << total_failures() << '\n';
  return out.str();
}

SuiteReport run_suite(const GenConfig& cfg, std::uint64_t cases, const SuiteOps& ops) {
  cfg.validate();
  SuiteReport report;
  if (cases == 0) return report;
  const auto& props = properties();
  for (std::size_t pi = 0; pi < props.size(); ++pi) {
    const Property& p = props[pi];
    PropertyResult result;
    result.name = p.name;
    for (std::uint64_t i = 0; i < cases; ++i) {
      const std::uint64_t stream = (static_cast<std::uint64_t>(pi) << 40) | i;
      Generator g(cfg, stream);
      Input input = p.generate(g);
      ++result.cases;
      auto failure = run_check(p, input, ops);
      if (!failure) continue;
      ++result.failures;
      if (!result.first_failure) {
        auto [small, message] = shrink(p, std::move(input), std::move(*failure), ops);
        result.first_failure = Counterexample{i, stream, show(small), std::move(message)};
      }
    }
    report.properties.push_back(std::move(result));
  }
  return report;
}

}  // namespace qset
