#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qset/axiom_suite.hpp"
#include "qset/core.hpp"
#include "qset/relations.hpp"

using namespace qset;
using testing_helpers::E;
using testing_helpers::Q;

TEST_CASE("qc") {
  CHECK(qc(QSet{}) == 0);
  CHECK(qc(Q("[m:e*3]")) == 3);
  QSet x = Q("[m:e*2, M:A, [m:p]*2]");
  CHECK(oracle::flatten(x).size() == 5);
  CHECK(qc(x) == 5);
}

TEST_CASE("is_set scans the transitive closure") {
  CHECK(is_set(E("[]")));
  CHECK_FALSE(is_set(E("[m:e]")));
  CHECK(is_set(E("[[M:A], n:3]")));
  CHECK_FALSE(is_set(E("[[M:A], [[m:e]]]")));
  CHECK_FALSE(is_set(E("m:e")));
  CHECK(is_set(E("M:A")));

  GenConfig cfg;
  for (const auto& e : generate(cfg, 300)) {
    CHECK(is_set(e) == !oracle::closure_has_m_atom(e));
  }
}

TEST_CASE("member") {
  CHECK(member(E("M:A"), Q("[M:A, m:e]")));
  CHECK_FALSE(member(E("M:B"), Q("[M:A, m:e]")));
  CHECK(member(E("n:4"), Q("[n:4]")));
  CHECK(member(E("[m:e*2]"), Q("[[m:e*2]*3]")));
  CHECK_FALSE(member(E("[m:e]"), Q("[[m:e*2]*3]")));
  CHECK_THROWS_AS(member(E("m:e"), Q("[m:e*2]")), IllFormedFormula);
}

TEST_CASE("member_species counts top-level m-atoms only") {
  CHECK(member_species(Species("e"), Q("[m:e*3]")) == 3);
  CHECK(member_species(Species("p"), Q("[m:e*3]")) == 0);
  QSet x = Q("[m:e*2, [m:e*5]]");
  std::uint64_t top = 0;
  for (const auto& el : oracle::flatten(x)) {
    if (el.is_m_atom() && el.as_m_atom()->species.name() == "e") ++top;
  }
  CHECK(top == 2);
  CHECK(member_species(Species("e"), x) == top);
}

TEST_CASE("builder canonicalization") {
  QSet a = QSetBuilder().add(E("m:p")).add(E("m:e"), 2).add(E("M:B")).add(E("M:A")).add(E("M:B")).build();
  CHECK(canonical_string(a) == "[m:e*2, m:p, M:A, M:B]");
  CHECK(oracle::is_canonical(a));

  SUBCASE("indistinguishable nested qsets merge by count") {
    QSet b = QSetBuilder().add(E("[m:e, m:e]")).add(E("[m:e*2]"), 2).build();
    CHECK(canonical_string(b) == "[[m:e*2]*3]");
  }
  SUBCASE("nested sets have identity and do not duplicate") {
    QSet b = QSetBuilder().add(E("[M:A]"), 2).add(E("[M:A]")).add(E("[]"), 4).build();
    CHECK(canonical_string(b) == "[[M:A], []]");
    CHECK(qc(b) == 2);
  }
  SUBCASE("zero counts add nothing") {
    CHECK(QSetBuilder().add(E("m:e"), 0).build().empty());
  }
}

TEST_CASE("empty iff qc is zero") {
  GenConfig cfg;
  for (const auto& e : generate(cfg, 300)) {
    if (const QSet* q = e.as_qset()) {
      CHECK((qc(*q) == 0) == q->empty());
    }
  }
}

TEST_CASE("canonicalization is idempotent") {
  GenConfig cfg;
  for (const auto& e : generate(cfg, 300)) {
    const QSet* q = e.as_qset();
    if (q == nullptr) continue;
    QSet again = QSetBuilder().add_all(*q).build();
    CHECK(canonical_string(again) == canonical_string(*q));
    CHECK(again == *q);
  }
}

TEST_CASE("sets have classical cardinality") {
  GenConfig cfg;
  for (const auto& e : generate(cfg, 300)) {
    const QSet* q = e.as_qset();
    if (q == nullptr || !is_set(*q)) continue;
    std::set<std::string> distinct;
    for (const auto& el : oracle::flatten(*q)) distinct.insert(canonical_string(el));
    CHECK(qc(*q) == distinct.size());
  }
}

TEST_CASE("depth bound") {
  QSet q;
  for (std::size_t d = 1; d < kMaxDepth; ++d) q = QSetBuilder().add(q).build();
  CHECK(q.depth() == kMaxDepth);
  CHECK_THROWS_WITH_AS(QSetBuilder().add(q).build(), doctest::Contains("depth"), Error);
  try {
    QSetBuilder().add(q).build();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DepthExceeded);
  }
}

TEST_CASE("names are identifiers") {
  CHECK_THROWS_AS(Species(""), Error);
  CHECK_THROWS_AS(Species("1e"), Error);
  CHECK_THROWS_AS(MAtomId("a-b"), Error);
  CHECK(Species("Up_2").name() == "Up_2");
  CHECK(Species("e") != Species("E"));
}
