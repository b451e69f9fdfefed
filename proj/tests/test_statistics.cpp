#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qset/statistics.hpp"

using namespace qset;
using testing_helpers::Q;

namespace {

// Exhaustive recursion over all k-tuples with entries 0..n.
std::vector<std::vector<std::uint64_t>> brute_vectors(std::uint64_t n, std::uint64_t k, bool exclusion) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur(k, 0);
  while (true) {
    std::uint64_t sum = 0;
    bool ok = true;
    for (auto v : cur) {
      sum += v;
      ok = ok && (!exclusion || v <= 1);
    }
    if (ok && sum == n) out.push_back(cur);
    std::size_t i = 0;
    while (i < k && ++cur[i] > n) cur[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::vector<std::uint64_t>> as_vectors(const std::vector<OccupancyVector>& vs) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& v : vs) out.emplace_back(v.counts().begin(), v.counts().end());
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("enumerate_occupancies") {
  using V = std::vector<std::vector<std::uint64_t>>;
  CHECK(as_vectors(enumerate_occupancies(2, 2, false)) == V{{2, 0}, {1, 1}, {0, 2}});
  CHECK(as_vectors(enumerate_occupancies(2, 3, true)) == V{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(enumerate_occupancies(3, 2, true).empty());
  CHECK(as_vectors(enumerate_occupancies(0, 3, false)) == V{{0, 0, 0}});

  for (std::uint64_t n = 0; n <= 6; ++n) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      CHECK(as_vectors(enumerate_occupancies(n, k, false)) == brute_vectors(n, k, false));
      CHECK(as_vectors(enumerate_occupancies(n, k, true)) == brute_vectors(n, k, true));
    }
  }
}

TEST_CASE("enumeration bounds") {
  CHECK_NOTHROW(enumerate_occupancies(12, 3, false));
  CHECK(kind_of([] { enumerate_occupancies(13, 2, false); }) == ErrorKind::ScaleExceeded);
  CHECK(kind_of([] { enumerate_occupancies(2, 13, true); }) == ErrorKind::ScaleExceeded);
  CHECK(kind_of([] { enumerate_occupancies(2, 0, false); }) == ErrorKind::InvalidArgument);
  CHECK_THROWS_AS(OccupancyVector({}), Error);
}

TEST_CASE("microstate_count spot values") {
  CHECK(microstate_count(2, 3, StatKind::BoseEinstein) == 6);
  CHECK(microstate_count(2, 3, StatKind::FermiDirac) == 3);
  CHECK(microstate_count(2, 3, StatKind::MaxwellBoltzmann) == 9);
  CHECK(microstate_count(3, 2, StatKind::FermiDirac) == 0);

  auto census = oracle::labelled_census(2, 3);
  CHECK(census.assignments == 9);
  CHECK(census.by_vector.size() == 6);
  CHECK(oracle::fermi_vectors(census) == 3);
}

TEST_CASE("closed forms agree with the labelled census for n, k <= 6") {
  for (std::uint64_t n = 0; n <= 6; ++n) {
    for (std::uint64_t k = 1; k <= 6; ++k) {
      auto census = oracle::labelled_census(n, k);
      CHECK(microstate_count(n, k, StatKind::BoseEinstein) == census.by_vector.size());
      CHECK(microstate_count(n, k, StatKind::FermiDirac) == oracle::fermi_vectors(census));
      CHECK(microstate_count(n, k, StatKind::MaxwellBoltzmann) == census.assignments);
      for (const auto& v : enumerate_occupancies(n, k, false)) {
        std::vector<std::uint64_t> key(v.counts().begin(), v.counts().end());
        CHECK(mb_weight(v) == census.by_vector.at(key));
      }
    }
  }
}

TEST_CASE("mb_weight") {
  CHECK(mb_weight(OccupancyVector({2, 0})) == 1);
  CHECK(mb_weight(OccupancyVector({1, 1})) == 2);
  Cardinal total;
  for (const auto& v : enumerate_occupancies(3, 3, false)) total += mb_weight(v);
  CHECK(total == 27);
  CHECK(mb_weight(OccupancyVector({3})) == 1);
}

TEST_CASE("FD <= BE <= MB") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (std::uint64_t k = 1; k <= 8; ++k) {
      Cardinal fd = microstate_count(n, k, StatKind::FermiDirac);
      Cardinal be = microstate_count(n, k, StatKind::BoseEinstein);
      Cardinal mb = microstate_count(n, k, StatKind::MaxwellBoltzmann);
      CHECK(fd <= be);
      CHECK(be <= mb);
    }
  }
}

TEST_CASE("closed forms overflow explicitly") {
  CHECK(kind_of([] { microstate_count(81, 3, StatKind::MaxwellBoltzmann); }) == ErrorKind::Overflow);
  CHECK(microstate_count(80, 3, StatKind::MaxwellBoltzmann).to_string() == "147808829414345923316083210206383297601");
  CHECK(kind_of([] { microstate_count(300, 150, StatKind::BoseEinstein); }) == ErrorKind::Overflow);
}

TEST_CASE("quasi_function_count") {
  CHECK(quasi_function_count(Q("[m:e*2]"), 3) == 6);
  CHECK(quasi_function_count(Q("[m:e*2]"), 3) == microstate_count(2, 3, StatKind::BoseEinstein));
  CHECK(quasi_function_count(Q("[]"), 5) == 1);
  CHECK(quasi_function_count(Q("[m:e*1]"), 4) == 4);
  CHECK(kind_of([] { quasi_function_count(Q("[m:e, m:p]"), 2); }) == ErrorKind::NotPure);
  CHECK(kind_of([] { quasi_function_count(Q("[M:A]"), 2); }) == ErrorKind::NotPure);
}

TEST_CASE("state cells from M-atoms") {
  auto cells = state_cells(Q("[M:B, M:A, M:C]"));
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].name() == "A");
  CHECK(quasi_function_count(Q("[m:e*2]"), cells.size()) == 6);
  CHECK_THROWS_AS(state_cells(Q("[m:e]")), Error);
}
