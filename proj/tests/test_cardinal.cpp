#include <doctest.h>

#include "oracles.hpp"
#include "qset/cardinal.hpp"

using qset::Cardinal;

TEST_CASE("pow2 is exact up to 2^64 and refuses larger exponents") {
  CHECK(Cardinal::pow2(0) == 1);
  CHECK(Cardinal::pow2(12) == 4096);
  CHECK(Cardinal::pow2(64).to_string() == "18446744073709551616");
  CHECK_FALSE(Cardinal::pow2(64).fits_u64());
  CHECK_THROWS_AS(Cardinal::pow2(65), qset::OverflowError);
}

TEST_CASE("arithmetic overflow is signalled, never wrapped") {
  Cardinal big = Cardinal::pow2(64) * Cardinal::pow2(63);
  CHECK_THROWS_AS(big * 2, qset::OverflowError);
  CHECK_THROWS_AS(Cardinal::from_raw(~Cardinal::value_type{0}) + 1, qset::OverflowError);
  CHECK_THROWS_AS(Cardinal::pow2(64).to_u64(), qset::OverflowError);
  CHECK_THROWS(Cardinal(1) - 2);
}

TEST_CASE("binomial agrees with Pascal's triangle") {
  for (std::uint64_t n = 0; n <= 40; ++n) {
    for (std::uint64_t k = 0; k <= n + 1; ++k) {
      CHECK(qset::binomial(n, k) == oracle::pascal(n, k));
    }
  }
  CHECK(qset::binomial(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("parse and print decimal") {
  CHECK(Cardinal::parse("0") == 0);
  CHECK(Cardinal::parse("18446744073709551616") == Cardinal::pow2(64));
  CHECK_THROWS_AS(Cardinal::parse("999999999999999999999999999999999999999999"), qset::OverflowError);
  CHECK(qset::power(3, 3) == 27);
  CHECK(qset::power(0, 0) == 1);
}
