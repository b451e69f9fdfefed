#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace qset {

// Exact non-negative integer. Backed by 128 bits so that 2^64 is
// representable; every operation that would leave the range throws
// OverflowError instead of wrapping.
class Cardinal {
 public:
  using value_type = unsigned __int128;

  constexpr Cardinal() = default;
  constexpr Cardinal(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Cardinal from_raw(value_type v) {
    Cardinal c;
    c.value_ = v;
    return c;
  }

  // 2^exponent; throws OverflowError when exponent > 64.
  static Cardinal pow2(std::uint64_t exponent);
  // Decimal digits only; throws OverflowError when out of range.
  static Cardinal parse(std::string_view digits);

  constexpr value_type raw() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }
  bool fits_u64() const { return value_ <= UINT64_MAX; }
  std::uint64_t to_u64() const;  // throws OverflowError if !fits_u64()

  std::string to_string() const;

  Cardinal& operator+=(Cardinal other);
  Cardinal& operator-=(Cardinal other);  // throws std::domain_error below zero
  Cardinal& operator*=(Cardinal other);

  friend Cardinal operator+(Cardinal a, Cardinal b) { return a += b; }
  friend Cardinal operator-(Cardinal a, Cardinal b) { return a -= b; }
  friend Cardinal operator*(Cardinal a, Cardinal b) { return a *= b; }

  friend constexpr bool operator==(Cardinal a, Cardinal b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(Cardinal a, Cardinal b) {
    return a.value_ <=> b.value_;
  }

 private:
  value_type value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Cardinal c);

// Exact binomial coefficient C(n, k); zero when k > n.
Cardinal binomial(Cardinal n, Cardinal k);
// base^exponent with overflow checking.
Cardinal power(Cardinal base, std::uint64_t exponent);

}  // namespace qset
