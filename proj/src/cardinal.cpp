#include "qset/cardinal.hpp"

#include <algorithm>
#include <stdexcept>

#include "qset/error.hpp"

namespace qset {

namespace {

using u128 = Cardinal::value_type;

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Cardinal Cardinal::pow2(std::uint64_t exponent) {
  if (exponent > 64) {
    throw OverflowError("2^" + std::to_string(exponent) + " exceeds the exact range (exponent > 64)");
  }
  return from_raw(u128{1} << exponent);
}

Cardinal Cardinal::parse(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty cardinal literal");
  Cardinal c;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("non-digit in cardinal literal");
    c *= 10;
    c += static_cast<std::uint64_t>(ch - '0');
  }
  return c;
}

std::uint64_t Cardinal::to_u64() const {
  if (!fits_u64()) throw OverflowError(to_string() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(value_);
}

std::string Cardinal::to_string() const {
  if (value_ == 0) return "0";
  std::string out;
  for (u128 v = value_; v != 0; v /= 10) out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  std::reverse(out.begin(), out.end());
  return out;
}

Cardinal& Cardinal::operator+=(Cardinal other) {
  if (__builtin_add_overflow(value_, other.value_, &value_)) {
    throw OverflowError("cardinal addition overflow");
  }
  return *this;
}

Cardinal& Cardinal::operator-=(Cardinal other) {
  if (other.value_ > value_) throw std::domain_error("cardinal subtraction below zero");
  value_ -= other.value_;
  return *this;
}

Cardinal& Cardinal::operator*=(Cardinal other) {
  if (__builtin_mul_overflow(value_, other.value_, &value_)) {
    throw OverflowError("cardinal multiplication overflow");
  }
  return *this;
}

std::ostream& operator<<(std::ostream& os, Cardinal c) { return os << c.to_string(); }

Cardinal binomial(Cardinal n, Cardinal k) {
  if (k > n) return 0;
  if (n - k < k) k = n - k;
  // result * (n - i) is divisible by (i + 1); dividing out the gcd first
  // keeps intermediates no larger than the final value times a small factor.
  u128 result = 1;
  for (u128 i = 0; i < k.raw(); ++i) {
    u128 num = n.raw() - i;
    u128 den = i + 1;
    u128 g = gcd(result, den);
    result /= g;
    den /= g;
    num /= den;
    if (__builtin_mul_overflow(result, num, &result)) throw OverflowError("binomial coefficient overflow");
  }
  return Cardinal::from_raw(result);
}

Cardinal power(Cardinal base, std::uint64_t exponent) {
  Cardinal result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base.is_zero()) return 0;
    if (base == 1) return 1;
    result *= base;
  }
  return result;
}

}  // namespace qset
