#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "jacmult/rational.hpp"

namespace jacmult {

/// Raised when a rational coefficient has a denominator divisible by the prime.
class UnluckyPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of the prime field Z/P. Used as a fast cross-check layer for
/// Gröbner computations over the rationals.
template <std::uint32_t P>
class ModInt {
  static_assert(P > 2 && P < (1U << 31), "word-sized odd prime expected");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr ModInt() = default;
  constexpr ModInt(long v)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::uint32_t>(((v % static_cast<long>(P)) + static_cast<long>(P)) %
                                          static_cast<long>(P))) {}

  static ModInt from_rational(const Rational& r) {
    const BigInt p(static_cast<unsigned long>(P));
    BigInt den = r.denominator() % p;
    if (den == 0) throw UnluckyPrime("denominator of " + r.to_string() + " vanishes modulo " + std::to_string(P));
    BigInt num = r.numerator() % p;
    if (num < 0) num += p;
    return ModInt(static_cast<long>(num.get_si())) / ModInt(static_cast<long>(den.get_si()));
  }

  static constexpr ModInt zero() { return ModInt(); }
  static constexpr ModInt one() { return ModInt(1L); }

  [[nodiscard]] constexpr std::uint32_t value() const { return value_; }
  [[nodiscard]] constexpr bool is_zero() const { return value_ == 0; }
  [[nodiscard]] constexpr bool is_one() const { return value_ == 1; }

  [[nodiscard]] ModInt inverse() const {
    if (value_ == 0) throw std::domain_error("inverse of zero modulo " + std::to_string(P));
    // Fermat: a^(P-2)
    ModInt base = *this, result = one();
    for (std::uint32_t e = P - 2; e != 0; e >>= 1) {
      if (e & 1U) result *= base;
      base *= base;
    }
    return result;
  }

  ModInt& operator+=(ModInt o) {
    value_ += o.value_;
    if (value_ >= P) value_ -= P;
    return *this;
  }
  ModInt& operator-=(ModInt o) {
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + P - o.value_;
    return *this;
  }
  ModInt& operator*=(ModInt o) {
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) * o.value_) % P);
    return *this;
  }
  ModInt& operator/=(ModInt o) { return *this *= o.inverse(); }

  friend ModInt operator+(ModInt a, ModInt b) { return a += b; }
  friend ModInt operator-(ModInt a, ModInt b) { return a -= b; }
  friend ModInt operator*(ModInt a, ModInt b) { return a *= b; }
  friend ModInt operator/(ModInt a, ModInt b) { return a /= b; }
  friend ModInt operator-(ModInt a) { return ModInt() - a; }
  friend bool operator==(ModInt a, ModInt b) = default;

  [[nodiscard]] std::string to_string() const { return std::to_string(value_); }

 private:
  std::uint32_t value_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;
using Zp = ModInt<kDefaultPrime>;

}  // namespace jacmult
