#pragma once

#include <cstddef>
#include <vector>

#include "jacmult/rational.hpp"

namespace jacmult {

/// Integer power series truncated after q^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coefficients_(order + 1) {}
  /// Pads with zeros or drops coefficients beyond `order`.
  TruncatedSeries(std::size_t order, std::vector<BigInt> coefficients);

  static TruncatedSeries one(std::size_t order);

  [[nodiscard]] std::size_t order() const { return coefficients_.size() - 1; }
  [[nodiscard]] const BigInt& operator[](std::size_t i) const { return coefficients_[i]; }
  BigInt& operator[](std::size_t i) { return coefficients_[i]; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return coefficients_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Cauchy product truncated at the common order.
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Inverse of a series whose constant term is +1 or -1.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// a^n by binary exponentiation (squarings plus multiplies).
TruncatedSeries series_power(const TruncatedSeries& a, unsigned n);

/// a^n by n - 1 successive multiplications.
TruncatedSeries series_power_naive(const TruncatedSeries& a, unsigned n);

/// prod_{n>=1} (1 - q^n) multiplied out factor by factor.
TruncatedSeries euler_product(std::size_t order);

/// prod_{n>=1} (1 - q^n) from the pentagonal number theorem.
TruncatedSeries euler_product_pentagonal(std::size_t order);

/// n(0..order): coefficients of prod_{n>=1} (1 - q^n)^{-24}.
std::vector<BigInt> rational_curve_counts(std::size_t order);

/// Agreement of two independent pipelines to the given order:
/// inverse of the pentagonal series raised to the 24th power by squaring, versus
/// the factor-by-factor product raised to the 24th power by repeated
/// multiplication and then inverted.
bool counts_cross_check(std::size_t order);

}  // namespace jacmult
