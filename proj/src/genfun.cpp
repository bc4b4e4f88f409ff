#include "jacmult/genfun.hpp"

#include <stdexcept>

namespace jacmult {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s[0] = 1;
  return s;
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  const std::size_t g = a.order();
  TruncatedSeries c(g);
  for (std::size_t i = 0; i <= g; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= g; ++j) {
      if (b[j] != 0) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  if (a[0] != 1 && a[0] != -1) throw std::domain_error("series constant term is not a unit in Z");
  const std::size_t g = a.order();
  const BigInt& c0 = a[0];  // its own inverse
  TruncatedSeries b(g);
  b[0] = c0;
  for (std::size_t n = 1; n <= g; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
    }
    b[n] = -acc * c0;
  }
  return b;
}

TruncatedSeries series_power(const TruncatedSeries& a, unsigned n) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  for (unsigned e = n; e != 0; e >>= 1) {
    if (e & 1U) result = series_multiply(result, base);
    if (e > 1) base = series_multiply(base, base);
  }
  return result;
}

TruncatedSeries series_power_naive(const TruncatedSeries& a, unsigned n) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  for (unsigned i = 0; i < n; ++i) result = series_multiply(result, a);
  return result;
}

TruncatedSeries euler_product(std::size_t order) {
  TruncatedSeries product = TruncatedSeries::one(order);
  for (std::size_t n = 1; n <= order; ++n) {
    // multiply by (1 - q^n) in place, high degree first
    for (std::size_t i = order; i >= n; --i) product[i] -= product[i - n];
  }
  return product;
}

TruncatedSeries euler_product_pentagonal(std::size_t order) {
  // sum_k (-1)^k q^{k(3k-1)/2}, k ranging over all integers
  TruncatedSeries s(order);
  s[0] = 1;
  for (std::size_t k = 1;; ++k) {
    const std::size_t e1 = k * (3 * k - 1) / 2;
    const std::size_t e2 = k * (3 * k + 1) / 2;
    if (e1 > order) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    s[e1] += sign;
    if (e2 <= order) s[e2] += sign;
  }
  return s;
}

std::vector<BigInt> rational_curve_counts(std::size_t order) {
  // q / Delta(q) = prod (1 - q^n)^{-24}; the leading q cancels symbolically.
  return series_power(series_inverse(euler_product_pentagonal(order)), 24).coefficients();
}

bool counts_cross_check(std::size_t order) {
  const TruncatedSeries a = series_power(series_inverse(euler_product_pentagonal(order)), 24);
  const TruncatedSeries b = series_inverse(series_power_naive(euler_product(order), 24));
  return a == b;
}

}  // namespace jacmult
