#pragma once

// Test-only reference computations. Nothing here calls into the Gröbner engine.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "jacmult/polyalg.hpp"
#include "jacmult/polynomial.hpp"

namespace jacmult::testing {

/// All monomials in n variables of total degree <= max_degree.
inline std::vector<Monomial> monomials_up_to(std::size_t n, std::uint64_t max_degree) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint64_t remaining) -> void {
    if (var == n) {
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t k = 0; k <= remaining; ++k) {
      e[var] = static_cast<Monomial::Exponent>(k);
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

/// Rank of a dense rational matrix by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = rows[r][c].inverse();
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

/// #monomials - rank of the span of {u*g} over the given monomial window.
/// With `truncate` every product is cut to the window (exact for k[x]/m^k);
/// without it only products that fit entirely are used.
inline std::size_t macaulay_corank(const std::vector<Polynomial>& gens, std::uint64_t max_degree, bool truncate) {
  const std::size_t n = gens.front().ring().size();
  const auto monos = monomials_up_to(n, max_degree);
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < monos.size(); ++i) column.emplace(monos[i], i);

  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    for (const auto& u : monos) {
      if (!truncate && u.degree() + g.total_degree() > max_degree) continue;
      std::vector<Rational> row(monos.size());
      bool any = false;
      for (const auto& t : g.terms()) {
        const Monomial m = t.monomial * u;
        if (m.degree() > max_degree) continue;
        row[column.at(m)] += t.coefficient;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return monos.size() - rank(std::move(rows), monos.size());
}

/// dim k[x]/(I + m^k), computed densely.
inline std::size_t truncated_dimension_oracle(const std::vector<Polynomial>& gens, std::uint64_t k) {
  if (k == 0) return 0;
  return macaulay_corank(gens, k - 1, true);
}

/// Coefficients of prod_{n>=1} (1 - q^n)^{-24} up to q^order by expanding each
/// factor (1 + q^n + q^{2n} + ...) 24 times with plain integers.
inline std::vector<std::int64_t> brute_force_counts(std::size_t order) {
  std::vector<std::int64_t> c(order + 1, 0);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      // multiply by 1/(1 - q^n): prefix sums with stride n
      for (std::size_t i = n; i <= order; ++i) c[i] += c[i - n];
    }
  }
  return c;
}

class RandomPolynomials {
 public:
  explicit RandomPolynomials(std::uint64_t seed) : rng_(seed) {}

  long coefficient(long lo = -3, long hi = 3) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Monomial monomial(std::size_t n, std::uint64_t max_degree, std::uint64_t min_degree = 0) {
    const std::uint64_t d = std::uniform_int_distribution<std::uint64_t>(min_degree, max_degree)(rng_);
    std::vector<Monomial::Exponent> e(n, 0);
    for (std::uint64_t i = 0; i < d; ++i) ++e[index(n)];
    return Monomial(std::move(e));
  }

  Polynomial polynomial(const Ring& ring, std::uint64_t max_degree, std::size_t max_terms,
                        const MonomialOrder& order = MonomialOrder::grevlex(), std::uint64_t min_degree = 0) {
    std::vector<Term<Rational>> terms;
    const std::size_t count = 1 + index(max_terms);
    for (std::size_t i = 0; i < count; ++i) {
      terms.push_back({monomial(ring.size(), max_degree, min_degree), Rational(coefficient())});
    }
    return Polynomial::from_terms(ring, std::move(terms), order);
  }

  /// Zero-dimensional by construction: generator i is x_i^{a_i} plus terms of
  /// lower total degree, followed by a few extra generators. No generator has
  /// a constant term, so the quotient is never zero.
  std::vector<Polynomial> zero_dimensional_generators(const Ring& ring, unsigned max_power, std::vector<unsigned>& powers) {
    std::vector<Polynomial> gens;
    powers.clear();
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned a = 1 + static_cast<unsigned>(index(max_power));
      powers.push_back(a);
      Polynomial g = Polynomial::term(ring, Monomial::variable(n, i, a), Rational::one());
      if (a > 1) g += polynomial(ring, a - 1, 3, MonomialOrder::grevlex(), 1);
      gens.push_back(g);
    }
    const std::size_t extra = index(3);
    for (std::size_t j = 0; j < extra; ++j) {
      Polynomial p = polynomial(ring, 3, 3, MonomialOrder::grevlex(), 1);
      if (!p.is_zero()) gens.push_back(p);
    }
    return gens;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jacmult::testing
