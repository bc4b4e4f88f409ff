#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jacmult/modint.hpp"
#include "jacmult/monomial.hpp"
#include "jacmult/rational.hpp"
#include "jacmult/ring.hpp"

namespace jacmult {

template <typename F>
struct Term {
  Monomial monomial;
  F coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over a field F.
///
/// Canonical form: no zero coefficients, one term per monomial, terms sorted
/// strictly decreasing under the polynomial's monomial order. Two polynomials
/// are equal when they live in the same ring and have the same term set; the
/// order only affects iteration.
template <typename F>
class BasicPolynomial {
 public:
  using Coefficient = F;

  explicit BasicPolynomial(Ring ring, MonomialOrder order = MonomialOrder::grevlex())
      : ring_(std::move(ring)), order_(std::move(order)) {
    order_.check_compatible(ring_.size());
  }

  static BasicPolynomial constant(Ring ring, const F& c, MonomialOrder order = MonomialOrder::grevlex()) {
    BasicPolynomial p(std::move(ring), std::move(order));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_.size()), c});
    return p;
  }

  static BasicPolynomial variable(Ring ring, std::string_view name, MonomialOrder order = MonomialOrder::grevlex()) {
    const std::size_t index = ring.require_index(name);
    BasicPolynomial p(std::move(ring), std::move(order));
    p.terms_.push_back({Monomial::variable(p.ring_.size(), index), F::one()});
    return p;
  }

  static BasicPolynomial term(Ring ring, Monomial m, const F& c, MonomialOrder order = MonomialOrder::grevlex()) {
    BasicPolynomial p(std::move(ring), std::move(order));
    if (m.size() != p.ring_.size()) throw RingMismatch("monomial arity does not match ring");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Builds the canonical form from arbitrary terms (duplicates summed, zeros dropped).
  static BasicPolynomial from_terms(Ring ring, std::vector<Term<F>> terms,
                                    MonomialOrder order = MonomialOrder::grevlex()) {
    BasicPolynomial p(std::move(ring), std::move(order));
    for (const auto& t : terms) {
      if (t.monomial.size() != p.ring_.size()) throw RingMismatch("monomial arity does not match ring");
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  [[nodiscard]] const Ring& ring() const { return ring_; }
  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<Term<F>>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  [[nodiscard]] const Term<F>& leading_term() const { return terms_.front(); }
  [[nodiscard]] const Monomial& leading_monomial() const { return terms_.front().monomial; }
  [[nodiscard]] const F& leading_coefficient() const { return terms_.front().coefficient; }

  /// Largest total degree of a term; 0 for the zero polynomial.
  [[nodiscard]] std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  [[nodiscard]] F coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.monomial == m) return t.coefficient;
    }
    return F::zero();
  }

  [[nodiscard]] BasicPolynomial with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    BasicPolynomial p(ring_, order);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  [[nodiscard]] BasicPolynomial monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  [[nodiscard]] BasicPolynomial scaled(const F& c) const {
    if (c.is_zero()) return BasicPolynomial(ring_, order_);
    BasicPolynomial p = *this;
    for (auto& t : p.terms_) t.coefficient *= c;
    return p;
  }

  /// Drops every term of total degree >= degree_bound.
  [[nodiscard]] BasicPolynomial truncated(std::uint64_t degree_bound) const {
    BasicPolynomial p(ring_, order_);
    for (const auto& t : terms_) {
      if (t.monomial.degree() < degree_bound) p.terms_.push_back(t);
    }
    return p;
  }

  /// c * m * this, with terms of degree >= degree_bound dropped (0 = no bound).
  [[nodiscard]] BasicPolynomial times_term(const Monomial& m, const F& c, std::uint64_t degree_bound = 0) const {
    BasicPolynomial p(ring_, order_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial product = t.monomial * m;
      if (degree_bound != 0 && product.degree() >= degree_bound) continue;
      p.terms_.push_back({std::move(product), t.coefficient * c});
    }
    // Multiplication by a monomial preserves every supported order.
    return p;
  }

  /// this -= c * m * g, computed by a single merge.
  void subtract_multiple(const F& c, const Monomial& m, const BasicPolynomial& g, std::uint64_t degree_bound = 0) {
    require_same_ring(g);
    if (c.is_zero() || g.is_zero()) return;
    std::vector<Term<F>> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto it = terms_.begin();
    for (const auto& gt : g.terms_) {
      Monomial product = gt.monomial * m;
      if (degree_bound != 0 && product.degree() >= degree_bound) continue;
      while (it != terms_.end() && order_.greater(it->monomial, product)) out.push_back(std::move(*it++));
      F value = gt.coefficient * c;
      if (it != terms_.end() && it->monomial == product) {
        F diff = it->coefficient - value;
        if (!diff.is_zero()) out.push_back({std::move(product), std::move(diff)});
        ++it;
      } else {
        out.push_back({std::move(product), -value});
      }
    }
    while (it != terms_.end()) out.push_back(std::move(*it++));
    terms_ = std::move(out);
  }

  /// Removes and returns the leading term.
  Term<F> pop_leading_term() {
    Term<F> t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  /// Appends a term that is smaller than every current term (caller guarantees it).
  void push_smallest_term(Term<F> t) { terms_.push_back(std::move(t)); }

  template <typename G, typename Fn>
  [[nodiscard]] BasicPolynomial<G> map_coefficients(Fn&& fn) const {
    std::vector<Term<G>> mapped;
    mapped.reserve(terms_.size());
    for (const auto& t : terms_) mapped.push_back({t.monomial, fn(t.coefficient)});
    return BasicPolynomial<G>::from_terms(ring_, std::move(mapped), order_);
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) { return add_scaled(o, F::one()); }
  BasicPolynomial& operator-=(const BasicPolynomial& o) { return add_scaled(o, -F::one()); }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator-(const BasicPolynomial& a) { return a.scaled(-F::one()); }
  friend BasicPolynomial operator*(const F& c, const BasicPolynomial& a) { return a.scaled(c); }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.require_same_ring(b);
    std::unordered_map<Monomial, F, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        auto [pos, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coefficient * t.coefficient);
        if (!inserted) pos->second += s.coefficient * t.coefficient;
      }
    }
    BasicPolynomial p(a.ring_, a.order_);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    }
    p.sort_terms();
    return p;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (!(a.ring_ == b.ring_)) return false;
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    return a.terms_ == b.with_order(a.order_).terms_;
  }

  void require_same_ring(const BasicPolynomial& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("ring mismatch: " + ring_.to_string() + " vs " + o.ring_.to_string());
  }

 private:
  BasicPolynomial& add_scaled(const BasicPolynomial& o, const F& c) {
    require_same_ring(o);
    const BasicPolynomial& rhs = o.order_ == order_ ? o : o.with_order(order_);
    subtract_multiple(-c, Monomial(ring_.size()), rhs);
    return *this;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term<F>& x, const Term<F>& y) { return order_.greater(x.monomial, y.monomial); });
  }

  void canonicalize() {
    sort_terms();
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coefficient += t.coefficient;
      } else {
        if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  Ring ring_;
  MonomialOrder order_;
  std::vector<Term<F>> terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using PolynomialZp = BasicPolynomial<Zp>;

/// Reduces a rational polynomial modulo the default prime; throws UnluckyPrime.
inline PolynomialZp reduce_mod_prime(const Polynomial& p) {
  return p.map_coefficients<Zp>([](const Rational& c) { return Zp::from_rational(c); });
}

}  // namespace jacmult
