#include "jacmult/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacmult {

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t variable_count, std::size_t index, Exponent power) {
  Monomial m(variable_count);
  m.exponents_.at(index) = power;
  m.degree_ = power;
  return m;
}

std::uint64_t Monomial::weighted_degree(std::span<const unsigned> weights) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) d += static_cast<std::uint64_t>(weights[i]) * exponents_[i];
  return d;
}

bool Monomial::is_pure_power_of(std::size_t index) const {
  return exponents_[index] > 0 && exponents_[index] == degree_;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] += b.exponents_[i];
  r.degree_ += b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) {
    if (b.exponents_[i] > r.exponents_[i]) throw std::domain_error("monomial division is not exact");
    r.exponents_[i] -= b.exponents_[i];
  }
  r.degree_ -= b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::restrict_to(std::span<const std::size_t> positions) const {
  std::vector<Exponent> e;
  e.reserve(positions.size());
  for (std::size_t p : positions) e.push_back(exponents_[p]);
  return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

MonomialOrder MonomialOrder::weighted(std::vector<unsigned> weights) {
  if (std::any_of(weights.begin(), weights.end(), [](unsigned w) { return w == 0; }))
    throw std::invalid_argument("weighted order requires positive weights");
  return MonomialOrder(OrderKind::weighted, std::move(weights));
}

void MonomialOrder::check_compatible(std::size_t variable_count) const {
  if (kind_ == OrderKind::weighted && weights_.size() != variable_count) {
    throw std::invalid_argument("weighted order has " + std::to_string(weights_.size()) + " weights for " +
                                std::to_string(variable_count) + " variables");
  }
}

namespace {

// Reverse-lex tie break among monomials of equal degree: the monomial with the
// smaller exponent in the last differing variable is larger.
int revlex_tail(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int three_way(std::uint64_t a, std::uint64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::grevlex:
      if (int c = three_way(a.degree(), b.degree())) return c;
      return revlex_tail(a, b);
    case OrderKind::weighted:
      if (int c = three_way(a.weighted_degree(weights_), b.weighted_degree(weights_))) return c;
      return revlex_tail(a, b);
    case OrderKind::local:
      if (int c = three_way(b.degree(), a.degree())) return c;
      return revlex_tail(a, b);
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::local:
      return "local";
    case OrderKind::weighted: {
      std::string s = "weighted";
      for (unsigned w : weights_) s += " " + std::to_string(w);
      return s;
    }
  }
  return {};
}

}  // namespace jacmult
