#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace jacmult {

/// Exponent vector over a fixed, ordered set of ring variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t variable_count) : exponents_(variable_count, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents) : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial variable(std::size_t variable_count, std::size_t index, Exponent power = 1);

  [[nodiscard]] std::size_t size() const { return exponents_.size(); }
  [[nodiscard]] Exponent operator[](std::size_t i) const { return exponents_[i]; }
  [[nodiscard]] std::span<const Exponent> exponents() const { return exponents_; }
  [[nodiscard]] std::uint64_t degree() const { return degree_; }
  [[nodiscard]] std::uint64_t weighted_degree(std::span<const unsigned> weights) const;
  [[nodiscard]] bool is_one() const { return degree_ == 0; }

  /// Index of the variable if this is a pure power x_i^e with e > 0.
  [[nodiscard]] bool is_pure_power_of(std::size_t index) const;

  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] bool coprime_with(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  /// Sub-monomial restricted to the given variable positions.
  [[nodiscard]] Monomial restrict_to(std::span<const std::size_t> positions) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }
  /// Plain lexicographic order on exponent vectors; for containers only.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exponents_ <=> b.exponents_; }

 private:
  std::vector<Exponent> exponents_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind {
  grevlex,
  lex,
  weighted,
  /// Negative-degree reverse lex: lower total degree is larger. Only used for
  /// computations in truncated rings k[x]/m^k, where it is a well order.
  local,
};

/// Total monomial order. Variables are ranked by ring position, first is largest.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, {}); }
  /// Weighted degree first, grevlex among equal weights. Weights must be positive.
  static MonomialOrder weighted(std::vector<unsigned> weights);
  static MonomialOrder local() { return MonomialOrder(OrderKind::local, {}); }

  [[nodiscard]] OrderKind kind() const { return kind_; }
  [[nodiscard]] std::span<const unsigned> weights() const { return weights_; }

  /// Throws std::invalid_argument if the order cannot be used on a ring of this size.
  void check_compatible(std::size_t variable_count) const;

  /// Negative, zero or positive as a is smaller, equal or larger than b.
  [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const;
  [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<unsigned> weights) : kind_(kind), weights_(std::move(weights)) {}

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<unsigned> weights_;
};

}  // namespace jacmult
