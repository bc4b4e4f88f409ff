#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jacmult/polynomial.hpp"

namespace jacmult {

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Formal partial derivative with respect to the named variable.
Polynomial differentiate(const Polynomial& p, std::string_view variable);

/// Replaces each bound variable by its image. All images must share one ring,
/// which becomes the result ring; unbound variables of p are looked up there by name.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings);

/// Evaluates every variable at a rational point (given in ring order).
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Re-expresses p in a ring that contains all variables p actually uses.
Polynomial embed(const Polynomial& p, const Ring& target, const MonomialOrder& order);

Polynomial power(const Polynomial& p, unsigned exponent);

struct CoefficientSlice {
  Monomial monomial;      // in the parameter ring
  Polynomial coefficient; // in the remaining ring
};

struct CoefficientDecomposition {
  Ring parameter_ring;
  Ring remaining_ring;
  /// Sorted by decreasing parameter monomial (grevlex); zero slices never appear.
  std::vector<CoefficientSlice> slices;
};

/// Views p as a polynomial in `params` with coefficients in the other variables.
CoefficientDecomposition coefficients_in(const Polynomial& p, std::span<const std::string> params);

/// Inverse of coefficients_in: sums monomial * coefficient back in `ring`.
Polynomial recombine(const CoefficientDecomposition& d, const Ring& ring, const MonomialOrder& order);

/// Determinant by cofactor expansion (square matrices only).
Polynomial determinant(const PolynomialMatrix& m);

/// All k x k minors of a square matrix with zeros and duplicates removed,
/// in first-occurrence order.
std::vector<Polynomial> minors_ideal(const PolynomialMatrix& m, std::size_t k);

/// Common weighted degree of all terms, or nullopt when the terms disagree
/// (or p is zero, which has no degree).
std::optional<std::uint64_t> weighted_degree(const Polynomial& p, std::span<const unsigned> weights);

/// Text form in the polynomial grammar, e.g. "3*t^4 - 1/2*x0*y1 + 1".
template <typename F>
std::string to_string(const BasicPolynomial<F>& p);

std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace jacmult
