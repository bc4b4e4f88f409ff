#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jacmult/rational.hpp"

namespace jacmult {

/// Unibranch plane curve germ x^q = y^p with 1 < p < q and gcd(p, q) = 1,
/// parametrized by t -> (t^p, t^q).
class TorusKnotSingularity {
 public:
  /// Throws std::invalid_argument unless 1 < p < q and gcd(p, q) = 1.
  TorusKnotSingularity(unsigned p, unsigned q);

  [[nodiscard]] unsigned p() const { return p_; }
  [[nodiscard]] unsigned q() const { return q_; }

  friend bool operator==(const TorusKnotSingularity&, const TorusKnotSingularity&) = default;

 private:
  unsigned p_;
  unsigned q_;
};

/// C(p+q, p) / (p+q); the division is exact for coprime p, q.
BigInt multiplicity_closed_form(const TorusKnotSingularity& s);

/// (p+q-1)! / (p! q!), the same number written through factorials.
BigInt multiplicity_factorial_form(const TorusKnotSingularity& s);

/// Naturals outside the numerical semigroup generated by p and q, ascending.
std::vector<std::uint64_t> semigroup_gaps(const TorusKnotSingularity& s);

/// (p-1)(q-1)/2.
std::uint64_t delta_invariant(const TorusKnotSingularity& s);

/// Smallest c such that every integer >= c lies in the semigroup, found by
/// enumeration (independent of the delta formula).
std::uint64_t conductor_exponent(const TorusKnotSingularity& s);

enum class SingularityKind { node, torus_knot };

struct SingularityRecord {
  SingularityKind kind = SingularityKind::node;
  unsigned p = 0;  // torus-knot only
  unsigned q = 0;
  BigInt multiplicity;
  std::uint64_t delta = 0;

  static SingularityRecord node();
  static SingularityRecord torus_knot(const TorusKnotSingularity& s);

  [[nodiscard]] std::string describe() const;
};

/// Euler number of the compactified Jacobian of a rational curve with the
/// given singularities: the product of the local multiplicities (1 if none).
BigInt euler_compactified_jacobian(std::span<const SingularityRecord> singularities);

}  // namespace jacmult
