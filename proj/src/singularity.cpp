#include "jacmult/singularity.hpp"

#include <numeric>
#include <stdexcept>

namespace jacmult {

TorusKnotSingularity::TorusKnotSingularity(unsigned p, unsigned q) : p_(p), q_(q) {
  if (!(1 < p && p < q)) {
    throw std::invalid_argument("torus-knot singularity needs 1 < p < q, got (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus-knot singularity needs coprime p, q, got (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  }
}

BigInt multiplicity_closed_form(const TorusKnotSingularity& s) {
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), s.p() + s.q(), s.p());
  const BigInt n = s.p() + s.q();
  if (binom % n != 0) throw std::logic_error("p+q does not divide C(p+q,p)");
  return binom / n;
}

BigInt multiplicity_factorial_form(const TorusKnotSingularity& s) {
  BigInt num, pf, qf;
  mpz_fac_ui(num.get_mpz_t(), s.p() + s.q() - 1);
  mpz_fac_ui(pf.get_mpz_t(), s.p());
  mpz_fac_ui(qf.get_mpz_t(), s.q());
  const BigInt den = pf * qf;
  if (num % den != 0) throw std::logic_error("p! q! does not divide (p+q-1)!");
  return num / den;
}

namespace {

// membership table for the semigroup <p, q> on [0, limit)
std::vector<bool> semigroup_members(unsigned p, unsigned q, std::uint64_t limit) {
  std::vector<bool> in(limit, false);
  if (limit > 0) in[0] = true;
  for (std::uint64_t n = 1; n < limit; ++n) {
    in[n] = (n >= p && in[n - p]) || (n >= q && in[n - q]);
  }
  return in;
}

}  // namespace

std::vector<std::uint64_t> semigroup_gaps(const TorusKnotSingularity& s) {
  // Every integer >= p*q is representable; scan that far.
  const std::uint64_t limit = static_cast<std::uint64_t>(s.p()) * s.q();
  const auto in = semigroup_members(s.p(), s.q(), limit);
  std::vector<std::uint64_t> gaps;
  for (std::uint64_t n = 0; n < limit; ++n) {
    if (!in[n]) gaps.push_back(n);
  }
  return gaps;
}

std::uint64_t delta_invariant(const TorusKnotSingularity& s) {
  return static_cast<std::uint64_t>(s.p() - 1) * (s.q() - 1) / 2;
}

std::uint64_t conductor_exponent(const TorusKnotSingularity& s) {
  const std::uint64_t limit = static_cast<std::uint64_t>(s.p()) * s.q() + 1;
  const auto in = semigroup_members(s.p(), s.q(), limit);
  std::uint64_t c = limit;
  while (c > 0 && in[c - 1]) --c;
  return c;
}

SingularityRecord SingularityRecord::node() { return {SingularityKind::node, 0, 0, BigInt(1), 1}; }

SingularityRecord SingularityRecord::torus_knot(const TorusKnotSingularity& s) {
  return {SingularityKind::torus_knot, s.p(), s.q(), multiplicity_closed_form(s), delta_invariant(s)};
}

std::string SingularityRecord::describe() const {
  if (kind == SingularityKind::node) return "node";
  return "torus-knot(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

BigInt euler_compactified_jacobian(std::span<const SingularityRecord> singularities) {
  BigInt product = 1;
  for (const auto& s : singularities) product *= s.multiplicity;
  return product;
}

}  // namespace jacmult
