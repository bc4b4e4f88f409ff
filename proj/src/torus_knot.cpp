#include <numeric>
#include <stdexcept>

#include "jacmult/modspace.hpp"
#include "jacmult/polyalg.hpp"
#include "jacmult/singularity.hpp"

namespace jacmult {

TorusKnotSystem build_torus_knot_system(unsigned p, unsigned q) {
  const TorusKnotSingularity checked(p, q);  // validates (p, q)

  TorusKnotSystem sys;
  sys.p = p;
  sys.q = q;
  std::vector<std::string> names;
  for (unsigned i = 0; i + 2 <= p; ++i) {
    names.push_back("x" + std::to_string(i));
    sys.weights.push_back(p - i);
  }
  for (unsigned i = 0; i + 2 <= q; ++i) {
    names.push_back("y" + std::to_string(i));
    sys.weights.push_back(q - i);
  }
  sys.ring = Ring(names);

  std::vector<std::string> with_t = names;
  with_t.insert(with_t.begin(), "t");
  const Ring big(with_t);
  const auto order = MonomialOrder::grevlex();
  const Polynomial t = Polynomial::variable(big, "t", order);

  Polynomial f = power(t, p);
  for (unsigned i = 0; i + 2 <= p; ++i) f += Polynomial::variable(big, "x" + std::to_string(i), order) * power(t, i);
  Polynomial g = power(t, q);
  for (unsigned i = 0; i + 2 <= q; ++i) g += Polynomial::variable(big, "y" + std::to_string(i), order) * power(t, i);

  const Polynomial h = Rational(static_cast<long>(q)) * (differentiate(f, "t") * g) -
                       Rational(static_cast<long>(p)) * (differentiate(g, "t") * f);

  const std::string param[] = {"t"};
  const auto decomposition = coefficients_in(h, param);
  const unsigned top = p + q - 1;
  for (const auto& slice : decomposition.slices) {
    if (slice.monomial[0] + 2 > top) {
      throw std::logic_error("coefficient of t^" + std::to_string(slice.monomial[0]) + " does not vanish");
    }
  }
  // slices are sorted by decreasing t-power; coefficient of t^j has weight p+q-1-j
  for (const auto& slice : decomposition.slices) {
    Polynomial eq = embed(slice.coefficient, sys.ring, sys.order());
    const auto deg = weighted_degree(eq, sys.weights);
    if (!deg || *deg != top - slice.monomial[0]) {
      throw std::logic_error("torus-knot equation is not weighted-homogeneous of the expected degree");
    }
    sys.equations.push_back(std::move(eq));
    sys.equation_degrees.push_back(*deg);
  }
  if (sys.equations.size() != p + q - 2) {
    throw std::logic_error("expected " + std::to_string(p + q - 2) + " torus-knot equations, got " +
                           std::to_string(sys.equations.size()));
  }
  return sys;
}

BigInt weighted_bezout_length(std::span<const std::uint64_t> equation_degrees,
                              std::span<const unsigned> variable_weights) {
  if (equation_degrees.size() != variable_weights.size()) {
    throw std::invalid_argument("weighted Bezout needs as many equations as variables");
  }
  BigInt num = 1, den = 1;
  for (auto e : equation_degrees) {
    if (e == 0) throw std::invalid_argument("equation degrees must be positive");
    num *= static_cast<unsigned long>(e);
  }
  for (auto w : variable_weights) {
    if (w == 0) throw std::invalid_argument("variable weights must be positive");
    den *= static_cast<unsigned long>(w);
  }
  if (num % den != 0) {
    throw NonIntegralBezout("weighted Bezout quotient " + num.get_str() + "/" + den.get_str() +
                            " is not an integer");
  }
  return num / den;
}

namespace {

template <typename F>
std::size_t finite_dimension(const BasicGroebnerBasis<F>& basis) {
  const auto dim = quotient_dimension(basis);
  if (!dim) throw std::logic_error("torus-knot algebra is not zero-dimensional");
  return *dim;
}

}  // namespace

std::size_t multiplicity_via_groebner(unsigned p, unsigned q, const GroebnerOptions& options) {
  const auto sys = build_torus_knot_system(p, q);
  return finite_dimension(buchberger(sys.ideal(), options));
}

std::size_t multiplicity_via_groebner_mod_p(unsigned p, unsigned q, const GroebnerOptions& options) {
  const auto sys = build_torus_knot_system(p, q);
  return finite_dimension(buchberger(reduce_mod_prime(sys.ideal()), options));
}

}  // namespace jacmult
