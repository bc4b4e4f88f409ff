#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacmult/groebner.hpp"
#include "jacmult/polynomial.hpp"

namespace jacmult {

// ---------------------------------------------------------------------------
// Torus-knot singularity x^q = y^p: deformations t -> (f(t), g(t)) with
//   f = t^p + sum_{i<=p-2} x_i t^i,   g = t^q + sum_{i<=q-2} y_i t^i
// lying on the curve are cut out by the t-coefficients of q f' g - p g' f.
// ---------------------------------------------------------------------------

struct TorusKnotSystem {
  unsigned p = 0;
  unsigned q = 0;
  Ring ring;                     // x0..x_{p-2}, y0..y_{q-2}
  std::vector<unsigned> weights; // wt(x_i) = p - i, wt(y_i) = q - i
  /// Coefficient of t^j for j = p+q-3 down to 0, so degrees ascend 2..p+q-1.
  std::vector<Polynomial> equations;
  std::vector<std::uint64_t> equation_degrees;

  [[nodiscard]] MonomialOrder order() const { return MonomialOrder::weighted(weights); }
  [[nodiscard]] Ideal ideal() const { return Ideal(ring, equations, order()); }
};

/// Throws std::invalid_argument unless 1 < p < q and gcd(p, q) = 1.
TorusKnotSystem build_torus_knot_system(unsigned p, unsigned q);

class NonIntegralBezout : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// prod(equation_degrees) / prod(variable_weights); throws NonIntegralBezout
/// when the quotient is not an integer.
BigInt weighted_bezout_length(std::span<const std::uint64_t> equation_degrees,
                              std::span<const unsigned> variable_weights);

/// Length of the torus-knot algebra from its reduced Gröbner basis under the
/// weighted order.
std::size_t multiplicity_via_groebner(unsigned p, unsigned q, const GroebnerOptions& options = {});

/// The same length computed over Z/32003.
std::size_t multiplicity_via_groebner_mod_p(unsigned p, unsigned q, const GroebnerOptions& options = {});

// ---------------------------------------------------------------------------
// Stable maps to a rational plane curve C of degree d.
// ---------------------------------------------------------------------------

/// Point (s : t) of the parameter line.
struct ParameterPoint {
  Rational s;
  Rational t;
};

/// Line a*x + b*y + c*z = 0 in the plane.
struct PlaneLine {
  std::array<Rational, 3> coefficients;
};

struct MarkedData {
  std::array<ParameterPoint, 3> points;
  std::array<PlaneLine, 3> lines;
};

struct RationalPlaneCurve {
  unsigned degree = 0;
  /// Binary forms of degree d in the ring (s, t).
  std::array<Polynomial, 3> parametrization{Polynomial(Ring()), Polynomial(Ring()), Polynomial(Ring())};
  /// Homogeneous equation of degree d in the ring (x, y, z).
  Polynomial implicit_equation{Ring()};
};

struct StableMapProblem {
  RationalPlaneCurve curve;
  MarkedData marked;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // set on failure
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] const ValidationCheck* first_failure() const;
  [[nodiscard]] std::string summary() const;
};

class InvalidStableMapProblem : public std::invalid_argument {
 public:
  explicit InvalidStableMapProblem(ValidationReport report);
  [[nodiscard]] const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Change of coordinates on the parameter line, old = phi(new):
/// swap: (s, t) = (t', s');  shear c: (s, t) = (s', t' + c s').
struct ParameterChange {
  bool swap = false;
  long shear = 0;

  [[nodiscard]] bool is_identity() const { return !swap && shear == 0; }
  [[nodiscard]] std::string describe() const;
};

/// Identity if param_z already has an s^d term, else a swap (when param_z has
/// a t^d term) or the smallest positive shear giving param_z an s^d term.
ParameterChange normalizing_change(const RationalPlaneCurve& curve);
RationalPlaneCurve apply(const ParameterChange& change, const RationalPlaneCurve& curve);
/// New coordinates of a point given in the old ones.
ParameterPoint apply(const ParameterChange& change, const ParameterPoint& point);
/// Applies normalizing_change to the curve and the marked points (lines are unaffected).
StableMapProblem normalize_parameter_coordinates(const StableMapProblem& problem);

/// Ring (s, t) for parametrizations and (x, y, z) for implicit equations.
Ring parameter_ring();
Ring plane_ring();

/// Checks of the curve alone (forms, coprimality, F o param = 0, s^d in z).
ValidationReport validate_curve(const RationalPlaneCurve& curve);

/// Every invariant of the problem, including the marked points and lines.
ValidationReport validate_stable_map_input(const StableMapProblem& problem);

inline constexpr std::uint64_t kDefaultMarkedDataSeed = 20240517;

/// Deterministically draws small-integer marked points and lines until the
/// problem validates. Throws InvalidStableMapProblem if the curve itself is
/// invalid, std::runtime_error if no choice is found.
MarkedData choose_marked_data(const RationalPlaneCurve& curve, std::uint64_t seed = kDefaultMarkedDataSeed,
                              unsigned attempts = 2000);

struct StableMapSystem {
  unsigned degree = 0;
  Ring ring;  // x0..xd, y0..yd, z0..zd
  Polynomial gauge{Ring()};
  std::array<Polynomial, 3> point_conditions{Polynomial(Ring()), Polynomial(Ring()), Polynomial(Ring())};
  /// Coefficients of s^{d^2-j} t^j, j = 0..d^2, of F on the perturbed map (zeros kept).
  std::vector<Polynomial> image_equations;

  [[nodiscard]] std::vector<Polynomial> equations() const;
  [[nodiscard]] Ideal ideal() const;
};

/// Throws InvalidStableMapProblem when validation fails.
StableMapSystem build_stable_map_system(const StableMapProblem& problem);

/// Length at the origin (the normalization map) of the stable-map scheme.
/// Parameter coordinates are normalized first, so param_z need not contain s^d.
std::size_t stable_map_local_length(const StableMapProblem& problem, const LocalLengthOptions& options = {});

}  // namespace jacmult
