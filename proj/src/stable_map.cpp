#include <algorithm>
#include <random>
#include <sstream>

#include "jacmult/modspace.hpp"
#include "jacmult/polyalg.hpp"

namespace jacmult {

namespace {

using Vec3 = std::array<Rational, 3>;

const char* const kCoords[3] = {"x", "y", "z"};

std::string show(const Vec3& v) {
  return "(" + v[0].to_string() + ":" + v[1].to_string() + ":" + v[2].to_string() + ")";
}

std::string show(const ParameterPoint& p) { return "(" + p.s.to_string() + ":" + p.t.to_string() + ")"; }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

bool proportional(const Vec3& a, const Vec3& b) {
  // cross product vanishes
  return (a[1] * b[2] - a[2] * b[1]).is_zero() && (a[2] * b[0] - a[0] * b[2]).is_zero() &&
         (a[0] * b[1] - a[1] * b[0]).is_zero();
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Univariate polynomials over Q, coefficient i = t^i, no trailing zeros.
using Univariate = std::vector<Rational>;

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Univariate univariate_remainder(Univariate a, const Univariate& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate univariate_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = univariate_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Binary form in (s, t) evaluated at s = 1, as a polynomial in t.
Univariate dehomogenize(const Polynomial& form) {
  Univariate u;
  for (const auto& term : form.terms()) {
    const std::size_t e = term.monomial[1];
    if (u.size() <= e) u.resize(e + 1);
    u[e] += term.coefficient;
  }
  trim(u);
  return u;
}

bool is_form_of_degree(const Polynomial& p, unsigned d) {
  return std::all_of(p.terms().begin(), p.terms().end(), [d](const auto& t) { return t.monomial.degree() == d; });
}

Vec3 image_of(const RationalPlaneCurve& c, const ParameterPoint& pt) {
  const Rational point[] = {pt.s, pt.t};
  return {evaluate(c.parametrization[0], point), evaluate(c.parametrization[1], point),
          evaluate(c.parametrization[2], point)};
}

Vec3 gradient_at(const Polynomial& f, const Vec3& at) {
  Vec3 g;
  for (int i = 0; i < 3; ++i) g[i] = evaluate(differentiate(f, kCoords[i]), at);
  return g;
}

void add(ValidationReport& r, std::string name, bool passed, std::string witness = {}) {
  r.checks.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
}

// Appends the curve checks; returns true when the curve is usable for point checks.
bool check_curve(const RationalPlaneCurve& c, ValidationReport& r) {
  const unsigned d = c.degree;
  bool forms_ok = d >= 1;
  std::string witness = d >= 1 ? "" : "degree must be positive";
  for (int i = 0; i < 3 && forms_ok; ++i) {
    const auto& f = c.parametrization[i];
    if (!(f.ring() == parameter_ring())) {
      forms_ok = false;
      witness = std::string("param_") + kCoords[i] + " is not in the ring (s,t)";
    } else if (f.is_zero() || !is_form_of_degree(f, d)) {
      forms_ok = false;
      witness = std::string("param_") + kCoords[i] + " = " + to_string(f) + " is not a nonzero form of degree " +
                std::to_string(d);
    }
  }
  add(r, "parametrization is a triple of binary forms of degree d", forms_ok, witness);

  const auto& F = c.implicit_equation;
  bool implicit_ok = true;
  if (!(F.ring() == plane_ring())) {
    implicit_ok = false;
    witness = "implicit equation is not in the ring (x,y,z)";
  } else if (F.is_zero() || !is_form_of_degree(F, d)) {
    implicit_ok = false;
    witness = "F = " + to_string(F) + " is not a nonzero form of degree " + std::to_string(d);
  }
  add(r, "implicit equation F is a form of degree d", implicit_ok, witness);

  if (!forms_ok || !implicit_ok) {
    add(r, "parametrization has no common factor", false, "skipped: malformed input");
    add(r, "F vanishes on parametrization", false, "skipped: malformed input");
    add(r, "param_z contains s^d", false, "skipped: malformed input");
    return false;
  }

  // A common factor of binary forms means a common root, either at (0:1) or at
  // a root of the dehomogenized gcd.
  const Rational at_infinity[] = {Rational(0L), Rational(1L)};
  const bool common_at_infinity = std::all_of(c.parametrization.begin(), c.parametrization.end(),
                                              [&](const Polynomial& f) { return evaluate(f, at_infinity).is_zero(); });
  Univariate g = dehomogenize(c.parametrization[0]);
  g = univariate_gcd(g, dehomogenize(c.parametrization[1]));
  g = univariate_gcd(g, dehomogenize(c.parametrization[2]));
  const bool coprime = !common_at_infinity && g.size() == 1;
  add(r, "parametrization has no common factor", coprime,
      common_at_infinity ? "all forms vanish at (0:1)" : "common factor of degree " + std::to_string(g.size() - 1));

  std::map<std::string, Polynomial> bindings;
  for (int i = 0; i < 3; ++i) bindings.emplace(kCoords[i], c.parametrization[i]);
  const Polynomial composed = substitute(F, bindings);
  add(r, "F vanishes on parametrization", composed.is_zero(),
      "F does not vanish on parametrization: F(param) = " + to_string(composed));

  const Monomial sd({d, 0U});
  const bool has_sd = !c.parametrization[2].coefficient(sd).is_zero();
  add(r, "param_z contains s^d", has_sd,
      "coefficient of s^" + std::to_string(d) + " in param_z is zero (normalize parameter coordinates first)");
  return coprime && composed.is_zero();
}

}  // namespace

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "pass" : "FAIL") << "  " << c.name;
    if (!c.passed) os << ": " << c.witness;
    os << '\n';
  }
  return os.str();
}

InvalidStableMapProblem::InvalidStableMapProblem(ValidationReport report)
    : std::invalid_argument("invalid stable-map problem: " +
                            (report.first_failure() ? report.first_failure()->name + ": " + report.first_failure()->witness
                                                    : std::string("unknown"))),
      report_(std::move(report)) {}

Ring parameter_ring() {
  static const Ring ring({"s", "t"});
  return ring;
}

Ring plane_ring() {
  static const Ring ring({"x", "y", "z"});
  return ring;
}

ValidationReport validate_curve(const RationalPlaneCurve& curve) {
  ValidationReport r;
  check_curve(curve, r);
  return r;
}

ValidationReport validate_stable_map_input(const StableMapProblem& problem) {
  ValidationReport r;
  const bool curve_ok = check_curve(problem.curve, r);
  const auto& marked = problem.marked;

  for (int i = 0; i < 3; ++i) {
    const std::string tag = "marked point " + std::to_string(i + 1);
    const auto& pt = marked.points[i];
    const bool nonzero = !(pt.s.is_zero() && pt.t.is_zero());
    add(r, tag + " is a point of P^1", nonzero, "(0:0) is not a point");
    for (int j = 0; j < i; ++j) {
      const auto& other = marked.points[j];
      const bool distinct = !(pt.s * other.t - pt.t * other.s).is_zero();
      add(r, tag + " differs from marked point " + std::to_string(j + 1), distinct,
          show(pt) + " = " + show(other));
    }
    if (!curve_ok || !nonzero) {
      add(r, tag + " maps to a smooth point", false, "skipped: invalid curve or point");
      add(r, "marked line " + std::to_string(i + 1) + " passes through the image point", false, "skipped");
      add(r, "marked line " + std::to_string(i + 1) + " is transversal", false, "skipped");
      continue;
    }
    const Vec3 image = image_of(problem.curve, pt);
    const Vec3 grad = gradient_at(problem.curve.implicit_equation, image);
    const bool smooth = !is_zero(grad);
    add(r, tag + " maps to a smooth point", smooth,
        "marked point maps to singular point: " + show(pt) + " -> " + show(image));

    const Vec3& line = marked.lines[i].coefficients;
    const std::string ltag = "marked line " + std::to_string(i + 1);
    const bool through = !is_zero(line) && dot(line, image).is_zero();
    add(r, ltag + " passes through the image point", through,
        "line " + show(line) + " misses " + show(image));
    const bool transversal = !is_zero(line) && smooth && !proportional(line, grad);
    add(r, ltag + " is transversal", transversal,
        smooth ? "line " + show(line) + " is the tangent line at " + show(image) : "no tangent at a singular point");
  }
  return r;
}

MarkedData choose_marked_data(const RationalPlaneCurve& curve, std::uint64_t seed, unsigned attempts) {
  if (auto report = validate_curve(curve); !report.ok()) throw InvalidStableMapProblem(std::move(report));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-4, 4);
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    MarkedData m;
    for (int i = 0; i < 3; ++i) {
      m.points[i] = {Rational(1L), Rational(small(rng))};
      const Vec3 image = image_of(curve, m.points[i]);
      Vec3 direction;
      for (auto& c : direction) c = Rational(small(rng));
      m.lines[i].coefficients = cross(image, direction);
    }
    if (validate_stable_map_input({curve, m}).ok()) return m;
  }
  throw std::runtime_error("no valid marked data found after " + std::to_string(attempts) + " attempts");
}

std::vector<Polynomial> StableMapSystem::equations() const {
  std::vector<Polynomial> eqs{gauge};
  eqs.insert(eqs.end(), point_conditions.begin(), point_conditions.end());
  eqs.insert(eqs.end(), image_equations.begin(), image_equations.end());
  return eqs;
}

Ideal StableMapSystem::ideal() const { return Ideal::from_nonzero(equations(), MonomialOrder::grevlex()); }

StableMapSystem build_stable_map_system(const StableMapProblem& problem) {
  if (auto report = validate_stable_map_input(problem); !report.ok()) throw InvalidStableMapProblem(std::move(report));
  const auto& curve = problem.curve;
  const unsigned d = curve.degree;
  const auto order = MonomialOrder::grevlex();

  std::vector<std::string> perturbation;
  for (const char* c : kCoords) {
    for (unsigned i = 0; i <= d; ++i) perturbation.push_back(c + std::to_string(i));
  }
  std::vector<std::string> all{"s", "t"};
  all.insert(all.end(), perturbation.begin(), perturbation.end());
  const Ring big(all);

  StableMapSystem sys;
  sys.degree = d;
  sys.ring = Ring(perturbation);

  // x = xbar + sum_i x_i s^i t^(d-i), likewise y and z
  std::array<Polynomial, 3> perturbed{Polynomial(big, order), Polynomial(big, order), Polynomial(big, order)};
  for (int c = 0; c < 3; ++c) {
    perturbed[c] = embed(curve.parametrization[c], big, order);
    for (unsigned i = 0; i <= d; ++i) {
      std::vector<Monomial::Exponent> e(big.size(), 0);
      e[0] = i;
      e[1] = d - i;
      e[big.require_index(kCoords[c] + std::to_string(i))] = 1;
      perturbed[c] += Polynomial::term(big, Monomial(std::move(e)), Rational::one(), order);
    }
  }

  sys.gauge = Polynomial::variable(sys.ring, "z" + std::to_string(d), order);

  for (int i = 0; i < 3; ++i) {
    const auto& pt = problem.marked.points[i];
    const auto& line = problem.marked.lines[i].coefficients;
    Polynomial condition(sys.ring, order);
    for (int c = 0; c < 3; ++c) {
      const Polynomial at_point = substitute(perturbed[c], {{"s", Polynomial::constant(big, pt.s, order)},
                                                            {"t", Polynomial::constant(big, pt.t, order)}});
      condition += embed(at_point, sys.ring, order).scaled(line[c]);
    }
    sys.point_conditions[i] = std::move(condition);
  }

  std::map<std::string, Polynomial> bindings;
  for (int c = 0; c < 3; ++c) bindings.emplace(kCoords[c], perturbed[c]);
  const Polynomial composed = substitute(curve.implicit_equation, bindings);
  const std::string params[] = {"s", "t"};
  const auto decomposition = coefficients_in(composed, params);
  const unsigned top = d * d;
  sys.image_equations.assign(top + 1, Polynomial(sys.ring, order));
  for (const auto& slice : decomposition.slices) {
    if (slice.monomial.degree() != top) throw std::logic_error("composed map is not a form of degree d^2");
    sys.image_equations[slice.monomial[1]] = slice.coefficient.with_order(order);
  }
  return sys;
}

std::string ParameterChange::describe() const {
  if (swap) return "swap s,t";
  if (shear != 0) return "t -> t + " + std::to_string(shear) + "*s";
  return "identity";
}

ParameterChange normalizing_change(const RationalPlaneCurve& curve) {
  const auto& z = curve.parametrization[2];
  if (z.is_zero()) return {};
  auto value_at = [&](long s, long t) {
    const Rational point[] = {Rational(s), Rational(t)};
    return evaluate(z, point);
  };
  if (!value_at(1, 0).is_zero()) return {};
  if (!value_at(0, 1).is_zero()) return {true, 0};
  // a nonzero form of degree d has at most d roots on the line s = 1
  for (long c = 1;; ++c) {
    if (!value_at(1, c).is_zero()) return {false, c};
  }
}

RationalPlaneCurve apply(const ParameterChange& change, const RationalPlaneCurve& curve) {
  if (change.is_identity()) return curve;
  const Ring ring = parameter_ring();
  const auto order = MonomialOrder::grevlex();
  const Polynomial s = Polynomial::variable(ring, "s", order);
  const Polynomial t = Polynomial::variable(ring, "t", order);
  std::map<std::string, Polynomial> bindings;
  if (change.swap) {
    bindings = {{"s", t}, {"t", s}};
  } else {
    bindings = {{"s", s}, {"t", t + s.scaled(Rational(change.shear))}};
  }
  RationalPlaneCurve out = curve;
  for (auto& f : out.parametrization) {
    if (f.ring() == ring) f = substitute(f, bindings);
  }
  return out;
}

ParameterPoint apply(const ParameterChange& change, const ParameterPoint& point) {
  if (change.swap) return {point.t, point.s};
  return {point.s, point.t - Rational(change.shear) * point.s};
}

StableMapProblem normalize_parameter_coordinates(const StableMapProblem& problem) {
  const ParameterChange change = normalizing_change(problem.curve);
  StableMapProblem out{apply(change, problem.curve), problem.marked};
  for (auto& p : out.marked.points) p = apply(change, p);
  return out;
}

std::size_t stable_map_local_length(const StableMapProblem& problem, const LocalLengthOptions& options) {
  return local_length_at_origin(build_stable_map_system(normalize_parameter_coordinates(problem)).ideal(), options);
}

}  // namespace jacmult
