#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "jacmult/modspace.hpp"
#include "jacmult/parser.hpp"
#include "jacmult/polyalg.hpp"
#include "jacmult/singularity.hpp"

using namespace jacmult;

namespace {

StableMapProblem load(const std::string& name, std::uint64_t seed = kDefaultMarkedDataSeed) {
  const auto doc = parse_stable_map_document(read_file(std::string(JACMULT_TEST_DATA) + "/" + name));
  StableMapProblem problem{apply(normalizing_change(doc.curve), doc.curve), {}};
  problem.marked = choose_marked_data(problem.curve, seed);
  return problem;
}

RationalPlaneCurve curve_of(const char* x, const char* y, const char* z, const char* f, unsigned d) {
  const Ring st = parameter_ring();
  const Ring xyz = plane_ring();
  return {d, {parse_polynomial(x, st), parse_polynomial(y, st), parse_polynomial(z, st)}, parse_polynomial(f, xyz)};
}

}  // namespace

TEST_CASE("torus-knot (2,3) system") {
  const auto sys = build_torus_knot_system(2, 3);
  CHECK(sys.ring == Ring({"x0", "y0", "y1"}));
  CHECK(sys.weights == std::vector<unsigned>{2, 3, 2});
  CHECK(sys.equation_degrees == std::vector<std::uint64_t>{2, 3, 4});
  REQUIRE(sys.equations.size() == 3);
  const auto w = sys.order();
  CHECK(sys.equations[0] == parse_polynomial("4*y1 - 6*x0", sys.ring, w));
  CHECK(sys.equations[1] == parse_polynomial("6*y0", sys.ring, w));
  CHECK(sys.equations[2] == parse_polynomial("-2*x0*y1", sys.ring, w));
}

TEST_CASE("torus-knot systems have p+q-2 weighted-homogeneous equations") {
  for (unsigned q = 3; q <= 8; ++q) {
    for (unsigned p = 2; p < q && p + q <= 9; ++p) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      const auto sys = build_torus_knot_system(p, q);
      REQUIRE(sys.equations.size() == p + q - 2);
      std::vector<std::uint64_t> expected(p + q - 2);
      std::iota(expected.begin(), expected.end(), 2);
      CHECK(sys.equation_degrees == expected);
      for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        CHECK(weighted_degree(sys.equations[i], sys.weights) == sys.equation_degrees[i]);
      }
    }
  }
  CHECK_THROWS_AS(build_torus_knot_system(2, 4), std::invalid_argument);
}

TEST_CASE("weighted Bezout") {
  const std::uint64_t d1[] = {2, 3, 4};
  const unsigned w1[] = {2, 3, 2};
  CHECK(weighted_bezout_length(d1, w1) == 2);
  const std::uint64_t d2[] = {3, 5};
  const unsigned w2[] = {3, 5};
  CHECK(weighted_bezout_length(d2, w2) == 1);
  const std::uint64_t d3[] = {2, 3, 4, 5, 6};
  const unsigned w3[] = {2, 3, 2, 3, 4};
  CHECK(weighted_bezout_length(d3, w3) == 5);
  const std::uint64_t d4[] = {2, 3};
  const unsigned w4[] = {4, 1};
  CHECK_THROWS_AS(weighted_bezout_length(d4, w4), NonIntegralBezout);
  const unsigned w5[] = {1};
  CHECK_THROWS_AS(weighted_bezout_length(d4, w5), std::invalid_argument);
}

TEST_CASE("three multiplicity methods agree for p+q <= 9") {
  for (unsigned q = 3; q <= 8; ++q) {
    for (unsigned p = 2; p < q && p + q <= 9; ++p) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      const auto closed = multiplicity_closed_form(TorusKnotSingularity(p, q));
      const auto sys = build_torus_knot_system(p, q);
      CHECK(BigInt(static_cast<unsigned long>(multiplicity_via_groebner(p, q))) == closed);
      CHECK(BigInt(static_cast<unsigned long>(multiplicity_via_groebner_mod_p(p, q))) == closed);
      CHECK(weighted_bezout_length(sys.equation_degrees, sys.weights) == closed);
    }
  }
}

TEST_CASE("stable-map input validation") {
  const auto cusp = load("cusp.smap");
  CHECK(validate_stable_map_input(cusp).ok());
  CHECK(validate_curve(cusp.curve).ok());

  // (1 : 0) maps to (0 : 0 : 1), the cusp point
  auto bad = cusp;
  bad.marked.points[0] = {Rational(1L), Rational(0L)};
  const auto report = validate_stable_map_input(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.first_failure()->witness.find("maps to singular point") != std::string::npos);
  CHECK_THROWS_AS(build_stable_map_system(bad), InvalidStableMapProblem);

  auto wrong_f = cusp;
  wrong_f.curve.implicit_equation = parse_polynomial("z*y^2 - x^2*y", plane_ring());
  const auto r2 = validate_curve(wrong_f.curve);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.first_failure()->witness.find("F does not vanish") != std::string::npos);

  const auto common = curve_of("s^2", "s*t", "s^2", "x*z - y^2", 2);
  CHECK_FALSE(validate_curve(common).ok());

  auto repeated = cusp;
  repeated.marked.points[1] = repeated.marked.points[0];
  CHECK_FALSE(validate_stable_map_input(repeated).ok());

  auto off_line = cusp;
  off_line.marked.lines[0].coefficients = {Rational(0L), Rational(0L), Rational(1L)};
  CHECK_FALSE(validate_stable_map_input(off_line).ok());
}

TEST_CASE("parameter normalization") {
  const auto conic = curve_of("s^2", "s*t", "t^2", "x*z - y^2", 2);
  CHECK_FALSE(validate_curve(conic).ok());
  const auto change = normalizing_change(conic);
  CHECK(change.swap);
  const auto fixed = apply(change, conic);
  CHECK(validate_curve(fixed).ok());

  const auto line_z = curve_of("s", "t", "t", "y - z", 1);
  const auto c2 = normalizing_change(line_z);
  CHECK(c2.is_identity() == false);
  CHECK(validate_curve(apply(c2, line_z)).ok());

  const ParameterChange shear{false, 2};
  const ParameterPoint pt = apply(shear, ParameterPoint{Rational(1L), Rational(5L)});
  CHECK(pt.s == Rational(1L));
  CHECK(pt.t == Rational(3L));
}

TEST_CASE("stable-map system shape") {
  const auto cusp = load("cusp.smap");
  const auto sys = build_stable_map_system(cusp);
  CHECK(sys.ring.size() == 12);
  CHECK(sys.image_equations.size() == 10);
  CHECK(sys.equations().size() == 1 + 3 + 10);

  const auto conic = load("conic.smap");
  const auto sc = build_stable_map_system(conic);
  CHECK(sc.ring.size() == 9);
  CHECK(sc.equations().size() == 1 + 3 + 5);

  for (const auto* s : {&sys, &sc}) {
    const std::vector<Rational> origin(s->ring.size());
    for (const auto& e : s->equations()) CHECK(evaluate(e, origin).is_zero());
  }

  for (const auto& problem : {cusp, conic, load("node.smap")}) {
    const auto& c = problem.curve;
    const Polynomial image = substitute(c.implicit_equation, {{"x", c.parametrization[0]},
                                                              {"y", c.parametrization[1]},
                                                              {"z", c.parametrization[2]}});
    CHECK(image.is_zero());
  }
}

TEST_CASE("stable-map local lengths") {
  CHECK(stable_map_local_length(load("cusp.smap")) == 2);
  CHECK(stable_map_local_length(load("node.smap")) == 1);
  CHECK(stable_map_local_length(load("conic.smap")) == 1);
}

TEST_CASE("stable-map length does not depend on the marked data") {
  CHECK(stable_map_local_length(load("cusp.smap", 7)) == 2);
  auto problem = load("cusp.smap");
  problem.marked.points = {ParameterPoint{Rational(1L), Rational(1L)}, ParameterPoint{Rational(1L), Rational(2L)},
                           ParameterPoint{Rational(1L), Rational(-1L)}};
  // at s = 1 the image is (t^2 : t^3 : 1)
  problem.marked.lines[0].coefficients = {Rational(1L), Rational(-1L), Rational(0L)};  // through (1 : 1 : 1)
  problem.marked.lines[1].coefficients = {Rational(2L), Rational(-1L), Rational(0L)};  // through (4 : 8 : 1)
  problem.marked.lines[2].coefficients = {Rational(1L), Rational(0L), Rational(-1L)};  // through (1 : -1 : 1)
  REQUIRE(validate_stable_map_input(problem).ok());
  CHECK(stable_map_local_length(problem) == 2);
}
