#include <doctest.h>

#include "jacmult/groebner.hpp"
#include "jacmult/modspace.hpp"
#include "jacmult/parser.hpp"
#include "oracles.hpp"

using namespace jacmult;

namespace {

Ideal ideal_of(const Ring& ring, std::initializer_list<const char*> gens,
               const MonomialOrder& order = MonomialOrder::grevlex()) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, ring, order));
  return Ideal(ring, ps, order);
}

template <typename F>
void check_all_s_polynomials_reduce_to_zero(const BasicGroebnerBasis<F>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      REQUIRE(normal_form(s_polynomial(g.basis()[i], g.basis()[j]), g).is_zero());
    }
  }
}

template <typename F>
void check_reduced(const BasicGroebnerBasis<F>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    REQUIRE(g.basis()[i].leading_coefficient().is_one());
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g.basis()[j].terms()) REQUIRE_FALSE(g.basis()[i].leading_monomial().divides(t.monomial));
    }
  }
}

}  // namespace

TEST_CASE("normal_form") {
  const Ring r({"x", "y"});
  const auto order = MonomialOrder::grevlex();
  const auto gx = buchberger(ideal_of(r, {"x"}));
  CHECK(normal_form(parse_polynomial("x^2", r), gx).is_zero());

  const auto g = buchberger(ideal_of(r, {"x^2 - y"}));
  CHECK(normal_form(parse_polynomial("x^2 + y", r), g) == parse_polynomial("2*y", r));
  CHECK(normal_form(parse_polynomial("1", r), g) == parse_polynomial("1", r));

  CHECK_THROWS_AS(normal_form(parse_polynomial("x", Ring({"x"})), g), RingMismatch);
  CHECK_THROWS_AS(normal_form(parse_polynomial("x", r, MonomialOrder::lex()), g), std::invalid_argument);
  (void)order;
}

TEST_CASE("buchberger examples") {
  const Ring r({"x", "y"});
  const auto g1 = buchberger(ideal_of(r, {"x", "y"}));
  REQUIRE(g1.size() == 2);
  CHECK(g1.basis()[0] == parse_polynomial("y", r));
  CHECK(g1.basis()[1] == parse_polynomial("x", r));

  const auto g2 = buchberger(ideal_of(r, {"x^2 - y", "y^2"}));
  REQUIRE(g2.size() == 2);
  CHECK(g2.basis()[0] == parse_polynomial("y^2", r));
  CHECK(g2.basis()[1] == parse_polynomial("x^2 - y", r));
  CHECK(normal_form(s_polynomial(g2.basis()[0], g2.basis()[1]), g2).is_zero());

  // Torus-knot (2,3) system; hand elimination gives k[y1]/(y1^2).
  const Ring tk({"x0", "y0", "y1"});
  const auto w = MonomialOrder::weighted({2, 3, 2});
  const auto g3 = buchberger(ideal_of(tk, {"4*y1 - 6*x0", "6*y0", "-2*x0*y1"}, w));
  const auto leads = g3.leading_monomials();
  CHECK(leads == std::vector<Monomial>{Monomial{1, 0, 0}, Monomial{0, 1, 0}, Monomial{0, 0, 2}});
  CHECK(quotient_dimension(g3) == 2u);
  CHECK(is_zero_dimensional(g3));
  check_all_s_polynomials_reduce_to_zero(g3);
}

TEST_CASE("buchberger handles the unit ideal and redundant generators") {
  const Ring r({"x", "y"});
  const auto g = buchberger(ideal_of(r, {"x*y - 1", "x", "y^3 + x"}));
  CHECK(g.is_unit_ideal());
  CHECK(quotient_dimension(g) == 0u);
  const auto h = buchberger(ideal_of(r, {"x^2", "x^2", "x^3 + x^2", "y"}));
  CHECK(h.size() == 2);
  CHECK(quotient_dimension(h) == 2u);
}

TEST_CASE("quotient_dimension and is_zero_dimensional") {
  const Ring r({"x", "y"});
  CHECK(quotient_dimension(buchberger(ideal_of(r, {"x", "y"}))) == 1u);
  const auto g = buchberger(ideal_of(r, {"x^2 - y", "y^2"}));
  CHECK(quotient_dimension(g) == 4u);
  const auto sm = standard_monomials(g);
  REQUIRE(sm.monomials.size() == 4);
  CHECK(sm.monomials[0].is_one());
  const auto xy = buchberger(ideal_of(r, {"x*y"}));
  CHECK_FALSE(quotient_dimension(xy).has_value());
  CHECK(standard_monomials(xy).infinite);
  CHECK_FALSE(is_zero_dimensional(xy));
  CHECK(is_zero_dimensional(buchberger(ideal_of(r, {"x^2", "y^3"}))));
  CHECK_THROWS_AS(standard_monomials(buchberger(ideal_of(r, {"x^20", "y^20"})), 100), DimensionBoundExceeded);
}

TEST_CASE("step limit") {
  GroebnerOptions tiny;
  tiny.step_limit = 3;
  CHECK_THROWS_AS(buchberger(build_torus_knot_system(4, 5).ideal(), tiny), StepLimitExceeded);
  LocalLengthOptions local;
  local.step_limit = 3;
  CHECK_THROWS_AS(local_length_at_origin(build_torus_knot_system(4, 5).ideal(), local), StepLimitExceeded);
}

TEST_CASE("buchberger is deterministic") {
  const auto sys = build_torus_knot_system(3, 5);
  const auto a = buchberger(sys.ideal());
  const auto b = buchberger(sys.ideal());
  CHECK(a == b);
}

TEST_CASE("random zero-dimensional ideals against the linear-algebra oracle") {
  testing::RandomPolynomials gen(31337);
  const Ring rings[] = {Ring({"x"}), Ring({"x", "y"}), Ring({"x", "y", "z"})};
  for (int trial = 0; trial < 30; ++trial) {
    CAPTURE(trial);
    const Ring& ring = rings[trial % 3];
    std::vector<unsigned> powers;
    const auto gens = gen.zero_dimensional_generators(ring, ring.size() == 3 ? 3 : 4, powers);
    const Ideal ideal = Ideal::from_nonzero(gens, MonomialOrder::grevlex());
    const auto g = buchberger(ideal);
    check_reduced(g);
    check_all_s_polynomials_reduce_to_zero(g);
    for (const auto& f : gens) REQUIRE(normal_form(f, g).is_zero());

    const auto dim = quotient_dimension(g);
    REQUIRE(dim.has_value());
    std::uint64_t bound = 0;
    for (unsigned a : powers) bound += a;
    bound += 3;
    const std::size_t oracle = testing::macaulay_corank(gens, bound, false);
    CHECK(testing::macaulay_corank(gens, bound + 1, false) == oracle);
    CHECK(*dim == oracle);

    GroebnerOptions plain;
    plain.use_criteria = false;
    CHECK(buchberger(ideal, plain) == g);

    CHECK(quotient_dimension(buchberger(reduce_mod_prime(ideal))) == dim);
  }
}

TEST_CASE("truncated local bases agree with the dense oracle") {
  testing::RandomPolynomials gen(4242);
  const Ring r({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    std::vector<Polynomial> gens;
    const std::size_t count = 1 + gen.index(3);
    for (std::size_t i = 0; i < count; ++i) {
      Polynomial p = gen.polynomial(r, 3, 4);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const Ideal ideal = Ideal::from_nonzero(gens, MonomialOrder::grevlex());
    for (unsigned k = 1; k <= 4; ++k) {
      const auto g = truncated_local_basis(ideal, k);
      const std::size_t dim = *quotient_dimension(g);
      REQUIRE(dim == testing::truncated_dimension_oracle(gens, k));
      GroebnerOptions plain;
      plain.use_criteria = false;
      REQUIRE(*quotient_dimension(truncated_local_basis(ideal, k, plain)) == dim);
      check_all_s_polynomials_reduce_to_zero(g);
    }
  }
}

TEST_CASE("local_length_at_origin") {
  const Ring xy({"x", "y"});
  CHECK(local_length_at_origin(ideal_of(xy, {"x^2", "y"})) == 2u);

  const Ring x({"x"});
  const Ideal parabola = ideal_of(x, {"x^2 - x"});
  CHECK(quotient_dimension(buchberger(parabola)) == 2u);
  CHECK(local_length_at_origin(parabola) == 1u);

  CHECK_THROWS_AS(local_length_at_origin(ideal_of(xy, {"x*y"})), NotIsolatedAtOrigin);
  LocalLengthOptions small;
  small.dimension_bound = 10;
  CHECK_THROWS_AS(local_length_at_origin(ideal_of(xy, {"x*y"}), small), NotIsolatedAtOrigin);
  LocalLengthOptions zero_cap;
  zero_cap.cap = 0;
  CHECK_THROWS_AS(local_length_at_origin(ideal_of(xy, {"x"}), zero_cap), std::invalid_argument);

  // origin not on the variety: the local ring is zero
  CHECK(local_length_at_origin(ideal_of(x, {"x - 1"})) == 0u);
  // a double point at the origin plus two points elsewhere
  CHECK(local_length_at_origin(ideal_of(xy, {"x^2*(x - 1)", "y - x"})) == 2u);
  CHECK(local_length_at_origin(ideal_of(xy, {"y^2 - x^3", "x*y"})) == 5u);
}

TEST_CASE("weighted-homogeneous ideals are supported at the origin") {
  for (auto [p, q] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 4u}, {2u, 7u}, {3u, 5u}}) {
    CAPTURE(p);
    CAPTURE(q);
    const auto sys = build_torus_knot_system(p, q);
    const auto dim = quotient_dimension(buchberger(sys.ideal()));
    REQUIRE(dim.has_value());
    CHECK(local_length_at_origin(sys.ideal()) == *dim);
    CHECK(local_length_at_origin(reduce_mod_prime(sys.ideal())) == *dim);
  }
  const Ring r({"x", "y"});
  const auto w = MonomialOrder::weighted({2, 3});
  const Ideal cusp = ideal_of(r, {"x^3 - y^2", "x^2*y"}, w);
  CHECK(local_length_at_origin(cusp) == *quotient_dimension(buchberger(cusp)));
}
