#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacmult/polynomial.hpp"

namespace jacmult {

class StepLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotIsolatedAtOrigin : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultStepLimit = 10'000'000;

struct GroebnerOptions {
  /// Maximum number of single-term reduction steps before giving up.
  std::uint64_t step_limit = kDefaultStepLimit;
  /// Prune S-pairs with the coprime-lead-term and chain criteria.
  bool use_criteria = true;
};

struct LocalLengthOptions {
  unsigned cap = 50;
  std::size_t dimension_bound = 1'000'000;
  std::uint64_t step_limit = kDefaultStepLimit;
};

template <typename F>
class BasicIdeal {
 public:
  using Poly = BasicPolynomial<F>;

  BasicIdeal(Ring ring, std::vector<Poly> generators, MonomialOrder order)
      : ring_(std::move(ring)), order_(std::move(order)) {
    order_.check_compatible(ring_.size());
    if (generators.empty()) throw std::invalid_argument("ideal needs at least one generator");
    for (auto& g : generators) {
      if (!(g.ring() == ring_)) throw RingMismatch("generator outside the ideal's ring");
      if (g.is_zero()) throw std::invalid_argument("ideal generators must be nonzero");
      generators_.push_back(g.with_order(order_));
    }
  }

  /// Same ring and order as the generators; zero generators are dropped
  /// (at least one must remain).
  static BasicIdeal from_nonzero(std::vector<Poly> generators, MonomialOrder order) {
    if (generators.empty()) throw std::invalid_argument("ideal needs at least one generator");
    Ring ring = generators.front().ring();
    std::erase_if(generators, [](const Poly& p) { return p.is_zero(); });
    return BasicIdeal(std::move(ring), std::move(generators), std::move(order));
  }

  [[nodiscard]] const Ring& ring() const { return ring_; }
  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<Poly>& generators() const { return generators_; }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Poly> generators_;
};

/// Reduced, monic Gröbner basis. When `truncation()` is k > 0 the basis lives
/// in k[x]/m^k: all terms of degree >= k are identically zero.
template <typename F>
class BasicGroebnerBasis {
 public:
  using Poly = BasicPolynomial<F>;

  BasicGroebnerBasis(Ring ring, MonomialOrder order, std::vector<Poly> basis, std::uint64_t truncation = 0)
      : ring_(std::move(ring)), order_(std::move(order)), basis_(std::move(basis)), truncation_(truncation) {}

  [[nodiscard]] const Ring& ring() const { return ring_; }
  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<Poly>& basis() const { return basis_; }
  [[nodiscard]] std::uint64_t truncation() const { return truncation_; }
  [[nodiscard]] std::size_t size() const { return basis_.size(); }

  [[nodiscard]] std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> leads;
    leads.reserve(basis_.size());
    for (const auto& g : basis_) leads.push_back(g.leading_monomial());
    return leads;
  }

  /// True iff 1 lies in the ideal.
  [[nodiscard]] bool is_unit_ideal() const {
    return basis_.size() == 1 && basis_.front().leading_monomial().is_one();
  }

  friend bool operator==(const BasicGroebnerBasis&, const BasicGroebnerBasis&) = default;

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Poly> basis_;
  std::uint64_t truncation_ = 0;
};

using Ideal = BasicIdeal<Rational>;
using IdealZp = BasicIdeal<Zp>;
using GroebnerBasis = BasicGroebnerBasis<Rational>;
using GroebnerBasisZp = BasicGroebnerBasis<Zp>;

struct StandardMonomialBasis {
  bool infinite = false;
  std::vector<Monomial> monomials;  // empty when infinite
};

namespace detail {

/// Counts single-term reduction steps against a global limit.
class StepCounter {
 public:
  explicit StepCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++steps_ > limit_) throw StepLimitExceeded("Gröbner step limit of " + std::to_string(limit_) + " exceeded");
  }
  [[nodiscard]] std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
};

template <typename F>
const BasicPolynomial<F>* find_reducer(const Monomial& m, const std::vector<BasicPolynomial<F>>& polys,
                                       const std::vector<std::size_t>& active) {
  for (std::size_t i : active) {
    if (polys[i].leading_monomial().divides(m)) return &polys[i];
  }
  return nullptr;
}

/// Full reduction of p by monic reducers: no term of the result is divisible
/// by a reducer's leading monomial.
template <typename F>
BasicPolynomial<F> reduce(BasicPolynomial<F> p, const std::vector<BasicPolynomial<F>>& polys,
                          const std::vector<std::size_t>& active, std::uint64_t truncation, StepCounter& steps) {
  BasicPolynomial<F> remainder(p.ring(), p.order());
  while (!p.is_zero()) {
    const Term<F>& lead = p.leading_term();
    if (const auto* g = find_reducer(lead.monomial, polys, active)) {
      const F c = lead.coefficient / g->leading_coefficient();
      const Monomial shift = lead.monomial / g->leading_monomial();
      p.subtract_multiple(c, shift, *g, truncation);
      steps.tick();
    } else {
      remainder.push_smallest_term(p.pop_leading_term());
    }
  }
  return remainder;
}

template <typename F>
BasicPolynomial<F> s_polynomial(const BasicPolynomial<F>& f, const BasicPolynomial<F>& g, std::uint64_t truncation) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  BasicPolynomial<F> s = f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse(), truncation);
  s.subtract_multiple(g.leading_coefficient().inverse(), l / g.leading_monomial(), g, truncation);
  return s;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Möller installation of the product and chain criteria.
template <typename F>
class Buchberger {
 public:
  using Poly = BasicPolynomial<F>;

  Buchberger(const Ring& ring, const MonomialOrder& order, std::uint64_t truncation, const GroebnerOptions& options)
      : ring_(ring), order_(order), truncation_(truncation), options_(options), steps_(options.step_limit) {}

  BasicGroebnerBasis<F> run(const std::vector<Poly>& generators) {
    for (const auto& g : generators) {
      Poly p = g.with_order(order_);
      if (truncation_ != 0) p = p.truncated(truncation_);
      p = reduce(std::move(p), polys_, active_, truncation_, steps_);
      if (p.is_zero()) continue;
      insert(p.monic());
      if (is_unit()) return finish();
    }
    while (!pairs_.empty()) {
      const CriticalPair pair = select_pair();
      Poly s = s_polynomial(polys_[pair.i], polys_[pair.j], truncation_);
      Poly h = reduce(std::move(s), polys_, active_, truncation_, steps_);
      if (h.is_zero()) continue;
      insert(h.monic());
      if (is_unit()) return finish();
    }
    return finish();
  }

  [[nodiscard]] std::uint64_t steps() const { return steps_.steps(); }

 private:
  bool is_unit() const { return !polys_.empty() && polys_.back().leading_monomial().is_one(); }

  CriticalPair select_pair() {
    // Normal strategy: smallest lcm degree first, ties broken by grevlex on
    // the lcm and then by insertion indices so the run is deterministic.
    const MonomialOrder tie = MonomialOrder::grevlex();
    auto better = [&](const CriticalPair& a, const CriticalPair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (int c = tie.compare(a.lcm, b.lcm)) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    auto best = std::min_element(pairs_.begin(), pairs_.end(), better);
    CriticalPair chosen = *best;
    pairs_.erase(best);
    return chosen;
  }

  void insert(Poly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    if (!options_.use_criteria) {
      for (std::size_t g : active_) {
        pairs_.push_back({g, hi, lcm(polys_[g].leading_monomial(), lh)});
      }
      active_.push_back(hi);
      return;
    }

    // Candidate new pairs (g, h).
    std::vector<CriticalPair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, hi, lcm(polys_[g].leading_monomial(), lh)});

    // Chain criterion among the new pairs: drop (g1,h) if some other new pair's
    // lcm properly divides it; keep coprime pairs for now so they can shadow others.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& ca = candidates[a];
      const bool coprime = polys_[ca.i].leading_monomial().coprime_with(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
          if (b == a) continue;
          const auto& cb = candidates[b];
          if (!cb.lcm.divides(ca.lcm)) continue;
          // Among equal lcms keep only the first.
          if (cb.lcm == ca.lcm && b > a) continue;
          dominated = true;
        }
      }
      if (!dominated) kept.push_back(ca);
    }
    // Product criterion: coprime leading monomials reduce to zero.
    std::erase_if(kept, [&](const CriticalPair& c) { return polys_[c.i].leading_monomial().coprime_with(lh); });

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const CriticalPair& c) {
      if (!lh.divides(c.lcm)) return false;
      const Monomial li = lcm(polys_[c.i].leading_monomial(), lh);
      const Monomial lj = lcm(polys_[c.j].leading_monomial(), lh);
      return li != c.lcm && lj != c.lcm;
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].leading_monomial()); });
    active_.push_back(hi);
  }

  BasicGroebnerBasis<F> finish() {
    if (is_unit()) {
      return BasicGroebnerBasis<F>(ring_, order_, {Poly::constant(ring_, F::one(), order_)}, truncation_);
    }
    // Minimal basis: drop elements whose lead is divisible by another active lead.
    std::vector<std::size_t> minimal;
    for (std::size_t a : active_) {
      bool redundant = false;
      for (std::size_t b : active_) {
        if (a == b) continue;
        const auto& la = polys_[a].leading_monomial();
        const auto& lb = polys_[b].leading_monomial();
        if (lb.divides(la) && (lb != la || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    // Inter-reduce tails.
    std::vector<Poly> reduced;
    for (std::size_t a : minimal) {
      std::vector<std::size_t> others;
      for (std::size_t b : minimal) {
        if (b != a) others.push_back(b);
      }
      Poly g = polys_[a];
      Term<F> lead = g.pop_leading_term();
      Poly tail = reduce(std::move(g), polys_, others, truncation_, steps_);
      Poly result(ring_, order_);
      result.push_smallest_term(std::move(lead));
      for (const auto& t : tail.terms()) result.push_smallest_term(t);
      reduced.push_back(result.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& x, const Poly& y) {
      return order_.compare(x.leading_monomial(), y.leading_monomial()) < 0;
    });
    return BasicGroebnerBasis<F>(ring_, order_, std::move(reduced), truncation_);
  }

  Ring ring_;
  MonomialOrder order_;
  std::uint64_t truncation_;
  GroebnerOptions options_;
  StepCounter steps_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Reduced Gröbner basis of the ideal under its order.
template <typename F>
BasicGroebnerBasis<F> buchberger(const BasicIdeal<F>& ideal, const GroebnerOptions& options = {}) {
  detail::Buchberger<F> engine(ideal.ring(), ideal.order(), 0, options);
  return engine.run(ideal.generators());
}

/// Reduced standard basis of (I + m^k)/m^k in k[x]/m^k under the local
/// (negative degree) order, m the maximal ideal at the origin.
template <typename F>
BasicGroebnerBasis<F> truncated_local_basis(const BasicIdeal<F>& ideal, std::uint64_t k,
                                            const GroebnerOptions& options = {}) {
  if (k == 0) throw std::invalid_argument("truncation degree must be positive");
  detail::Buchberger<F> engine(ideal.ring(), MonomialOrder::local(), k, options);
  return engine.run(ideal.generators());
}

template <typename F>
BasicPolynomial<F> s_polynomial(const BasicPolynomial<F>& f, const BasicPolynomial<F>& g) {
  f.require_same_ring(g);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  return detail::s_polynomial(f, g.with_order(f.order()), 0);
}

/// Remainder of p on division by G; no term is divisible by a lead of G.
template <typename F>
BasicPolynomial<F> normal_form(const BasicPolynomial<F>& p, const BasicGroebnerBasis<F>& g,
                               std::uint64_t step_limit = kDefaultStepLimit) {
  if (!(p.ring() == g.ring())) throw RingMismatch("normal_form: ring mismatch");
  if (!(p.order() == g.order())) throw std::invalid_argument("normal_form: order mismatch");
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  detail::StepCounter steps(step_limit);
  BasicPolynomial<F> q = g.truncation() ? p.truncated(g.truncation()) : p;
  return detail::reduce(std::move(q), g.basis(), all, g.truncation(), steps);
}

/// True iff every ring variable has a pure power among the leading monomials.
template <typename F>
bool is_zero_dimensional(const BasicGroebnerBasis<F>& g) {
  if (g.truncation() != 0 || g.is_unit_ideal()) return true;
  const auto leads = g.leading_monomials();
  for (std::size_t v = 0; v < g.ring().size(); ++v) {
    const bool has_power =
        std::any_of(leads.begin(), leads.end(), [v](const Monomial& m) { return m.is_pure_power_of(v); });
    if (!has_power) return false;
  }
  return true;
}

/// Monomials outside the lead-term ideal (and, for truncated bases, of degree < k).
template <typename F>
StandardMonomialBasis standard_monomials(const BasicGroebnerBasis<F>& g, std::size_t bound = 1'000'000) {
  if (!is_zero_dimensional(g)) return {true, {}};
  const auto leads = g.leading_monomials();
  const std::size_t n = g.ring().size();
  const std::uint64_t k = g.truncation();
  auto is_standard = [&](const Monomial& m) {
    if (k != 0 && m.degree() >= k) return false;
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };

  StandardMonomialBasis result;
  const Monomial one(n);
  if (!is_standard(one)) return result;

  // Standard monomials form an order ideal, so every one is reached from 1 by
  // multiplying variables in non-decreasing index order through standard monomials.
  struct Frame {
    Monomial m;
    std::size_t min_var;
  };
  std::vector<Frame> stack{{one, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    result.monomials.push_back(f.m);
    if (result.monomials.size() > bound) {
      throw DimensionBoundExceeded("more than " + std::to_string(bound) + " standard monomials");
    }
    for (std::size_t v = f.min_var; v < n; ++v) {
      Monomial next = f.m * Monomial::variable(n, v);
      if (is_standard(next)) stack.push_back({std::move(next), v});
    }
  }
  std::sort(result.monomials.begin(), result.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return g.order().compare(a, b) < 0; });
  return result;
}

/// Vector-space dimension of the quotient, or nullopt when it is infinite.
template <typename F>
std::optional<std::size_t> quotient_dimension(const BasicGroebnerBasis<F>& g, std::size_t bound = 1'000'000) {
  auto basis = standard_monomials(g, bound);
  if (basis.infinite) return std::nullopt;
  return basis.monomials.size();
}

/// dim of the localization of k[x]/I at the origin, via the stabilizing
/// sequence dim k[x]/(I + m^k), k = 1, 2, ...
template <typename F>
std::size_t local_length_at_origin(const BasicIdeal<F>& ideal, const LocalLengthOptions& options = {}) {
  if (options.cap < 1) throw std::invalid_argument("local length cap must be at least 1");
  GroebnerOptions gb_options;
  gb_options.step_limit = options.step_limit;
  std::optional<std::size_t> previous;
  for (unsigned k = 1; k <= options.cap; ++k) {
    const auto basis = truncated_local_basis(ideal, k, gb_options);
    std::size_t dim = 0;
    try {
      dim = *quotient_dimension(basis, options.dimension_bound);
    } catch (const DimensionBoundExceeded&) {
      throw NotIsolatedAtOrigin("not isolated at origin: dim k[x]/(I + m^" + std::to_string(k) + ") exceeds " +
                                std::to_string(options.dimension_bound));
    }
    if (previous && *previous == dim) return dim;
    previous = dim;
  }
  throw NotIsolatedAtOrigin("not isolated at origin: dim k[x]/(I + m^k) did not stabilize for k <= " +
                            std::to_string(options.cap));
}

/// Reduces every generator modulo the default prime; throws UnluckyPrime.
inline IdealZp reduce_mod_prime(const Ideal& ideal) {
  std::vector<PolynomialZp> gens;
  for (const auto& g : ideal.generators()) {
    PolynomialZp r = reduce_mod_prime(g);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  if (gens.empty()) throw UnluckyPrime("every generator vanishes modulo the prime");
  return IdealZp(ideal.ring(), std::move(gens), ideal.order());
}

}  // namespace jacmult
