#include "jacmult/polyalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacmult {

Polynomial differentiate(const Polynomial& p, std::string_view variable) {
  const std::size_t v = p.ring().require_index(variable);
  std::vector<Term<Rational>> out;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial[v];
    if (e == 0) continue;
    std::vector<Monomial::Exponent> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[v] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coefficient * Rational(static_cast<long>(e))});
  }
  return Polynomial::from_terms(p.ring(), std::move(out), p.order());
}

Polynomial power(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.ring(), Rational::one(), p.order());
  Polynomial base = p;
  for (unsigned e = exponent; e != 0; e >>= 1) {
    if (e & 1U) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings) {
  for (const auto& [name, _] : bindings) p.ring().require_index(name);
  if (bindings.empty()) return p;

  const Polynomial& first = bindings.begin()->second;
  const Ring& target = first.ring();
  const MonomialOrder& order = first.order();
  for (const auto& [name, image] : bindings) {
    if (!(image.ring() == target)) throw RingMismatch("inconsistent target rings in substitution");
  }

  // image of every source variable, in the target ring
  std::vector<Polynomial> images;
  images.reserve(p.ring().size());
  for (std::size_t i = 0; i < p.ring().size(); ++i) {
    const auto& name = p.ring().name(i);
    if (auto it = bindings.find(name); it != bindings.end()) {
      images.push_back(it->second.with_order(order));
    } else if (target.contains(name)) {
      images.push_back(Polynomial::variable(target, name, order));
    } else {
      images.push_back(Polynomial(target, order));  // only an error if actually used
    }
  }

  std::vector<std::map<unsigned, Polynomial>> power_cache(p.ring().size());
  auto image_power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = power_cache[var];
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    return cache.emplace(e, power(images[var], e)).first->second;
  };

  Polynomial result(target, order);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coefficient, order);
    for (std::size_t i = 0; i < p.ring().size(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (!bindings.contains(p.ring().name(i)) && !target.contains(p.ring().name(i))) {
        throw RingMismatch("unbound variable '" + p.ring().name(i) + "' missing from target ring");
      }
      term = term * image_power(i, e);
    }
    result += term;
  }
  return result;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.ring().size()) throw RingMismatch("evaluation point has wrong dimension");
  Rational total;
  for (const auto& t : p.terms()) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (Monomial::Exponent e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial embed(const Polynomial& p, const Ring& target, const MonomialOrder& order) {
  std::vector<std::optional<std::size_t>> position(p.ring().size());
  for (std::size_t i = 0; i < p.ring().size(); ++i) position[i] = target.index_of(p.ring().name(i));
  std::vector<Term<Rational>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Exponent> exps(target.size(), 0);
    for (std::size_t i = 0; i < p.ring().size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!position[i]) throw RingMismatch("variable '" + p.ring().name(i) + "' missing from target ring");
      exps[*position[i]] = t.monomial[i];
    }
    out.push_back({Monomial(std::move(exps)), t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(out), order);
}

CoefficientDecomposition coefficients_in(const Polynomial& p, std::span<const std::string> params) {
  if (params.empty()) throw std::invalid_argument("coefficients_in needs at least one parameter");
  std::vector<std::size_t> param_pos;
  for (const auto& name : params) {
    const std::size_t i = p.ring().require_index(name);
    if (std::find(param_pos.begin(), param_pos.end(), i) != param_pos.end())
      throw std::invalid_argument("duplicate parameter '" + name + "'");
    param_pos.push_back(i);
  }
  std::vector<std::size_t> rest_pos;
  std::vector<std::string> rest_names;
  for (std::size_t i = 0; i < p.ring().size(); ++i) {
    if (std::find(param_pos.begin(), param_pos.end(), i) == param_pos.end()) {
      rest_pos.push_back(i);
      rest_names.push_back(p.ring().name(i));
    }
  }

  CoefficientDecomposition d{Ring(std::vector<std::string>(params.begin(), params.end())),
                             Ring(std::move(rest_names)), {}};
  std::map<Monomial, std::vector<Term<Rational>>> grouped;
  for (const auto& t : p.terms()) {
    grouped[t.monomial.restrict_to(param_pos)].push_back({t.monomial.restrict_to(rest_pos), t.coefficient});
  }
  const auto param_order = MonomialOrder::grevlex();
  for (auto& [m, terms] : grouped) {
    d.slices.push_back({m, Polynomial::from_terms(d.remaining_ring, std::move(terms), p.order().kind() == OrderKind::weighted
                                                                                        ? MonomialOrder::grevlex()
                                                                                        : p.order())});
  }
  std::sort(d.slices.begin(), d.slices.end(), [&](const CoefficientSlice& a, const CoefficientSlice& b) {
    return param_order.greater(a.monomial, b.monomial);
  });
  return d;
}

Polynomial recombine(const CoefficientDecomposition& d, const Ring& ring, const MonomialOrder& order) {
  Polynomial total(ring, order);
  for (const auto& slice : d.slices) {
    const Polynomial mono =
        embed(Polynomial::term(d.parameter_ring, slice.monomial, Rational::one()), ring, order);
    total += mono * embed(slice.coefficient, ring, order);
  }
  return total;
}

Polynomial determinant(const PolynomialMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  if (n == 1) return m[0][0];
  Polynomial det(m[0][0].ring(), m[0][0].order());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolynomialMatrix sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      sub.push_back(std::move(row));
    }
    const Polynomial cofactor = m[0][col] * determinant(sub);
    if (col % 2 == 0) {
      det += cofactor;
    } else {
      det -= cofactor;
    }
  }
  return det;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Polynomial> minors_ideal(const PolynomialMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  if (k < 1 || k > n) throw std::invalid_argument("minor size out of range");
  for (const auto& row : m) {
    for (const auto& entry : row) entry.require_same_ring(m[0][0]);
  }

  std::vector<std::vector<std::size_t>> index_sets;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, index_sets);

  std::vector<Polynomial> minors;
  for (const auto& rows : index_sets) {
    for (const auto& cols : index_sets) {
      PolynomialMatrix sub;
      for (std::size_t r : rows) {
        std::vector<Polynomial> row;
        for (std::size_t c : cols) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial minor = determinant(sub);
      if (minor.is_zero()) continue;
      if (std::find(minors.begin(), minors.end(), minor) == minors.end()) minors.push_back(std::move(minor));
    }
  }
  return minors;
}

std::optional<std::uint64_t> weighted_degree(const Polynomial& p, std::span<const unsigned> weights) {
  if (weights.size() != p.ring().size()) throw std::invalid_argument("weight vector length differs from ring size");
  if (p.is_zero()) return std::nullopt;
  const std::uint64_t d = p.terms().front().monomial.weighted_degree(weights);
  for (const auto& t : p.terms()) {
    if (t.monomial.weighted_degree(weights) != d) return std::nullopt;
  }
  return d;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

template <typename F>
std::string coefficient_magnitude(const F& c, bool& negative) {
  if constexpr (std::is_same_v<F, Rational>) {
    negative = c.sign() < 0;
    return (negative ? -c : c).to_string();
  } else {
    negative = false;
    return c.to_string();
  }
}

}  // namespace

template <typename F>
std::string to_string(const BasicPolynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = false;
    const std::string mag = coefficient_magnitude(t.coefficient, negative);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      s += mag;
    } else {
      if (mag != "1") s += mag + "*";
      s += to_string(t.monomial, p.ring());
    }
  }
  return s;
}

template std::string to_string(const BasicPolynomial<Rational>&);
template std::string to_string(const BasicPolynomial<Zp>&);

}  // namespace jacmult
