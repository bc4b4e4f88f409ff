#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jacmult/modspace.hpp"
#include "jacmult/polynomial.hpp"

namespace jacmult {

/// Syntax or semantic error in an input document, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar (explicit '*' required, '^' takes a natural literal):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' natural)?
///   primary := integer ('/' integer)? | name | '(' expr ')'
///   name    := [a-zA-Z][a-zA-Z0-9]*
/// `line` is only used for error positions.
Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            const MonomialOrder& order = MonomialOrder::grevlex(), std::size_t line = 1);

/// "grevlex", "lex" or "weighted w1 ... wn".
MonomialOrder parse_order(std::string_view text, std::size_t variable_count, std::size_t line = 1);

struct PolySource {
  Ring ring;
  MonomialOrder order;
  std::vector<Polynomial> polynomials;
};

/// Document layout:
///   vars: x y z
///   order: grevlex
///   <one polynomial per line>
/// Blank lines and '#' comments are ignored.
PolySource parse_poly_source(std::string_view text);

struct StableMapDocument {
  RationalPlaneCurve curve;
  std::optional<std::array<ParameterPoint, 3>> marked_points;
  std::optional<std::array<PlaneLine, 3>> marked_lines;
};

/// "key: value" document with keys degree, param_x, param_y, param_z
/// (forms in s, t), implicit (form in x, y, z), and optionally
/// marked_points ("s t; s t; s t") and marked_lines ("a b c; a b c; a b c").
StableMapDocument parse_stable_map_document(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace jacmult
