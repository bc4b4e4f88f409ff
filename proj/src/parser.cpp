#include "jacmult/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "jacmult/polyalg.hpp"

namespace jacmult {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { number, name, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> lex(std::string_view s, std::size_t line, std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t pos) { return pos + 1 + column_offset; };
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, s.substr(i, j - i), col(i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::name, s.substr(i, j - i), col(i)});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '/': kind = Tok::slash; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw ParseError(line, col(i), std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, s.substr(i, 1), col(i)});
    ++i;
  }
  out.push_back({Tok::end, {}, col(s.size())});
  return out;
}

class PolynomialParser {
 public:
  PolynomialParser(std::vector<Token> tokens, const Ring& ring, const MonomialOrder& order, std::size_t line)
      : tokens_(std::move(tokens)), ring_(ring), order_(order), line_(line) {}

  Polynomial parse() {
    if (peek().kind == Tok::end) fail(peek(), "empty polynomial");
    Polynomial p = expr();
    if (peek().kind != Tok::end) fail(peek(), "unexpected '" + std::string(peek().text) + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

  Polynomial expr() {
    Polynomial p = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Polynomial rhs = term();
      if (minus) {
        p -= rhs;
      } else {
        p += rhs;
      }
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = unary();
    while (peek().kind == Tok::star) {
      next();
      p = p * unary();
    }
    return p;
  }

  Polynomial unary() {
    if (peek().kind == Tok::minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      next();
      return unary();
    }
    return power_expr();
  }

  Polynomial power_expr() {
    Polynomial base = primary();
    if (peek().kind != Tok::caret) return base;
    next();
    const Token& e = peek();
    if (e.kind != Tok::number) fail(e, "expected a natural exponent after '^'");
    next();
    if (e.text.size() > 6) fail(e, "exponent too large");
    return jacmult::power(base, static_cast<unsigned>(std::stoul(std::string(e.text))));
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        Rational value(BigInt(std::string(t.text), 10));
        if (peek().kind == Tok::slash) {
          next();
          const Token& den = peek();
          if (den.kind != Tok::number) fail(den, "expected an integer denominator after '/'");
          next();
          const BigInt d(std::string(den.text), 10);
          if (d == 0) fail(den, "zero denominator");
          value = Rational(value.numerator(), d);
        }
        return Polynomial::constant(ring_, value, order_);
      }
      case Tok::name: {
        next();
        if (!ring_.contains(t.text)) fail(t, "undeclared variable '" + std::string(t.text) + "'");
        return Polynomial::variable(ring_, t.text, order_);
      }
      case Tok::lparen: {
        next();
        Polynomial inner = expr();
        if (peek().kind != Tok::rparen) fail(peek(), "expected ')'");
        next();
        return inner;
      }
      case Tok::end:
        fail(t, "unexpected end of input");
      default:
        fail(t, "unexpected '" + std::string(t.text) + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Ring& ring_;
  const MonomialOrder& order_;
  std::size_t line_;
};

Polynomial parse_at(std::string_view text, const Ring& ring, const MonomialOrder& order, std::size_t line,
                    std::size_t column_offset) {
  return PolynomialParser(lex(text, line, column_offset), ring, order, line).parse();
}

struct SourceLine {
  std::size_t number;
  std::string_view text;  // comment stripped
  std::size_t indent;     // leading whitespace removed
};

std::vector<SourceLine> significant_lines(std::string_view doc) {
  std::vector<SourceLine> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= doc.size()) {
    std::size_t end = doc.find('\n', start);
    if (end == std::string_view::npos) end = doc.size();
    std::string_view line = doc.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    std::size_t indent = 0;
    while (indent < line.size() && (line[indent] == ' ' || line[indent] == '\t')) ++indent;
    if (indent < line.size()) lines.push_back({number, line.substr(indent), indent});
    if (end == doc.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

// Splits "key: value"; returns nullopt if there is no colon.
std::optional<std::pair<std::string_view, std::string_view>> split_key(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view key = line.substr(0, colon);
  while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.remove_suffix(1);
  std::string_view value = line.substr(colon + 1);
  while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) value.remove_prefix(1);
  return std::make_pair(key, value);
}

std::size_t value_column(const SourceLine& l, std::string_view value) {
  return l.indent + static_cast<std::size_t>(value.data() - l.text.data());
}

Rational parse_rational_at(std::string_view word, std::size_t line, std::size_t column) {
  try {
    return Rational::parse(word);
  } catch (const std::exception& e) {
    throw ParseError(line, column, "malformed rational '" + std::string(word) + "'");
  }
}

// "a b; c d; e f" into groups of `arity` rationals, exactly three groups.
std::vector<std::vector<Rational>> parse_groups(const SourceLine& l, std::string_view value, std::size_t arity) {
  std::vector<std::vector<Rational>> groups;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t end = value.find(';', start);
    if (end == std::string_view::npos) end = value.size();
    const std::string_view chunk = value.substr(start, end - start);
    std::vector<Rational> group;
    for (auto w : split_words(chunk)) {
      group.push_back(parse_rational_at(w, l.number, value_column(l, w) + 1));
    }
    if (group.size() != arity) {
      throw ParseError(l.number, value_column(l, chunk) + 1,
                       "expected " + std::to_string(arity) + " numbers per entry, got " + std::to_string(group.size()));
    }
    groups.push_back(std::move(group));
    if (end == value.size()) break;
    start = end + 1;
  }
  if (groups.size() != 3) {
    throw ParseError(l.number, value_column(l, value) + 1, "expected three ';'-separated entries");
  }
  return groups;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, const MonomialOrder& order, std::size_t line) {
  return parse_at(text, ring, order, line, 0);
}

MonomialOrder parse_order(std::string_view text, std::size_t variable_count, std::size_t line) {
  const auto words = split_words(text);
  if (words.empty()) throw ParseError(line, 1, "missing order");
  if (words[0] == "grevlex" && words.size() == 1) return MonomialOrder::grevlex();
  if (words[0] == "lex" && words.size() == 1) return MonomialOrder::lex();
  if (words[0] == "weighted") {
    std::vector<unsigned> weights;
    for (std::size_t i = 1; i < words.size(); ++i) {
      const auto w = words[i];
      const std::size_t col = static_cast<std::size_t>(w.data() - text.data()) + 1;
      if (w.empty() || w.size() > 9 || !std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(line, col, "malformed weight '" + std::string(w) + "'");
      const unsigned value = static_cast<unsigned>(std::stoul(std::string(w)));
      if (value == 0) throw ParseError(line, col, "weights must be positive");
      weights.push_back(value);
    }
    if (weights.size() != variable_count) {
      throw ParseError(line, 1,
                       "weighted order needs " + std::to_string(variable_count) + " weights, got " +
                           std::to_string(weights.size()));
    }
    return MonomialOrder::weighted(std::move(weights));
  }
  throw ParseError(line, 1, "unknown order '" + std::string(text) + "'");
}

PolySource parse_poly_source(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document: expected 'vars:'");

  const auto vars = split_key(lines[0].text);
  if (!vars || vars->first != "vars") throw ParseError(lines[0].number, lines[0].indent + 1, "expected 'vars:'");
  std::vector<std::string> names;
  for (auto w : split_words(vars->second)) {
    const std::size_t col = value_column(lines[0], w) + 1;
    if (!std::isalpha(static_cast<unsigned char>(w[0])) ||
        !std::all_of(w.begin(), w.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }))
      throw ParseError(lines[0].number, col, "invalid variable name '" + std::string(w) + "'");
    if (std::find(names.begin(), names.end(), w) != names.end())
      throw ParseError(lines[0].number, col, "duplicate variable '" + std::string(w) + "'");
    names.emplace_back(w);
  }
  if (names.empty()) throw ParseError(lines[0].number, lines[0].indent + 1, "no variables declared");
  Ring ring(std::move(names));

  if (lines.size() < 2) throw ParseError(lines[0].number + 1, 1, "expected 'order:'");
  const auto ord = split_key(lines[1].text);
  if (!ord || ord->first != "order") throw ParseError(lines[1].number, lines[1].indent + 1, "expected 'order:'");
  MonomialOrder order = parse_order(ord->second, ring.size(), lines[1].number);

  PolySource src{ring, order, {}};
  for (std::size_t i = 2; i < lines.size(); ++i) {
    src.polynomials.push_back(parse_at(lines[i].text, ring, order, lines[i].number, lines[i].indent));
  }
  return src;
}

StableMapDocument parse_stable_map_document(std::string_view text) {
  std::map<std::string, std::pair<SourceLine, std::string_view>, std::less<>> fields;
  for (const auto& l : significant_lines(text)) {
    const auto kv = split_key(l.text);
    if (!kv) throw ParseError(l.number, l.indent + 1, "expected 'key: value'");
    static const char* const known[] = {"degree",   "param_x",       "param_y",     "param_z",
                                        "implicit", "marked_points", "marked_lines"};
    if (std::find(std::begin(known), std::end(known), kv->first) == std::end(known))
      throw ParseError(l.number, l.indent + 1, "unknown key '" + std::string(kv->first) + "'");
    if (!fields.emplace(std::string(kv->first), std::make_pair(l, kv->second)).second)
      throw ParseError(l.number, l.indent + 1, "duplicate key '" + std::string(kv->first) + "'");
  }
  auto require = [&](const char* key) -> const std::pair<SourceLine, std::string_view>& {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(1, 1, std::string("missing key '") + key + "'");
    return it->second;
  };

  StableMapDocument doc;
  {
    const auto& [l, v] = require("degree");
    const auto words = split_words(v);
    if (words.size() != 1 || !std::all_of(words[0].begin(), words[0].end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        words[0].size() > 4)
      throw ParseError(l.number, value_column(l, v) + 1, "degree must be a natural number");
    doc.curve.degree = static_cast<unsigned>(std::stoul(std::string(words[0])));
  }
  const char* const param_keys[] = {"param_x", "param_y", "param_z"};
  for (int i = 0; i < 3; ++i) {
    const auto& [l, v] = require(param_keys[i]);
    doc.curve.parametrization[i] = parse_at(v, parameter_ring(), MonomialOrder::grevlex(), l.number, value_column(l, v));
  }
  {
    const auto& [l, v] = require("implicit");
    doc.curve.implicit_equation = parse_at(v, plane_ring(), MonomialOrder::grevlex(), l.number, value_column(l, v));
  }
  if (auto it = fields.find("marked_points"); it != fields.end()) {
    const auto& [l, v] = it->second;
    const auto groups = parse_groups(l, v, 2);
    std::array<ParameterPoint, 3> pts;
    for (int i = 0; i < 3; ++i) pts[i] = {groups[i][0], groups[i][1]};
    doc.marked_points = pts;
  }
  if (auto it = fields.find("marked_lines"); it != fields.end()) {
    const auto& [l, v] = it->second;
    const auto groups = parse_groups(l, v, 3);
    std::array<PlaneLine, 3> lines;
    for (int i = 0; i < 3; ++i) lines[i].coefficients = {groups[i][0], groups[i][1], groups[i][2]};
    doc.marked_lines = lines;
  }
  if (doc.marked_points.has_value() != doc.marked_lines.has_value()) {
    throw ParseError(1, 1, "marked_points and marked_lines must be given together");
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace jacmult
