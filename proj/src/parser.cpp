#include "singspec/parser.hpp"

#include <cctype>
#include <limits>

#include "singspec/error.hpp"

namespace singspec {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) unexpected();
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void unexpected() const {
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (is_ident_start(c) || is_digit(c) || c == '(') {
      throw SyntaxError(pos_, "implicit multiplication is not allowed; use '*'");
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  Polynomial factor() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    Polynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    if (!is_digit(peek())) throw SyntaxError(pos_, "exponent must be a nonnegative integer literal");
    const Integer e = digits();
    if (e > std::numeric_limits<std::uint32_t>::max()) throw SyntaxError(at, "exponent too large");
    skip_space();
    if (peek() == '^') throw SyntaxError(pos_, "chained exponents need parentheses");
    return base.pow(static_cast<std::uint32_t>(e.get_ui()));
  }

  Polynomial primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (is_digit(c)) {
      Integer num = digits();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        if (!is_digit(peek())) throw SyntaxError(pos_, "expected denominator after '/'");
        den = digits();
        if (den == 0) throw SyntaxError(at, "zero denominator");
      }
      return Polynomial::constant(vars_, Rational(num, den));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if ((*vars_)[i] == name) return Polynomial::variable(vars_, i);
      }
      throw UnknownVariable(name);
    }
    unexpected();
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

bool valid_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s.front())) return false;
  for (char c : s) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& vars) {
  return Parser(text, vars).run();
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, make_variables(vars));
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(start, comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (!valid_identifier(piece)) throw SyntaxError(start, "bad variable name '" + std::string(piece) + "'");
    for (const auto& existing : names) {
      if (existing == piece) throw SyntaxError(start, "duplicate variable '" + std::string(piece) + "'");
    }
    names.emplace_back(piece);
    start = comma + 1;
  }
  return names;
}

}  // namespace singspec
