#include "singspec/fracpoly.hpp"

#include <cctype>
#include <sstream>

#include "singspec/error.hpp"

namespace singspec {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

FracPoly::FracPoly(TermMap terms) {
  for (const auto& [a, c] : terms) add_term(a, c);
}

FracPoly FracPoly::monomial(const Rational& exponent, Coeff c) {
  FracPoly p;
  p.add_term(exponent, c);
  return p;
}

FracPoly::Coeff FracPoly::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

FracPoly::Coeff FracPoly::coefficient_sum() const {
  Coeff s = 0;
  for (const auto& [a, c] : terms_) s = checked_add(s, c);
  return s;
}

void FracPoly::add_term(const Rational& exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

FracPoly FracPoly::operator-() const {
  FracPoly r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, checked_mul(c, -1));
  return r;
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, checked_mul(c, -1));
  return *this;
}

FracPoly& FracPoly::operator*=(Coeff k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c = checked_mul(c, k);
  return *this;
}

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  FracPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
  }
  return r;
}

FracPoly FracPoly::shifted(const Rational& shift) const {
  FracPoly r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a + shift, c);
  return r;
}

std::string FracPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a.is_zero()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (a == Rational(1)) continue;
    if (a.is_integer() && a.sign() > 0) {
      os << "^" << a.str();
    } else {
      os << "^(" << a.str() << ")";
    }
  }
  return os.str();
}

namespace {

class FracParser {
 public:
  explicit FracParser(std::string_view text) : text_(text) {}

  FracPoly run() {
    FracPoly out;
    skip();
    if (text_.substr(pos_) == "0") return out;
    bool first = true;
    while (true) {
      skip();
      if (at_end()) {
        if (first) throw SyntaxError(pos_, "empty spectrum");
        break;
      }
      int sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      } else if (peek() == '+') {
        if (first) throw SyntaxError(pos_, "leading '+'");
        ++pos_;
      } else if (!first) {
        throw SyntaxError(pos_, "expected '+' or '-'");
      }
      skip();
      first = false;
      FracPoly::Coeff coeff = 1;
      bool has_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = integer();
        has_coeff = true;
      }
      Rational exponent = 0;
      if (has_coeff && peek() != '*') {
        out.add_term(exponent, sign * coeff);
        continue;
      }
      if (has_coeff) ++pos_;
      if (peek() != 't') throw SyntaxError(pos_, "expected 't'");
      ++pos_;
      exponent = 1;
      if (peek() == '^') {
        ++pos_;
        if (peek() == '(') {
          ++pos_;
          const std::size_t start = pos_;
          while (!at_end() && peek() != ')') ++pos_;
          if (at_end()) throw SyntaxError(pos_, "expected ')'");
          try {
            exponent = Rational::parse(text_.substr(start, pos_ - start));
          } catch (const std::invalid_argument& e) {
            throw SyntaxError(start, e.what());
          }
          ++pos_;
        } else {
          exponent = Rational(Integer(integer()));
        }
      }
      out.add_term(exponent, sign * coeff);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip() {
    while (!at_end() && text_[pos_] == ' ') ++pos_;
  }
  FracPoly::Coeff integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected integer");
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw SyntaxError(start, "integer out of range");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FracPoly FracPoly::parse(std::string_view text) { return FracParser(text).run(); }

}  // namespace singspec
