#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "singspec/rational.hpp"

namespace singspec {

/// Finite formal sum  sum_a n_a t^a  with rational exponents a and integer
/// coefficients n_a. Zero coefficients are never stored. Exponents are kept
/// as exact rationals; no common denominator is imposed.
class FracPoly {
 public:
  using Coeff = std::int64_t;
  using TermMap = std::map<Rational, Coeff>;

  FracPoly() = default;
  explicit FracPoly(TermMap terms);

  static FracPoly monomial(const Rational& exponent, Coeff c = 1);
  static FracPoly one() { return monomial(Rational(0)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Rational& exponent) const;
  /// Sum of all coefficients (the value at t = 1).
  Coeff coefficient_sum() const;

  void add_term(const Rational& exponent, Coeff c);

  FracPoly operator-() const;
  FracPoly& operator+=(const FracPoly& o);
  FracPoly& operator-=(const FracPoly& o);
  FracPoly& operator*=(Coeff c);
  friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
  friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
  friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator*(FracPoly a, Coeff c) { return a *= c; }

  /// Multiplication by t^shift.
  FracPoly shifted(const Rational& shift) const;

  friend bool operator==(const FracPoly&, const FracPoly&) = default;

  /// Canonical rendering: ascending exponents, joined by " + " / " - ".
  /// A term is "c*t^(p/q)" for fractional exponents, "c*t^k" for integer
  /// k >= 2, "c*t" for k = 1, "c" for k = 0; negative integer exponents
  /// print as "t^(-k)". A coefficient of 1 is omitted except on the
  /// constant term. The zero sum renders as "0".
  std::string str() const;

  /// Inverse of str(). Throws SyntaxError.
  static FracPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace singspec
