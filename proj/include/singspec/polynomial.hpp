#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "singspec/rational.hpp"

namespace singspec {

/// Exponents (m_1, ..., m_n) of a monomial x_1^{m_1} ... x_n^{m_n}.
using ExponentVector = std::vector<std::uint32_t>;

/// Ordered variable names, fixed at construction and shared by every
/// polynomial derived from the same input.
using Variables = std::shared_ptr<const std::vector<std::string>>;

Variables make_variables(std::vector<std::string> names);

std::uint64_t total_degree(const ExponentVector& m);
/// True when every exponent of `a` is <= the matching exponent of `b`.
bool divides(const ExponentVector& a, const ExponentVector& b);

/// Sparse multivariate polynomial with exact rational coefficients. Never
/// stores a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  explicit Polynomial(Variables vars);
  Polynomial(Variables vars, TermMap terms);

  static Polynomial constant(Variables vars, const Rational& c);
  static Polynomial monomial(Variables vars, ExponentVector m, const Rational& c = 1);
  static Polynomial variable(Variables vars, std::size_t index);

  const Variables& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^m, zero when absent.
  Rational coefficient(const ExponentVector& m) const;

  /// Partial derivative with respect to variable `index`.
  Polynomial derivative(std::size_t index) const;

  Polynomial pow(std::uint32_t e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

  /// Same variable names and same term map.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Renders in the input grammar, terms in descending lexicographic
  /// exponent order, e.g. "x^2 - 3/2*x*y + 5".
  std::string str() const;

 private:
  void add_term(const ExponentVector& m, const Rational& c);
  void check_compatible(const Polynomial& o) const;

  Variables vars_;
  TermMap terms_;
};

/// Weights (w_1, ..., w_n), each strictly between 0 and 1.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws OutOfRange if some weight is not in (0, 1).
  explicit WeightVector(std::vector<Rational> weights);

  /// Parses a comma-separated list such as "1/2,1/3".
  static WeightVector parse(const std::string& text);

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& values() const { return weights_; }
  auto begin() const { return weights_.begin(); }
  auto end() const { return weights_.end(); }

  Rational sum() const;
  /// Least common multiple of the weight denominators.
  Integer common_denominator() const;
  /// Product of (1/w_i - 1); equals the Milnor number for an isolated
  /// weighted-homogeneous singularity.
  Rational milnor_product() const;

  /// "1/2,1/3"
  std::string str() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> weights_;
};

/// Concatenation (w ++ w'), used for Thom-Sebastiani sums.
WeightVector concat(const WeightVector& a, const WeightVector& b);

/// Sum_i w_i m_i. Throws LengthMismatch.
Rational weighted_degree(const ExponentVector& m, const WeightVector& w);

/// True iff every term of f has weighted degree exactly 1. The zero
/// polynomial is weighted homogeneous for every w.
bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w);

/// Solves {Sum_i w_i m_i = 1 : m an exponent vector of f} exactly.
/// Throws Underdetermined, Inconsistent or OutOfRange.
WeightVector infer_weights(const Polynomial& f);

/// (df/dx_1, ..., df/dx_n) in variable order.
std::vector<Polynomial> jacobian_generators(const Polynomial& f);

}  // namespace singspec
