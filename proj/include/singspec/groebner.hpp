#pragma once

#include <string>
#include <vector>

#include "singspec/polynomial.hpp"

namespace singspec {

/// Graded reverse lexicographic comparison with the variable order of the
/// exponent vectors: true iff a > b.
bool grevlex_greater(const ExponentVector& a, const ExponentVector& b);

/// Leading exponent of a nonzero polynomial under grevlex.
ExponentVector leading_exponent(const Polynomial& p);

/// Reduced Groebner basis for the grevlex order. Every generator is monic
/// and no leading term divides a term of another generator. Generators are
/// sorted by ascending leading term.
class GroebnerBasis {
 public:
  static constexpr const char* kOrder = "grevlex";

  GroebnerBasis(Variables vars, std::vector<Polynomial> generators);

  const Variables& variables() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::vector<ExponentVector> leading_exponents() const;
  const char* order() const { return kOrder; }

  /// Full normal form of p: no term is divisible by a leading term.
  Polynomial normal_form(const Polynomial& p) const;

  /// True iff x^m is not divisible by any leading term.
  bool is_standard(const ExponentVector& m) const;

  /// Checks the Buchberger criterion directly: every S-polynomial of two
  /// generators reduces to zero.
  bool satisfies_buchberger_criterion() const;

 private:
  Variables vars_;
  std::vector<Polynomial> generators_;
  std::vector<ExponentVector> leads_;
};

/// S-polynomial of two nonzero polynomials under grevlex.
Polynomial s_polynomial(const Polynomial& a, const Polynomial& b);

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime and chain criteria; returns the reduced basis. Zero inputs are
/// ignored. Deterministic for fixed input.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators);
GroebnerBasis buchberger(const Variables& vars, const std::vector<Polynomial>& generators);

}  // namespace singspec
