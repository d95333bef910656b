#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "singspec/fracpoly.hpp"
#include "singspec/milnor.hpp"
#include "singspec/polynomial.hpp"

namespace singspec {

// Spectra and monodromy eigenvalues.
//
// Conventions. An eigenvalue exp(2 pi i theta) is stored by its angle
// theta, normalized into [0, 1).
//
//   operation              monodromy                     t^a contributes
//   ---------------------  ----------------------------  ------------------
//   eigenvalues_gamma_c    local-system (cohomological)  exp(-2 pi i a)
//   eigenvalues_geometric  geometric, = gamma_c^{-1}     exp(+2 pi i a)
//   direct_residues        (reads a mod 1 off Sp')       exp(+2 pi i a)
//
// For a weighted-homogeneous f and a standard monomial g the local-system
// monodromy multiplies g*omega/df by exp(-2 pi i (l(g) + sum w_i)); the
// geometric monodromy x_i -> exp(2 pi i w_i) x_i multiplies it by the
// inverse. The two conventions are therefore related by theta -> -theta.

/// t^a -> t^{-a}.
FracPoly iota(const FracPoly& s);

/// t^n * iota(sprime).
FracPoly sp_twist(const FracPoly& sprime, std::int64_t n);

/// True iff the coefficient at a equals the coefficient at n - a for all a.
bool check_symmetry(const FracPoly& sp, std::int64_t n);

/// prod_i (t - t^{w_i}) / (t^{w_i} - 1), computed by substituting
/// s = t^{1/m} (m the LCM of the weight denominators) and dividing exactly
/// in Z[s]. Throws NonExactDivision when the quotient is not a polynomial.
FracPoly sp_product_formula(const WeightVector& w);

/// Sum over basis monomials g of t^{l(g) + sum_i w_i}.
FracPoly sp_from_basis(const MilnorBasis& basis);

/// Product formula for a weighted-homogeneous isolated singularity, the
/// only case in which the spectrum at infinity is computed here.
/// Throws NotWeightedHomogeneous or NonIsolatedSingularity.
FracPoly sp_at_infinity(const Polynomial& f, const WeightVector& w);

/// Multiset of eigenvalue angles in [0, 1) with positive multiplicities.
class EigenMultiset {
 public:
  using Map = std::map<Rational, std::int64_t>;

  EigenMultiset() = default;
  /// Normalizes angles mod 1 and merges; drops zero multiplicities. Throws
  /// NegativeMultiplicity.
  explicit EigenMultiset(const Map& entries);

  const Map& entries() const { return entries_; }
  std::int64_t total() const;
  void add(const Rational& angle, std::int64_t mult);

  friend bool operator==(const EigenMultiset&, const EigenMultiset&) = default;

  /// "{1/6:1, 5/6:1}"
  std::string str() const;

 private:
  Map entries_;
};

/// Reduces a rational into [0, 1).
Rational residue(const Rational& a);

/// Local-system monodromy: t^a with coefficient c gives multiplicity c at
/// angle (-a mod 1). Throws NegativeMultiplicity on negative coefficients.
EigenMultiset eigenvalues_gamma_c(const FracPoly& sprime);

/// Switches between the local-system and geometric conventions,
/// theta -> -theta mod 1. An involution.
EigenMultiset eigenvalues_geometric(const EigenMultiset& e);

/// The multiset {a mod 1} read directly off a spectrum.
EigenMultiset direct_residues(const FracPoly& sprime);

/// v-th cyclotomic polynomial in variable T, integer coefficients.
Polynomial cyclotomic(std::uint32_t v);

/// prod (T - exp(2 pi i theta)) = prod_v Phi_v(T)^{c_v}, with integer
/// coefficients. Throws NotGaloisStable if some angle u/v is present while a
/// conjugate u'/v (gcd(u', v) = 1) is missing or has another multiplicity.
Polynomial char_poly(const EigenMultiset& e);

}  // namespace singspec
