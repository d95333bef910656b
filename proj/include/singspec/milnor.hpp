#pragma once

#include <cstdint>
#include <vector>

#include "singspec/groebner.hpp"
#include "singspec/polynomial.hpp"

namespace singspec {

/// Standard monomials of the Jacobian ideal of a weighted-homogeneous
/// isolated singularity: a monomial basis of the Milnor algebra, and hence
/// of the Brieskorn lattice modulo t.
struct MilnorBasis {
  /// Sorted by (weighted degree, grevlex ascending).
  std::vector<ExponentVector> monomials;
  WeightVector weights;
  std::size_t dimension = 0;  // number of variables n

  std::size_t size() const { return monomials.size(); }
};

/// Reduced grevlex Groebner basis of (df/dx_1, ..., df/dx_n) together with
/// the smallest pure power x_i^{k_i} lying in the leading-term ideal for
/// each variable. Throws NonIsolatedSingularity when some variable has no
/// such power (the Milnor algebra is infinite dimensional).
struct JacobianData {
  GroebnerBasis basis;
  std::vector<std::uint32_t> pure_power_bounds;
};

JacobianData jacobian_ideal(const Polynomial& f);

/// Throws NotWeightedHomogeneous or NonIsolatedSingularity.
MilnorBasis milnor_basis(const Polynomial& f, const WeightVector& w);

/// Size of the standard-monomial basis, cross-checked against
/// prod_i (1/w_i - 1). Throws ConsistencyFailure if the two disagree.
std::size_t milnor_number(const Polynomial& f, const WeightVector& w);

}  // namespace singspec
