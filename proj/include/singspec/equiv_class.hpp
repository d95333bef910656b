#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "singspec/fracpoly.hpp"
#include "singspec/rational.hpp"

namespace singspec {

/// Hodge bidegree (p, q) together with the angle of a T_s eigenvalue
/// exp(2 pi i angle), angle in [0, 1).
struct HodgeKey {
  std::int32_t p = 0;
  std::int32_t q = 0;
  Rational angle;

  friend auto operator<=>(const HodgeKey&, const HodgeKey&) = default;
  friend bool operator==(const HodgeKey&, const HodgeKey&) = default;
};

/// Class in the Grothendieck group of mixed Hodge structures with an
/// automorphism of finite order, stored as virtual equivariant Hodge
/// numbers. Cohomological signs are part of the multiplicities.
///
/// The ring structure is the tensor product: bidegrees add and eigenvalue
/// angles add mod 1. The Lefschetz class L = (1, 1, 0) carries the trivial
/// action and is central.
class EquivClass {
 public:
  using Map = std::map<HodgeKey, std::int64_t>;

  EquivClass() = default;
  /// Normalizes angles mod 1, merges equal keys and drops zeros.
  explicit EquivClass(const Map& entries);

  static EquivClass unit() { return single(0, 0, Rational(0), 1); }
  static EquivClass lefschetz() { return single(1, 1, Rational(0), 1); }
  static EquivClass single(std::int32_t p, std::int32_t q, const Rational& angle, std::int64_t mult);

  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::int64_t multiplicity(const HodgeKey& k) const;
  void add(std::int32_t p, std::int32_t q, const Rational& angle, std::int64_t mult);

  EquivClass operator-() const;
  EquivClass& operator+=(const EquivClass& o);
  EquivClass& operator-=(const EquivClass& o);
  friend EquivClass operator+(EquivClass a, const EquivClass& b) { return a += b; }
  friend EquivClass operator-(EquivClass a, const EquivClass& b) { return a -= b; }
  friend EquivClass operator*(const EquivClass& a, const EquivClass& b);

  EquivClass pow(std::uint32_t k) const;

  friend bool operator==(const EquivClass&, const EquivClass&) = default;

  /// "{(1,1,0):2, (0,0,1/2):-1}"; "0" for the zero class.
  std::string str() const;

 private:
  Map entries_;
};

EquivClass class_add(const EquivClass& a, const EquivClass& b);
EquivClass class_mul(const EquivClass& a, const EquivClass& b);

/// Sum of all virtual multiplicities (L -> 1).
std::int64_t euler_specialization(const EquivClass& c);

/// c minus the class of a point.
EquivClass reduce_class(const EquivClass& c);

/// Sp'(H, T): an entry (p, q, angle) of multiplicity m contributes
/// m * t^{p + angle}, i.e. a = p + angle has [a] = p and exp(2 pi i a) is
/// the eigenvalue. q plays no role.
FracPoly sp_prime_of_class(const EquivClass& c);

/// Spectrum read through the Hodge filtration F^{n-1-q} with
/// q < a <= q + 1 and eigenvalue exp(-2 pi i a): an entry (p, q', angle)
/// lands at a = (n - 1 - p) + (angle == 0 ? 1 : 1 - angle). Agrees with
/// sp_twist(sp_prime_of_class(c), n) for every class.
FracPoly sp_of_class_hodge(const EquivClass& c, std::int64_t n);

/// Sp'(f) of a Milnor-fiber class: (-1)^{n-1} sp_prime_of_class of the
/// reduced class, the signs (-1)^j of the stored multiplicities becoming
/// the signs (-1)^{n-1-j} of the alternating sum.
FracPoly milnor_sp_prime(const EquivClass& c, std::int64_t n);

}  // namespace singspec
