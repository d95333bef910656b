#include "singspec/equiv_class.hpp"

#include <sstream>

#include "singspec/error.hpp"

namespace singspec {

EquivClass::EquivClass(const Map& entries) {
  for (const auto& [k, m] : entries) add(k.p, k.q, k.angle, m);
}

EquivClass EquivClass::single(std::int32_t p, std::int32_t q, const Rational& angle, std::int64_t mult) {
  EquivClass c;
  c.add(p, q, angle, mult);
  return c;
}

std::int64_t EquivClass::multiplicity(const HodgeKey& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? 0 : it->second;
}

void EquivClass::add(std::int32_t p, std::int32_t q, const Rational& angle, std::int64_t mult) {
  if (mult == 0) return;
  HodgeKey key{p, q, angle.frac()};
  auto [it, inserted] = entries_.try_emplace(std::move(key), mult);
  if (!inserted) {
    it->second = checked_add(it->second, mult);
    if (it->second == 0) entries_.erase(it);
  }
}

EquivClass EquivClass::operator-() const {
  EquivClass r;
  for (const auto& [k, m] : entries_) r.entries_.emplace(k, checked_mul(m, -1));
  return r;
}

EquivClass& EquivClass::operator+=(const EquivClass& o) {
  for (const auto& [k, m] : o.entries_) add(k.p, k.q, k.angle, m);
  return *this;
}

EquivClass& EquivClass::operator-=(const EquivClass& o) {
  for (const auto& [k, m] : o.entries_) add(k.p, k.q, k.angle, checked_mul(m, -1));
  return *this;
}

EquivClass operator*(const EquivClass& a, const EquivClass& b) {
  EquivClass r;
  for (const auto& [ka, ma] : a.entries_) {
    for (const auto& [kb, mb] : b.entries_) {
      r.add(ka.p + kb.p, ka.q + kb.q, ka.angle + kb.angle, checked_mul(ma, mb));
    }
  }
  return r;
}

EquivClass EquivClass::pow(std::uint32_t k) const {
  EquivClass r = unit();
  for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string EquivClass::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, m] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << "(" << k.p << "," << k.q << "," << k.angle.str() << "):" << m;
  }
  os << "}";
  return os.str();
}

EquivClass class_add(const EquivClass& a, const EquivClass& b) { return a + b; }
EquivClass class_mul(const EquivClass& a, const EquivClass& b) { return a * b; }

std::int64_t euler_specialization(const EquivClass& c) {
  std::int64_t s = 0;
  for (const auto& [k, m] : c.entries()) s = checked_add(s, m);
  return s;
}

EquivClass reduce_class(const EquivClass& c) { return c - EquivClass::unit(); }

FracPoly sp_prime_of_class(const EquivClass& c) {
  FracPoly s;
  for (const auto& [k, m] : c.entries()) s.add_term(Rational(k.p) + k.angle, m);
  return s;
}

FracPoly sp_of_class_hodge(const EquivClass& c, std::int64_t n) {
  FracPoly s;
  for (const auto& [k, m] : c.entries()) {
    // F^{n-1-q} = Gr_F^p  =>  q = n - 1 - p; the eigenvalue exp(2 pi i angle)
    // equals exp(-2 pi i a) for the unique a in (q, q + 1] with a = -angle mod 1.
    const Rational q = Rational(static_cast<long>(n - 1 - k.p));
    const Rational offset = k.angle.is_zero() ? Rational(1) : Rational(1) - k.angle;
    s.add_term(q + offset, m);
  }
  return s;
}

FracPoly milnor_sp_prime(const EquivClass& c, std::int64_t n) {
  FracPoly s = sp_prime_of_class(reduce_class(c));
  if ((n - 1) % 2 != 0) s = -s;
  return s;
}

}  // namespace singspec
