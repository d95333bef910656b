#include "singspec/spectrum.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "singspec/error.hpp"

namespace singspec {

FracPoly iota(const FracPoly& s) {
  FracPoly r;
  for (const auto& [a, c] : s.terms()) r.add_term(-a, c);
  return r;
}

FracPoly sp_twist(const FracPoly& sprime, std::int64_t n) {
  return iota(sprime).shifted(Rational(static_cast<long>(n)));
}

bool check_symmetry(const FracPoly& sp, std::int64_t n) { return sp == sp_twist(sp, n); }

namespace {

// Dense polynomial in s = t^{1/m} with integer coefficients, index = degree.
using Dense = std::vector<Integer>;

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void trim(Dense& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; returns nullopt-like flag via remainder.
Dense dense_divide_exact(Dense num, const Dense& den, bool& exact) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) {
    exact = std::all_of(num.begin(), num.end(), [](const Integer& c) { return c == 0; });
    return Dense{0};
  }
  Dense q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const Integer c = num[k];  // divisor is monic
    q[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  exact = std::all_of(num.begin(), num.end(), [](const Integer& c) { return c == 0; });
  return q;
}

}  // namespace

FracPoly sp_product_formula(const WeightVector& w) {
  const Integer m = w.common_denominator();
  if (!m.fits_ulong_p() || m > 1'000'000) throw Overflow("weight denominators too large");
  const std::size_t mm = m.get_ui();

  Dense num{1}, den{1};
  for (const auto& wi : w) {
    const std::size_t e = (wi * Rational(m)).to_int64();  // w_i * m, in [1, m)
    Dense fn(mm + 1, 0);  // s^m - s^e
    fn[mm] = 1;
    fn[e] = -1;
    Dense fd(e + 1, 0);  // s^e - 1
    fd[e] = 1;
    fd[0] = -1;
    num = dense_mul(num, fn);
    den = dense_mul(den, fd);
  }
  trim(den);
  // den is a product of monic polynomials, hence monic.
  bool exact = false;
  const Dense q = dense_divide_exact(num, den, exact);
  if (!exact) {
    throw NonExactDivision("prod (t - t^w_i)/(t^w_i - 1) is not a polynomial for weights " + w.str());
  }

  FracPoly out;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] == 0) continue;
    if (!q[k].fits_slong_p()) throw Overflow("spectrum coefficient too large");
    out.add_term(Rational(Integer(static_cast<unsigned long>(k)), m), q[k].get_si());
  }
  return out;
}

FracPoly sp_from_basis(const MilnorBasis& basis) {
  const Rational shift = basis.weights.sum();
  FracPoly out;
  for (const auto& g : basis.monomials) out.add_term(weighted_degree(g, basis.weights) + shift, 1);
  return out;
}

FracPoly sp_at_infinity(const Polynomial& f, const WeightVector& w) {
  if (!is_weighted_homogeneous(f, w)) {
    throw NotWeightedHomogeneous(f.str() + " is not weighted homogeneous for weights " + w.str());
  }
  jacobian_ideal(f);  // throws NonIsolatedSingularity
  return sp_product_formula(w);
}

// ---------------------------------------------------------------------------

Rational residue(const Rational& a) { return a.frac(); }

EigenMultiset::EigenMultiset(const Map& entries) {
  for (const auto& [theta, c] : entries) add(theta, c);
}

void EigenMultiset::add(const Rational& angle, std::int64_t mult) {
  if (mult < 0) {
    throw NegativeMultiplicity("negative multiplicity " + std::to_string(mult) + " at angle " + angle.str());
  }
  if (mult == 0) return;
  auto& slot = entries_[residue(angle)];
  slot = checked_add(slot, mult);
}

std::int64_t EigenMultiset::total() const {
  std::int64_t s = 0;
  for (const auto& [theta, c] : entries_) s = checked_add(s, c);
  return s;
}

std::string EigenMultiset::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [theta, c] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << theta.str() << ":" << c;
  }
  os << "}";
  return os.str();
}

EigenMultiset eigenvalues_gamma_c(const FracPoly& sprime) {
  EigenMultiset e;
  for (const auto& [a, c] : sprime.terms()) {
    if (c < 0) {
      throw NegativeMultiplicity("coefficient " + std::to_string(c) + " at t^(" + a.str() +
                                 ") is negative; virtual spectra have no eigenvalue multiset");
    }
    e.add(-a, c);
  }
  return e;
}

EigenMultiset eigenvalues_geometric(const EigenMultiset& e) {
  EigenMultiset r;
  for (const auto& [theta, c] : e.entries()) r.add(-theta, c);
  return r;
}

EigenMultiset direct_residues(const FracPoly& sprime) {
  EigenMultiset e;
  for (const auto& [a, c] : sprime.terms()) {
    if (c < 0) throw NegativeMultiplicity("negative coefficient at t^(" + a.str() + ")");
    e.add(a, c);
  }
  return e;
}

namespace {

// Phi_v = (T^v - 1) / prod_{d | v, d < v} Phi_d, filling `cache` bottom-up.
const Dense& cyclotomic_dense(std::uint32_t v, std::map<std::uint32_t, Dense>& cache) {
  if (auto it = cache.find(v); it != cache.end()) return it->second;
  Dense num(v + 1, 0);
  num[v] = 1;
  num[0] = -1;
  Dense den{1};
  for (std::uint32_t d = 1; d < v; ++d) {
    if (v % d == 0) den = dense_mul(den, cyclotomic_dense(d, cache));
  }
  trim(den);
  bool exact = false;
  Dense q = dense_divide_exact(num, den, exact);
  if (!exact) throw ConsistencyFailure("cyclotomic division left a remainder");
  return cache.emplace(v, std::move(q)).first->second;
}

Polynomial from_dense(const Variables& vars, const Dense& q) {
  Polynomial::TermMap terms;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] != 0) terms.emplace(ExponentVector{static_cast<std::uint32_t>(k)}, Rational(q[k]));
  }
  return Polynomial(vars, std::move(terms));
}

}  // namespace

Polynomial cyclotomic(std::uint32_t v) {
  if (v == 0) throw std::invalid_argument("cyclotomic index must be positive");
  std::map<std::uint32_t, Dense> cache;
  return from_dense(make_variables({"T"}), cyclotomic_dense(v, cache));
}

Polynomial char_poly(const EigenMultiset& e) {
  std::map<std::uint32_t, std::int64_t> order_mult;
  for (const auto& [theta, c] : e.entries()) {
    const Integer v = theta.denominator();
    if (!v.fits_uint_p() || v > 100'000) throw Overflow("eigenvalue order too large");
    const auto vv = static_cast<std::uint32_t>(v.get_ui());
    for (std::uint32_t u = 0; u < vv; ++u) {
      if (gcd(Integer(u), v) != 1) continue;
      const Rational conj(Integer(u), v);
      auto it = e.entries().find(conj);
      if (it == e.entries().end() || it->second != c) {
        throw NotGaloisStable("angle " + theta.str() + " has multiplicity " + std::to_string(c) +
                              " but its conjugate " + conj.str() + " has multiplicity " +
                              std::to_string(it == e.entries().end() ? 0 : it->second));
      }
    }
    order_mult[vv] = c;
  }
  std::map<std::uint32_t, Dense> cache;
  Dense result{1};
  for (const auto& [v, c] : order_mult) {
    const Dense& phi = cyclotomic_dense(v, cache);
    for (std::int64_t k = 0; k < c; ++k) result = dense_mul(result, phi);
  }
  return from_dense(make_variables({"T"}), result);
}

}  // namespace singspec
