#include "singspec/milnor.hpp"

#include <algorithm>

#include "singspec/error.hpp"

namespace singspec {

JacobianData jacobian_ideal(const Polynomial& f) {
  GroebnerBasis gb = buchberger(f.variables(), jacobian_generators(f));
  const std::size_t n = f.num_variables();
  std::vector<std::uint32_t> bounds(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& lead : gb.leading_exponents()) {
      const bool pure = std::all_of(lead.begin(), lead.end(), [&, k = std::size_t{0}](auto e) mutable {
        return k++ == i || e == 0;
      });
      if (pure && (bounds[i] == 0 || lead[i] < bounds[i])) bounds[i] = lead[i];
    }
    if (bounds[i] == 0) {
      throw NonIsolatedSingularity("no power of " + (*f.variables())[i] +
                                   " lies in the Jacobian ideal; the singularity is not isolated");
    }
  }
  return {std::move(gb), std::move(bounds)};
}

MilnorBasis milnor_basis(const Polynomial& f, const WeightVector& w) {
  if (!is_weighted_homogeneous(f, w)) {
    throw NotWeightedHomogeneous(f.str() + " is not weighted homogeneous for weights " + w.str());
  }
  const JacobianData jac = jacobian_ideal(f);
  const std::size_t n = f.num_variables();

  MilnorBasis out{{}, w, n};
  // Every standard monomial lies in the box [0, k_i) because x_i^{k_i} is
  // a leading term.
  ExponentVector m(n, 0);
  for (;;) {
    if (jac.basis.is_standard(m)) out.monomials.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] == jac.pure_power_bounds[i]) m[i++] = 0;
    if (i == n) break;
  }

  std::vector<std::pair<Rational, ExponentVector>> keyed;
  keyed.reserve(out.monomials.size());
  for (auto& mono : out.monomials) keyed.emplace_back(weighted_degree(mono, w), std::move(mono));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return grevlex_greater(b.second, a.second);
  });
  out.monomials.clear();
  for (auto& [deg, mono] : keyed) out.monomials.push_back(std::move(mono));
  return out;
}

std::size_t milnor_number(const Polynomial& f, const WeightVector& w) {
  const MilnorBasis basis = milnor_basis(f, w);
  const Rational closed = w.milnor_product();
  if (!closed.is_integer() || closed.sign() < 0 ||
      closed != Rational(static_cast<long>(basis.size()))) {
    throw ConsistencyFailure("standard-monomial count " + std::to_string(basis.size()) +
                             " disagrees with prod(1/w_i - 1) = " + closed.str());
  }
  return basis.size();
}

}  // namespace singspec
