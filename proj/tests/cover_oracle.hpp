#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "singspec/snc_model.hpp"
#include "singspec/spectrum.hpp"

namespace singspec::testing {

// ---------------------------------------------------------------------------
// Oracle: cover classes of an embedded resolution whose exceptional curves
// are all rational, derived from the character decomposition of cyclic
// covers of P^1 (Chevalley-Weil). For a connected cover w^m = prod (z-p_j)^{a_j}
// with deck transformation w -> exp(2 pi i/m) w, the pullback eigenspace of
// holomorphic 1-forms on which the generator acts by exp(-2 pi i k/m) has
// dimension -1 + sum_j <k a_j / m>.
// ---------------------------------------------------------------------------

struct Resolution {
  std::vector<SncComponent> exceptional;  // rational curves over the origin
  std::vector<SncComponent> branches;     // strict transforms
  std::vector<std::pair<std::string, std::string>> edges;
};

inline SncComponent V(const std::string& id, std::int64_t m) { return {id, m, ComponentKind::kVertical}; }

// Permutation representation of Z/g acting on g points by a cycle.
inline void add_regular(EquivClass& c, std::int64_t g, std::int32_t p, std::int32_t q, std::int64_t sign) {
  for (std::int64_t i = 0; i < g; ++i) c.add(p, q, Rational(i, g), sign);
}

// Signed class sum_j (-1)^j H^j_c of the punctured cover of P^1 minus the
// points p_j, for the cyclic group of order m.
inline EquivClass punctured_cover_class(std::int64_t m, const std::vector<std::int64_t>& a) {
  std::int64_t g = m;
  for (auto aj : a) g = std::gcd(g, aj);
  const std::int64_t mp = m / g;
  std::vector<std::int64_t> ap;
  for (auto aj : a) ap.push_back((aj / g) % mp);

  // One connected component C', acted on by the stabilizer (order mp).
  EquivClass comp = EquivClass::lefschetz() + EquivClass::unit();  // H^2_c + H^0(C)
  for (auto aj : ap) add_regular(comp, std::gcd(mp, aj), 0, 0, -1);    // - H^0(punctures)
  std::int64_t genus = 0;
  for (std::int64_t k = 1; k < mp; ++k) {
    Rational dim(-1);
    for (auto aj : ap) dim += residue(Rational(k * aj, mp));
    if (dim.denominator() != 1 || dim.sign() < 0) throw std::logic_error("bad character count");
    const std::int64_t d = dim.to_int64();
    genus += d;
    comp.add(1, 0, Rational(-k, mp), -d);  // - H^{1,0}
    comp.add(0, 1, Rational(k, mp), -d);   // - H^{0,1}
  }
  // Riemann-Hurwitz cross-check.
  std::int64_t ramification = 0;
  for (auto aj : ap) ramification += mp - std::gcd(mp, aj);
  if (2 * genus - 2 != -2 * mp + ramification) throw std::logic_error("Riemann-Hurwitz mismatch");

  // Induce from the stabilizer of index g: angle t becomes (t + i)/g.
  EquivClass out;
  for (const auto& [key, mult] : comp.entries()) {
    for (std::int64_t i = 0; i < g; ++i) out.add(key.p, key.q, (key.angle + Rational(i)) / Rational(g), mult);
  }
  return out;
}

inline SncModel oracle_model(const Resolution& res) {
  std::vector<SncComponent> comps = res.exceptional;
  comps.insert(comps.end(), res.branches.begin(), res.branches.end());
  auto mult = [&](const std::string& id) {
    for (const auto& c : comps) {
      if (c.id == id) return c.multiplicity;
    }
    throw std::logic_error("unknown id " + id);
  };
  std::vector<Stratum> strata;
  for (const auto& e : res.exceptional) {
    std::vector<std::int64_t> a;
    for (const auto& [u, v] : res.edges) {
      if (u == e.id) a.push_back(mult(v));
      if (v == e.id) a.push_back(mult(u));
    }
    strata.push_back({{e.id}, punctured_cover_class(e.multiplicity, a)});
  }
  for (const auto& [u, v] : res.edges) {
    EquivClass pts;
    add_regular(pts, std::gcd(mult(u), mult(v)), 0, 0, 1);
    strata.push_back({{u, v}, pts});
  }
  return SncModel(2, comps, strata);
}

inline Resolution cusp_resolution() {
  return {{V("E1", 2), V("E2", 3), V("E3", 6)}, {V("S", 1)}, {{"E1", "E3"}, {"E2", "E3"}, {"E3", "S"}}};
}

// One blow-up of a homogeneous curve of degree d with d distinct lines.
inline Resolution cone_resolution(std::int64_t d) {
  Resolution r{{V("E", d)}, {}, {}};
  for (std::int64_t i = 0; i < d; ++i) {
    const std::string id = "S" + std::to_string(i);
    r.branches.push_back(V(id, 1));
    r.edges.emplace_back("E", id);
  }
  return r;
}

inline Resolution a3_resolution() {
  return {{V("E1", 2), V("E2", 4)}, {V("S1", 1), V("S2", 1)}, {{"E1", "E2"}, {"E2", "S1"}, {"E2", "S2"}}};
}

}  // namespace singspec::testing
