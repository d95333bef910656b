// Release criteria. One PASS/FAIL line per criterion; exits nonzero if any
// criterion fails. Usage: singspec_acceptance <path to singspec CLI>.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cover_oracle.hpp"
#include "singspec/corpus.hpp"
#include "singspec/error.hpp"
#include "singspec/milnor.hpp"
#include "singspec/parser.hpp"
#include "singspec/report.hpp"
#include "singspec/snc_model.hpp"
#include "singspec/spectrum.hpp"

using namespace singspec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Computed {
  std::string label;
  std::int64_t n;
  WeightVector w;
  MilnorBasis basis;
  FracPoly via_basis;
  FracPoly via_product;
};

std::vector<Computed> compute_grid() {
  std::vector<Computed> out;
  for (const auto& c : brieskorn_pham_grid(6, 4)) {
    const Polynomial f = parse_polynomial(c.polynomial, c.variables);
    const WeightVector w = infer_weights(f);
    MilnorBasis b = milnor_basis(f, w);
    FracPoly sb = sp_from_basis(b);
    out.push_back({c.polynomial, static_cast<std::int64_t>(c.variables.size()), w, std::move(b), std::move(sb),
                   sp_product_formula(w)});
  }
  return out;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Rational R(long p, long q = 1) { return Rational(p, q); }

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  std::vector<Computed> grid;

  criteria.emplace_back("dual-route spectrum equality on the Brieskorn-Pham grid", [&] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    grid = compute_grid();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(grid.size() >= 100, "corpus has fewer than 100 cases");
    for (const auto& c : grid) o.require(c.via_basis == c.via_product, c.label);
    o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(grid.size()) + " cases, " + std::to_string(secs).substr(0, 5) + " s";
    return o;
  });

  criteria.emplace_back("cusp x^2+y^3: mu = 2, spectrum t^(5/6) + t^(7/6) by both routes", [] {
    Outcome o;
    const Polynomial f = parse_polynomial("x^2+y^3", {"x", "y"});
    const WeightVector w({R(1, 2), R(1, 3)});
    const MilnorBasis b = milnor_basis(f, w);
    o.require(b.monomials == std::vector<ExponentVector>{{0, 0}, {0, 1}}, "basis is not {1, y}");
    o.require(milnor_number(f, w) == 2, "mu != 2");
    o.require(sp_from_basis(b).str() == "t^(5/6) + t^(7/6)", "basis route: " + sp_from_basis(b).str());
    o.require(sp_product_formula(w).str() == "t^(5/6) + t^(7/6)", "product route: " + sp_product_formula(w).str());
    return o;
  });

  criteria.emplace_back("symmetry of every corpus spectrum", [&] {
    Outcome o;
    for (const auto& c : grid) o.require(check_symmetry(c.via_product, c.n), c.label);
    return o;
  });

  criteria.emplace_back("mu: coefficient sum = prod(1/w_i - 1) = standard-monomial count", [&] {
    Outcome o;
    for (const auto& c : grid) {
      const Rational sum(c.via_product.coefficient_sum());
      o.require(sum == c.w.milnor_product(), c.label + ": closed form");
      o.require(sum == Rational(static_cast<long>(c.basis.size())), c.label + ": basis size");
    }
    return o;
  });

  criteria.emplace_back("monodromy conventions and characteristic polynomial", [&] {
    Outcome o;
    for (const auto& c : grid) {
      const EigenMultiset gc = eigenvalues_gamma_c(c.via_product);
      o.require(eigenvalues_geometric(gc) == direct_residues(c.via_product), c.label + ": triangle");
      o.require(eigenvalues_geometric(eigenvalues_geometric(gc)) == gc, c.label + ": involution");
      const Polynomial cp = char_poly(gc);
      o.require(total_degree(leading_exponent(cp)) == c.basis.size(), c.label + ": degree");
      for (const auto& [m, coef] : cp.terms()) o.require(coef.denominator() == 1, c.label + ": coefficient");
    }
    return o;
  });

  criteria.emplace_back("I2 fixture: nearby class 0, euler 0", [] {
    Outcome o;
    const EquivClass c = nearby_fiber_class(parse_model(fixture_i2_model()), NearbyVariant::kTotalSpace);
    o.require(c.is_zero(), "class " + c.str());
    o.require(euler_specialization(c) == 0, "euler nonzero");
    return o;
  });

  criteria.emplace_back("cusp fixture: local spectrum t^(5/6) + t^(7/6), euler -1", [] {
    Outcome o;
    const SncModel m = parse_model(fixture_cusp_model());
    const SncModel oracle = testing::oracle_model(testing::cusp_resolution());
    for (const auto& s : m.strata()) {
      bool matched = false;
      for (const auto& t : oracle.strata()) {
        std::vector<std::string> a = s.ids, b = t.ids;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) matched = t.cover_class == s.cover_class;
      }
      o.require(matched, "fixture stratum disagrees with character count");
    }
    const EquivClass c = nearby_fiber_class(m, NearbyVariant::kTotalSpace);
    const FracPoly sp_prime = milnor_sp_prime(c, m.dimension());
    const FracPoly expected = sp_product_formula(WeightVector({R(1, 2), R(1, 3)}));
    o.require(sp_prime == expected, "Sp' = " + sp_prime.str());
    o.require(sp_twist(sp_prime, m.dimension()) == expected, "Sp = " + sp_twist(sp_prime, m.dimension()).str());
    o.require(euler_specialization(c) == -1, "euler " + std::to_string(euler_specialization(c)));
    std::int64_t acampo = 0;  // only singleton strata survive L -> 1
    for (const auto& s : m.strata()) {
      if (s.ids.size() == 1) acampo += euler_specialization(s.cover_class);
    }
    o.require(acampo == -1, "A'Campo sum " + std::to_string(acampo));
    return o;
  });

  criteria.emplace_back("GCD formulas on 10 multiplicity tuples", [] {
    Outcome o;
    struct Row {
      std::vector<std::int64_t> ms;
      std::int64_t adjacent;
      std::int64_t degree;
      std::int64_t components;
    };
    const std::vector<Row> table = {
        {{6}, 4, 6, 2},        {{4, 6}, 3, 2, 1},    {{2, 3}, 6, 1, 1},  {{6}, 1, 6, 1},
        {{2, 4}, 3, 2, 1},     {{12, 18}, 8, 6, 2},  {{5}, 10, 5, 5},    {{8, 12, 20}, 6, 4, 2},
        {{9, 15}, 21, 3, 3},   {{7, 14}, 28, 7, 7},
    };
    for (std::size_t r = 0; r < table.size(); ++r) {
      std::vector<SncComponent> comps;
      std::vector<std::string> ids;
      for (std::size_t i = 0; i < table[r].ms.size(); ++i) {
        comps.push_back({"E" + std::to_string(i), table[r].ms[i], ComponentKind::kVertical});
        ids.push_back(comps.back().id);
      }
      comps.push_back({"A", table[r].adjacent, ComponentKind::kVertical});
      const SncModel m(2, comps, {});
      o.require(covering_degree(ids, m) == table[r].degree, "row " + std::to_string(r) + ": covering degree");
      o.require(component_count_cstar(ids, "A", m) == table[r].components,
                "row " + std::to_string(r) + ": component count");
    }
    return o;
  });

  criteria.emplace_back("spectrum functionals agree on 1000 random classes", [] {
    Outcome o;
    ClassGenerator gen(20240601);
    for (int i = 0; i < 1000; ++i) {
      const EquivClass c = gen.next();
      const auto n = static_cast<std::int64_t>(gen.uniform(1, 4));
      o.require(sp_twist(sp_prime_of_class(c), n) == sp_of_class_hodge(c, n), c.str());
    }
    return o;
  });

  criteria.emplace_back("determinism: two `check --json` runs are byte-identical", [&] {
    Outcome o;
    if (cli.empty()) {
      o.require(false, "no CLI path given");
      return o;
    }
    int s1 = 0, s2 = 0;
    const std::string a = run_command("'" + cli + "' check --json", s1);
    const std::string b = run_command("'" + cli + "' check --json", s2);
    o.require(s1 == 0 && s2 == 0, "check exited nonzero");
    o.require(!a.empty(), "empty output");
    o.require(a == b, "outputs differ");
    return o;
  });

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return failures ? 1 : 0;
}
