#include <algorithm>
#include <functional>

#include "singspec/corpus.hpp"
#include "singspec/error.hpp"
#include "singspec/milnor.hpp"
#include "singspec/parser.hpp"
#include "singspec/report.hpp"
#include "singspec/snc_model.hpp"
#include "singspec/spectrum.hpp"

namespace singspec {

namespace {

const std::vector<std::string> kVarNames = {"x", "y", "z", "w"};

}  // namespace

std::vector<CorpusCase> brieskorn_pham_grid(std::uint32_t max_exponent, std::uint32_t max_vars) {
  std::vector<CorpusCase> out;
  for (std::uint32_t n = 1; n <= max_vars; ++n) {
    std::vector<std::uint32_t> a(n, 2);
    for (;;) {
      CorpusCase c;
      std::vector<std::string> vars(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        vars[i] = n <= kVarNames.size() ? kVarNames[i] : "x" + std::to_string(i + 1);
        if (i) c.polynomial += " + ";
        c.polynomial += vars[i] + "^" + std::to_string(a[i]);
      }
      c.label = "BP(";
      for (std::uint32_t i = 0; i < n; ++i) c.label += (i ? "," : "") + std::to_string(a[i]);
      c.label += ")";
      c.variables = std::move(vars);
      out.push_back(std::move(c));
      std::uint32_t i = n;
      while (i-- > 0) {
        if (++a[i] <= max_exponent) break;
        a[i] = 2;
      }
      if (i == static_cast<std::uint32_t>(-1)) break;
    }
  }
  return out;
}

std::vector<CorpusCase> named_cases() {
  return {
      {"D4", "x^2*y + y^3", {"x", "y"}},
      {"D4'", "x^2*y + x*y^2", {"x", "y"}},
      {"D5", "x^2*y + y^4", {"x", "y"}},
      {"D6", "x^2*y + y^5", {"x", "y"}},
      {"E6", "x^3 + y^4", {"x", "y"}},
      {"E7", "x^3 + x*y^3", {"x", "y"}},
      {"E8", "x^3 + y^5", {"x", "y"}},
      {"quartic4lines", "x^4 + x^2*y^2 + y^4", {"x", "y"}},
      {"D4+z2", "x^2*y + y^3 + z^2", {"x", "y", "z"}},
      {"E7+z2", "x^3 + x*y^3 + z^2", {"x", "y", "z"}},
      {"smooth-cubic-cone", "x^3 + y^3 + z^3 + x*y*z", {"x", "y", "z"}},
      {"cyclic-cubic", "x^2*y + y^2*z + z^2*x", {"x", "y", "z"}},
      {"Klein-quartic", "x^3*y + y^3*z + z^3*x", {"x", "y", "z"}},
      {"D4+A3", "x^2*y + y^3 + z^4", {"x", "y", "z"}},
  };
}

std::int64_t ClassGenerator::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(engine_() % span);
}

EquivClass ClassGenerator::next() {
  EquivClass c;
  const auto entries = uniform(1, 6);
  for (std::int64_t i = 0; i < entries; ++i) {
    const auto den = uniform(1, 12);
    const auto num = uniform(0, den - 1);
    c.add(static_cast<std::int32_t>(uniform(-3, 3)), static_cast<std::int32_t>(uniform(-3, 3)),
          Rational(num, den), uniform(-5, 5));
  }
  return c;
}

namespace {

constexpr std::size_t kMaxFailuresListed = 5;

class Tally {
 public:
  void record(const std::string& name, const std::string& label, const std::function<bool()>& pred) {
    auto& line = find(name);
    ++line.total;
    bool ok = false;
    try {
      ok = pred();
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok) {
      ++line.passed;
    } else if (line.failures.size() < kMaxFailuresListed) {
      line.failures.push_back(label);
    }
  }

  std::vector<CheckLine> lines() const { return lines_; }

 private:
  CheckLine& find(const std::string& name) {
    for (auto& l : lines_) {
      if (l.name == name) return l;
    }
    lines_.push_back(CheckLine{name, 0, 0, {}});
    return lines_.back();
  }

  std::vector<CheckLine> lines_;
};

}  // namespace

CheckSection run_check() {
  Tally tally;
  std::vector<CorpusCase> corpus = brieskorn_pham_grid();
  const auto named = named_cases();
  corpus.insert(corpus.end(), named.begin(), named.end());

  for (const auto& c : corpus) {
    const Polynomial f = parse_polynomial(c.polynomial, c.variables);
    const auto n = static_cast<std::int64_t>(c.variables.size());
    WeightVector w;
    MilnorBasis basis;
    FracPoly by_basis, by_product;
    bool built = false;
    try {
      w = infer_weights(f);
      basis = milnor_basis(f, w);
      by_basis = sp_from_basis(basis);
      by_product = sp_product_formula(w);
      built = true;
    } catch (const std::exception&) {
    }
    tally.record("pipeline completes", c.label, [&] { return built; });
    if (!built) continue;

    tally.record("dual-route spectrum equality", c.label, [&] { return by_basis == by_product; });
    tally.record("symmetry Sp = t^n iota(Sp)", c.label, [&] { return check_symmetry(by_product, n); });
    tally.record("mu: coefficient sum = prod(1/w_i - 1) = basis size", c.label, [&] {
      const auto mu = static_cast<long>(basis.size());
      return Rational(by_product.coefficient_sum()) == w.milnor_product() && w.milnor_product() == Rational(mu) &&
             milnor_number(f, w) == basis.size();
    });
    tally.record("support in [sum w, n - sum w]", c.label, [&] {
      const Rational lo = w.sum(), hi = Rational(static_cast<long>(n)) - w.sum();
      return std::all_of(by_product.terms().begin(), by_product.terms().end(),
                         [&](const auto& t) { return t.first >= lo && t.first <= hi && t.second > 0; });
    });
    tally.record("monodromy conventions close", c.label, [&] {
      const EigenMultiset gc = eigenvalues_gamma_c(by_product);
      return eigenvalues_geometric(gc) == direct_residues(by_product) &&
             eigenvalues_geometric(eigenvalues_geometric(gc)) == gc;
    });
    tally.record("char_poly degree = mu, integer coefficients", c.label, [&] {
      const Polynomial cp = char_poly(eigenvalues_gamma_c(by_product));
      const bool integral = std::all_of(cp.terms().begin(), cp.terms().end(),
                                        [](const auto& t) { return t.second.is_integer(); });
      return integral && leading_exponent(cp)[0] == basis.size() && cp.coefficient({static_cast<std::uint32_t>(basis.size())}) == Rational(1);
    });
    tally.record("spectrum at infinity = local spectrum", c.label,
                 [&] { return sp_at_infinity(f, w) == by_product; });
    if (n >= 2 && c.label.rfind("BP(", 0) == 0) {
      tally.record("Thom-Sebastiani factorization", c.label, [&] {
        const WeightVector head({w[0]});
        const WeightVector tail(std::vector<Rational>(w.begin() + 1, w.end()));
        return sp_product_formula(head) * sp_product_formula(tail) == by_product;
      });
    }
  }

  // Thom-Sebastiani on sums of two named singularities in disjoint variables.
  for (std::size_t i = 0; i + 1 < named.size(); ++i) {
    const auto& a = named[i];
    const auto& b = named[i + 1];
    tally.record("Thom-Sebastiani factorization", a.label + "+" + b.label, [&] {
      const WeightVector wa = infer_weights(parse_polynomial(a.polynomial, a.variables));
      const WeightVector wb = infer_weights(parse_polynomial(b.polynomial, b.variables));
      return sp_product_formula(concat(wa, wb)) == sp_product_formula(wa) * sp_product_formula(wb);
    });
  }

  // Motivic fixtures.
  const SncModel i2 = parse_model(fixture_i2_model());
  const SncModel cusp = parse_model(fixture_cusp_model());
  tally.record("I2 nearby class = 0, euler = 0", "I2", [&] {
    const EquivClass c = nearby_fiber_class(i2, NearbyVariant::kTotalSpace);
    return c.is_zero() && euler_specialization(c) == 0;
  });
  tally.record("cusp model spectrum = product formula", "cusp", [&] {
    const NearbySection s = run_nearby(cusp, "cusp", "local");
    const FracPoly expected = sp_product_formula(WeightVector({Rational(1, 2), Rational(1, 3)}));
    return s.sp_prime == expected && s.sp == expected && s.euler == -1;
  });
  tally.record("model files round-trip", "fixtures", [&] {
    return write_model(i2) == fixture_i2_model() && write_model(cusp) == fixture_cusp_model();
  });

  ClassGenerator gen(20240601);
  for (int i = 0; i < 1000; ++i) {
    const EquivClass c = gen.next();
    const auto n = gen.uniform(1, 4);
    tally.record("Sp' functional vs Hodge-filtration functional", "class#" + std::to_string(i),
                 [&] { return sp_twist(sp_prime_of_class(c), n) == sp_of_class_hodge(c, n); });
  }

  CheckSection out;
  out.corpus_size = static_cast<std::int64_t>(corpus.size());
  out.lines = tally.lines();
  return out;
}

}  // namespace singspec
