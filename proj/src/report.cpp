#include "singspec/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "singspec/error.hpp"
#include "singspec/milnor.hpp"
#include "singspec/parser.hpp"

namespace singspec {

using ojson = nlohmann::ordered_json;

namespace {

std::string render_monomial(const ExponentVector& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

// Eigenvalue multisets render as [["u/v", mult], ...] in ascending angle.
ojson eigen_json(const EigenMultiset& e) {
  ojson a = ojson::array();
  for (const auto& [theta, c] : e.entries()) a.push_back(ojson::array({theta.str(), c}));
  return a;
}

EigenMultiset eigen_from_json(const ojson& a) {
  EigenMultiset e;
  for (const auto& item : a) e.add(Rational::parse(item.at(0).get<std::string>()), item.at(1).get<std::int64_t>());
  return e;
}

ojson class_json(const EquivClass& c) {
  ojson a = ojson::array();
  for (const auto& [k, m] : c.entries()) a.push_back(ojson::array({k.p, k.q, k.angle.str(), m}));
  return a;
}

EquivClass class_from_json(const ojson& a) {
  EquivClass c;
  for (const auto& item : a) {
    c.add(item.at(0).get<std::int32_t>(), item.at(1).get<std::int32_t>(),
          Rational::parse(item.at(2).get<std::string>()), item.at(3).get<std::int64_t>());
  }
  return c;
}

}  // namespace

bool CheckSection::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok(); });
}

std::string Report::to_json() const {
  ojson doc;
  doc["command"] = command;
  if (spectrum) {
    const auto& s = *spectrum;
    ojson j;
    j["input"] = s.input;
    j["variables"] = s.variables;
    ojson w = ojson::array();
    for (const auto& wi : s.weights) w.push_back(wi.str());
    j["weights"] = w;
    j["milnor_number"] = s.milnor_number;
    j["basis"] = s.basis;
    j["spectrum"] = s.spectrum.str();
    j["symmetric"] = s.symmetric;
    j["eigenvalues_gamma_c"] = eigen_json(s.eigenvalues_gamma_c);
    j["eigenvalues_geometric"] = eigen_json(s.eigenvalues_geometric);
    j["char_poly"] = s.char_poly;
    doc["spectrum"] = std::move(j);
  }
  if (nearby) {
    const auto& n = *nearby;
    ojson j;
    j["model"] = n.model;
    j["variant"] = n.variant;
    j["dim"] = n.dim;
    j["nearby_class"] = class_json(n.nearby_class);
    j["euler"] = n.euler;
    j["sp_prime"] = n.sp_prime.str();
    j["sp"] = n.sp.str();
    j["missing_components"] = n.missing_components;
    doc["nearby"] = std::move(j);
  }
  if (check) {
    ojson j;
    j["corpus_size"] = check->corpus_size;
    j["ok"] = check->ok();
    ojson lines = ojson::array();
    for (const auto& l : check->lines) {
      ojson jl;
      jl["name"] = l.name;
      jl["passed"] = l.passed;
      jl["total"] = l.total;
      jl["failures"] = l.failures;
      lines.push_back(std::move(jl));
    }
    j["lines"] = std::move(lines);
    doc["check"] = std::move(j);
  }
  return doc.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
  Report r;
  try {
    const ojson doc = ojson::parse(text);
    r.command = doc.at("command").get<std::string>();
    if (doc.contains("spectrum")) {
      const auto& j = doc["spectrum"];
      SpectrumSection s;
      s.input = j.at("input").get<std::string>();
      s.variables = j.at("variables").get<std::vector<std::string>>();
      for (const auto& w : j.at("weights")) s.weights.push_back(Rational::parse(w.get<std::string>()));
      s.milnor_number = j.at("milnor_number").get<std::int64_t>();
      s.basis = j.at("basis").get<std::vector<std::string>>();
      s.spectrum = FracPoly::parse(j.at("spectrum").get<std::string>());
      s.symmetric = j.at("symmetric").get<bool>();
      s.eigenvalues_gamma_c = eigen_from_json(j.at("eigenvalues_gamma_c"));
      s.eigenvalues_geometric = eigen_from_json(j.at("eigenvalues_geometric"));
      s.char_poly = j.at("char_poly").get<std::string>();
      r.spectrum = std::move(s);
    }
    if (doc.contains("nearby")) {
      const auto& j = doc["nearby"];
      NearbySection n;
      n.model = j.at("model").get<std::string>();
      n.variant = j.at("variant").get<std::string>();
      n.dim = j.at("dim").get<std::int64_t>();
      n.nearby_class = class_from_json(j.at("nearby_class"));
      n.euler = j.at("euler").get<std::int64_t>();
      n.sp_prime = FracPoly::parse(j.at("sp_prime").get<std::string>());
      n.sp = FracPoly::parse(j.at("sp").get<std::string>());
      n.missing_components = j.at("missing_components").get<std::vector<std::string>>();
      r.nearby = std::move(n);
    }
    if (doc.contains("check")) {
      const auto& j = doc["check"];
      CheckSection c;
      c.corpus_size = j.at("corpus_size").get<std::int64_t>();
      for (const auto& jl : j.at("lines")) {
        CheckLine l;
        l.name = jl.at("name").get<std::string>();
        l.passed = jl.at("passed").get<std::int64_t>();
        l.total = jl.at("total").get<std::int64_t>();
        l.failures = jl.at("failures").get<std::vector<std::string>>();
        c.lines.push_back(std::move(l));
      }
      r.check = std::move(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("", std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("", std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (spectrum) {
    const auto& s = *spectrum;
    std::string w;
    for (std::size_t i = 0; i < s.weights.size(); ++i) w += (i ? "," : "") + s.weights[i].str();
    std::string vars;
    for (std::size_t i = 0; i < s.variables.size(); ++i) vars += (i ? "," : "") + s.variables[i];
    std::string basis;
    for (std::size_t i = 0; i < s.basis.size(); ++i) basis += (i ? ", " : "") + s.basis[i];
    os << "input:        " << s.input << "\n"
       << "variables:    " << vars << "\n"
       << "weights:      " << w << "\n"
       << "mu:           " << s.milnor_number << "\n"
       << "basis:        " << basis << "\n"
       << "spectrum:     " << s.spectrum.str() << "\n"
       << "symmetric:    " << (s.symmetric ? "true" : "false") << "\n"
       << "gamma_c:      " << s.eigenvalues_gamma_c.str() << "\n"
       << "geometric:    " << s.eigenvalues_geometric.str() << "\n"
       << "char_poly:    " << s.char_poly << "\n";
  }
  if (nearby) {
    const auto& n = *nearby;
    os << "model:        " << n.model << "\n"
       << "variant:      " << n.variant << "\n"
       << "dim:          " << n.dim << "\n"
       << "class:        " << n.nearby_class.str() << "\n"
       << "euler:        " << n.euler << "\n"
       << "sp_prime:     " << n.sp_prime.str() << "\n"
       << "sp:           " << n.sp.str() << "\n";
  }
  if (check) {
    for (const auto& l : check->lines) {
      os << (l.ok() ? "PASS " : "FAIL ") << l.name << " (" << l.passed << "/" << l.total << ")";
      if (!l.failures.empty()) {
        os << " first failures:";
        for (const auto& f : l.failures) os << " " << f;
      }
      os << "\n";
    }
    os << "corpus size: " << check->corpus_size << "\n"
       << (check->ok() ? "all checks passed" : "CHECK FAILED") << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

SpectrumSection run_sp(const std::string& polynomial, const std::vector<std::string>& variables,
                       const std::optional<WeightVector>& weights) {
  const Variables vars = make_variables(variables);
  const Polynomial f = parse_polynomial(polynomial, vars);
  if (f.is_zero()) throw NonIsolatedSingularity("the zero polynomial has no isolated singularity");

  // Isolation does not depend on weights; check it first so that
  // non-isolated input is reported as such rather than as a weight problem.
  jacobian_ideal(f);

  const WeightVector w = weights ? *weights : infer_weights(f);
  if (w.size() != f.num_variables()) {
    throw LengthMismatch("got " + std::to_string(w.size()) + " weights for " +
                         std::to_string(f.num_variables()) + " variables");
  }

  const MilnorBasis basis = milnor_basis(f, w);
  const std::size_t mu = milnor_number(f, w);
  const FracPoly by_basis = sp_from_basis(basis);
  FracPoly by_product;
  try {
    by_product = sp_product_formula(w);
  } catch (const NonExactDivision& e) {
    throw ConsistencyFailure(std::string("product formula failed on an accepted input: ") + e.what());
  }
  if (by_basis != by_product) {
    throw ConsistencyFailure("basis route gives " + by_basis.str() + " but product formula gives " +
                             by_product.str());
  }

  const auto n = static_cast<std::int64_t>(f.num_variables());
  SpectrumSection s;
  s.input = polynomial;
  s.variables = variables;
  s.weights = w.values();
  s.milnor_number = static_cast<std::int64_t>(mu);
  for (const auto& m : basis.monomials) s.basis.push_back(render_monomial(m, variables));
  s.spectrum = by_product;
  s.symmetric = check_symmetry(by_product, n);
  s.eigenvalues_gamma_c = eigenvalues_gamma_c(by_product);
  s.eigenvalues_geometric = eigenvalues_geometric(s.eigenvalues_gamma_c);
  s.char_poly = char_poly(s.eigenvalues_gamma_c).str();
  return s;
}

NearbySection run_nearby(const SncModel& model, const std::string& model_label, const std::string& variant,
                         std::optional<std::int64_t> dim) {
  NearbySection out;
  out.model = model_label;
  out.variant = variant;
  out.dim = dim ? *dim : model.dimension();
  out.missing_components = model.missing_strata();
  if (variant == "total") {
    out.nearby_class = nearby_fiber_class(model, NearbyVariant::kTotalSpace);
    out.sp_prime = sp_prime_of_class(out.nearby_class);
  } else if (variant == "open") {
    out.nearby_class = nearby_fiber_class(model, NearbyVariant::kOpenComplement);
    out.sp_prime = sp_prime_of_class(out.nearby_class);
  } else if (variant == "local") {
    // Strata over the singular point only; the class then contains H^0 = 1.
    out.nearby_class = nearby_fiber_class(model, NearbyVariant::kTotalSpace);
    out.sp_prime = milnor_sp_prime(out.nearby_class, out.dim);
  } else {
    throw ModelError("unknown variant '" + variant + "'; expected total, open or local");
  }
  out.euler = euler_specialization(out.nearby_class);
  out.sp = sp_twist(out.sp_prime, out.dim);
  return out;
}

}  // namespace singspec
